//! Dense statevector simulation: gates, circuits, Pauli expectations and
//! decomposition for resource accounting.

mod circuit;
mod decompose;
mod error;
mod gate;
mod pauli;
mod state;

pub use circuit::Circuit;
pub use decompose::{decompose, DecomposeBasis};
pub use error::{CircuitParseError, QsimError};
pub use gate::{Gate, GateKind, GateParam};
pub use pauli::{pauli_bilinear, Pauli, PauliObservable, PauliString};
pub use state::Statevector;
