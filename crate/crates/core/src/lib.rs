//! Desk-scale workbench for quantum image classification experiments:
//! Fashion-MNIST style images are filtered, downscaled and optionally
//! PCA-projected, encoded into quantum states by threshold (basis) encoding
//! or NEQR, classified by a layered variational quantum circuit on a dense
//! statevector simulator, and compared against a classical MLP baseline.
//! A resource analyzer measures the circuit depth cost of NEQR.
//!
//! The numeric core is generic over the scalar type ([`scalar::Real`],
//! implemented for f32 and f64); the aliases below fix the default f64
//! instantiations.

pub mod baseline;
pub mod encoders;
pub mod imgdata;
pub mod qnn;
pub mod qsim;
pub mod scalar;

pub(crate) mod optim;

pub use scalar::Real;

/// Default f64 statevector.
pub type Statevector64 = qsim::Statevector<f64>;
/// Default f64 circuit.
pub type Circuit64 = qsim::Circuit<f64>;
/// Default f64 gate.
pub type Gate64 = qsim::Gate<f64>;
/// Default f64 Pauli observable.
pub type PauliObservable64 = qsim::PauliObservable<f64>;
/// Default f64 QNN model.
pub type QnnModel64 = qnn::QnnModel<f64>;
/// Default f64 MLP baseline.
pub type MlpModel64 = baseline::MlpModel<f64>;
/// Default f64 PCA model.
pub type PcaModel64 = imgdata::PcaModel<f64>;
