//! Threshold (basis) encoding: one X gate per set entry of a binarized
//! image, qubit index = pixel index.

use super::error::EncodeError;
use crate::qsim::{Circuit, Gate};
use crate::scalar::Real;

/// Circuit on `bits.len()` qubits containing exactly one X per 1-entry.
pub fn threshold_encode<T: Real>(bits: &[u8]) -> Result<Circuit<T>, EncodeError> {
    let mut circuit = Circuit::new(bits.len().max(1));
    for (i, &b) in bits.iter().enumerate() {
        match b {
            0 => {}
            1 => circuit.push(Gate::x(i)).expect("index in range"),
            other => return Err(EncodeError::NotBinary { value: other }),
        }
    }
    Ok(circuit)
}
