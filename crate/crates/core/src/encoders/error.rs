use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EncodeError {
    #[error("image is {width}x{height}; NEQR needs a square power-of-two side")]
    BadImageShape { width: usize, height: usize },

    #[error("gray bit depth {q} out of range (1..=8)")]
    BadBitDepth { q: usize },

    #[error("pixel value {value} does not fit in {q} bits")]
    PixelOutOfRange { value: u8, q: usize },

    #[error("threshold encoding expects 0/1 entries, got {value}")]
    NotBinary { value: u8 },

    #[error("state does not look like a NEQR image: position {position} has {candidates} grayscale candidate(s)")]
    CorruptState { position: usize, candidates: usize },

    #[error("state has {state_qubits} qubits but the spec needs {expected}")]
    QubitMismatch {
        state_qubits: usize,
        expected: usize,
    },
}
