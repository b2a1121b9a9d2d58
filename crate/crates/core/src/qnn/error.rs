use thiserror::Error;

use crate::qsim::QsimError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QnnError {
    #[error("model has {model} data qubits but the input circuit acts on {input}")]
    QubitCountMismatch { model: usize, input: usize },

    #[error("input circuit must be parameter-free, found {params} slot(s)")]
    ParameterizedInput { params: usize },

    #[error("{qubits} qubits exceed the dense-simulation ceiling of {max}")]
    TooManyQubits { qubits: usize, max: usize },

    #[error("dataset is empty")]
    EmptyDataset,

    #[error("{inputs} inputs but {labels} labels")]
    LengthMismatch { inputs: usize, labels: usize },

    #[error(transparent)]
    Sim(#[from] QsimError),
}
