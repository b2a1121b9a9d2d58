use thiserror::Error;

/// Errors raised by gate construction, simulation and circuit parsing.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum QsimError {
    #[error("qubit {qubit} out of range for a {num_qubits}-qubit register")]
    QubitOutOfRange { qubit: usize, num_qubits: usize },

    #[error("qubit {qubit} appears more than once in gate operands")]
    DuplicateQubit { qubit: usize },

    #[error("gate {kind} takes {expected} target(s), got {got}")]
    WrongTargetCount {
        kind: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("gate {kind} takes {expected} control(s), got {got}")]
    WrongControlCount {
        kind: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("MCX needs at least one control")]
    EmptyControls,

    #[error("parametric gate {kind} has no angle or parameter slot")]
    MissingParameter { kind: &'static str },

    #[error("non-parametric gate {kind} carries an angle or parameter slot")]
    UnexpectedParameter { kind: &'static str },

    #[error("gate references parameter slot {slot} but no binding was supplied")]
    UnboundParameter { slot: usize },

    #[error("circuit has {expected} parameter slot(s), got {got} values")]
    ParamCountMismatch { expected: usize, got: usize },

    #[error("state of {state_qubits} qubits does not match circuit on {circuit_qubits}")]
    QubitCountMismatch {
        state_qubits: usize,
        circuit_qubits: usize,
    },

    #[error("amplitude vector of length {len} is not a power of two (>= 2)")]
    BadStateLength { len: usize },

    #[error("basis index {index} out of range for {num_qubits} qubits")]
    BasisIndexOutOfRange { index: usize, num_qubits: usize },

    #[error("expectation value has imaginary residue {imag:e} above tolerance")]
    ImaginaryResidue { imag: f64 },
}

/// Errors from reading the line-oriented circuit text format.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum CircuitParseError {
    #[error("missing `qubits N params P` header")]
    MissingHeader,

    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },

    #[error("line {line}: unknown gate `{name}`")]
    UnknownGate { line: usize, name: String },

    #[error("line {line}: {source}")]
    Gate { line: usize, source: QsimError },
}
