//! Layered variational quantum classifier with hinge loss, parameter-shift
//! gradients and Adam training. Accepts any parameter-free encoder circuit
//! on the data qubits (threshold or NEQR) by prepending it to the model.

mod error;
mod grad;
mod loss;
mod model;
mod train;

pub use error::QnnError;
pub use grad::{batch_loss, expectation_gradient, forward_and_gradient, grad_parameter_shift};
pub use loss::{batch_hinge_loss, hinge_accuracy, hinge_loss};
pub use model::{build_model, CouplingKind, QnnModel, ReadoutObservable, MAX_SIM_QUBITS};
pub use train::{batch_forward_and_gradient, train, EpochMetrics, TrainConfig, TrainReport};

pub use crate::optim::Optimizer;
