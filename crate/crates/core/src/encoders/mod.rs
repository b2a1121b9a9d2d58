//! Quantum state-preparation circuits from classical images: threshold
//! (basis) encoding, NEQR with compression, and resource reporting.

mod compress;
mod error;
mod neqr;
mod resource;
mod threshold;

pub use error::EncodeError;
pub use neqr::{neqr_compress, neqr_encode, neqr_readback, NeqrSpec};
pub use resource::{resource_report, ResourceReport, RESOURCE_CSV_HEADER};
pub use threshold::threshold_encode;
