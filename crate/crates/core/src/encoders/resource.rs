//! Circuit resource accounting: raw and STANDARD-basis depth/size.

use crate::qsim::{decompose, Circuit, DecomposeBasis, GateKind};
use crate::scalar::Real;

/// Depth/size of a circuit before and after STANDARD-basis decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ResourceReport {
    pub qubits: usize,
    pub size_raw: usize,
    pub depth_raw: usize,
    pub size_std: usize,
    pub depth_std: usize,
    pub mcx_count: usize,
}

pub fn resource_report<T: Real>(circuit: &Circuit<T>) -> ResourceReport {
    let std = decompose(circuit, DecomposeBasis::Standard);
    ResourceReport {
        qubits: circuit.num_qubits(),
        size_raw: circuit.size(),
        depth_raw: circuit.depth(),
        size_std: std.size(),
        depth_std: std.depth(),
        mcx_count: circuit
            .gates()
            .iter()
            .filter(|g| g.kind() == GateKind::Mcx)
            .count(),
    }
}

/// Header for the CSV rows produced by [`ResourceReport::csv_row`].
pub const RESOURCE_CSV_HEADER: &str =
    "image_side,q,qubits,size_raw,depth_raw,size_std,depth_std,mcx_count,compressed";

impl ResourceReport {
    /// One CSV row tagged with the encoding configuration it measures.
    pub fn csv_row(&self, image_side: usize, q: usize, compressed: bool) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            image_side,
            q,
            self.qubits,
            self.size_raw,
            self.depth_raw,
            self.size_std,
            self.depth_std,
            self.mcx_count,
            compressed
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::encoders::neqr_encode;
    use crate::imgdata::GrayImage;

    #[test]
    fn empty_circuit_reports_zeros() {
        let c = Circuit::<f64>::new(2);
        let r = resource_report(&c);
        assert_eq!(r.size_raw, 0);
        assert_eq!(r.depth_raw, 0);
        assert_eq!(r.size_std, 0);
        assert_eq!(r.depth_std, 0);
        assert_eq!(r.mcx_count, 0);
    }

    #[test]
    fn standard_size_grows_when_mcx_present() {
        let image = GrayImage::new(2, 2, vec![3, 0, 1, 2]).unwrap();
        let c = neqr_encode::<f64>(&image, 2).unwrap();
        let r = resource_report(&c);
        assert!(r.mcx_count > 0);
        assert!(r.size_std > r.size_raw);
        assert!(r.depth_raw <= r.size_raw);
        assert!(r.depth_std <= r.size_std);
    }

    #[test]
    fn csv_row_matches_header_arity() {
        let r = resource_report(&Circuit::<f64>::new(1));
        let row = r.csv_row(2, 8, false);
        assert_eq!(
            row.split(',').count(),
            RESOURCE_CSV_HEADER.split(',').count()
        );
    }
}
