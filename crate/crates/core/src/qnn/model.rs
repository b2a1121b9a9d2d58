//! Layered variational classifier: every layer couples each data qubit to a
//! dedicated readout qubit with one two-qubit Ising rotation; the readout
//! Pauli expectation in [-1, 1] is the prediction.

use std::str::FromStr;

use super::error::QnnError;
use crate::qsim::{Circuit, Gate, Pauli, PauliObservable, Statevector};
use crate::scalar::Real;

/// Two-qubit coupling used by a layer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CouplingKind {
    Xx,
    Zz,
    Yy,
}

impl CouplingKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CouplingKind::Xx => "xx",
            CouplingKind::Zz => "zz",
            CouplingKind::Yy => "yy",
        }
    }
}

impl FromStr for CouplingKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "xx" => Ok(CouplingKind::Xx),
            "zz" => Ok(CouplingKind::Zz),
            "yy" => Ok(CouplingKind::Yy),
            other => Err(format!("unknown coupling `{other}` (expected xx, zz or yy)")),
        }
    }
}

/// Pauli measured on the readout qubit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReadoutObservable {
    Z,
    Y,
}

impl ReadoutObservable {
    pub fn as_str(self) -> &'static str {
        match self {
            ReadoutObservable::Z => "z",
            ReadoutObservable::Y => "y",
        }
    }
}

impl FromStr for ReadoutObservable {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "z" => Ok(ReadoutObservable::Z),
            "y" => Ok(ReadoutObservable::Y),
            other => Err(format!("unknown readout `{other}` (expected z or y)")),
        }
    }
}

/// Highest register size the dense simulator will allocate (2^24 amplitudes,
/// 256 MiB at f64).
pub const MAX_SIM_QUBITS: usize = 24;

/// Model circuit on m data qubits plus one readout qubit (index m): readout
/// preparation X, H; per layer one coupling gate per data qubit, each with
/// its own parameter slot (or one shared slot per layer); closing H on the
/// readout.
#[derive(Clone, Debug)]
pub struct QnnModel<T: Real> {
    data_qubits: usize,
    layers: Vec<CouplingKind>,
    readout: ReadoutObservable,
    share_layer_params: bool,
    circuit: Circuit<T>,
    observable: PauliObservable<T>,
}

/// [`QnnModel`] with the default readout (Z) and per-gate parameters.
pub fn build_model<T: Real>(data_qubits: usize, layers: &[CouplingKind]) -> QnnModel<T> {
    QnnModel::new(data_qubits, layers.to_vec(), ReadoutObservable::Z, false)
}

impl<T: Real> QnnModel<T> {
    pub fn new(
        data_qubits: usize,
        layers: Vec<CouplingKind>,
        readout: ReadoutObservable,
        share_layer_params: bool,
    ) -> Self {
        assert!(data_qubits >= 1, "need at least one data qubit");
        assert!(!layers.is_empty(), "need at least one layer");
        let readout_qubit = data_qubits;
        let mut circuit = Circuit::new(data_qubits + 1);
        circuit.push(Gate::x(readout_qubit)).unwrap();
        circuit.push(Gate::h(readout_qubit)).unwrap();
        for (l, kind) in layers.iter().enumerate() {
            for i in 0..data_qubits {
                let slot = if share_layer_params { l } else { l * data_qubits + i };
                let gate = match kind {
                    CouplingKind::Xx => Gate::xx_slot(i, readout_qubit, slot),
                    CouplingKind::Zz => Gate::zz_slot(i, readout_qubit, slot),
                    CouplingKind::Yy => Gate::yy_slot(i, readout_qubit, slot),
                };
                circuit.push(gate).unwrap();
            }
        }
        circuit.push(Gate::h(readout_qubit)).unwrap();
        let observable = match readout {
            ReadoutObservable::Z => PauliObservable::single(readout_qubit, Pauli::Z),
            ReadoutObservable::Y => PauliObservable::single(readout_qubit, Pauli::Y),
        };
        QnnModel {
            data_qubits,
            layers,
            readout,
            share_layer_params,
            circuit,
            observable,
        }
    }

    pub fn data_qubits(&self) -> usize {
        self.data_qubits
    }

    pub fn readout_qubit(&self) -> usize {
        self.data_qubits
    }

    pub fn total_qubits(&self) -> usize {
        self.data_qubits + 1
    }

    pub fn layers(&self) -> &[CouplingKind] {
        &self.layers
    }

    pub fn readout(&self) -> ReadoutObservable {
        self.readout
    }

    pub fn share_layer_params(&self) -> bool {
        self.share_layer_params
    }

    pub fn num_params(&self) -> usize {
        self.circuit.num_params()
    }

    /// The model circuit (readout preparation, couplings, closing H).
    pub fn circuit(&self) -> &Circuit<T> {
        &self.circuit
    }

    pub fn observable(&self) -> &PauliObservable<T> {
        &self.observable
    }

    /// Prepare |0...0> and run the encoder circuit on the data qubits,
    /// leaving the readout untouched.
    pub fn input_state(&self, input: &Circuit<T>) -> Result<Statevector<T>, QnnError> {
        if input.num_qubits() != self.data_qubits {
            return Err(QnnError::QubitCountMismatch {
                model: self.data_qubits,
                input: input.num_qubits(),
            });
        }
        if input.num_params() != 0 {
            return Err(QnnError::ParameterizedInput {
                params: input.num_params(),
            });
        }
        if self.total_qubits() > MAX_SIM_QUBITS {
            return Err(QnnError::TooManyQubits {
                qubits: self.total_qubits(),
                max: MAX_SIM_QUBITS,
            });
        }
        let mut state = Statevector::zero(self.total_qubits());
        for gate in input.gates() {
            state.apply(gate)?;
        }
        Ok(state)
    }

    /// Readout expectation after running encoder + model at parameters
    /// `theta`; always in [-1, 1].
    pub fn forward(&self, input: &Circuit<T>, theta: &[T]) -> Result<T, QnnError> {
        let state = self.input_state(input)?;
        self.forward_from_state(&state, theta)
    }

    /// Like [`QnnModel::forward`] but starting from a prepared input state.
    pub fn forward_from_state(
        &self,
        input_state: &Statevector<T>,
        theta: &[T],
    ) -> Result<T, QnnError> {
        let mut state = input_state.clone();
        self.run_model(&mut state, theta)?;
        Ok(self.observable.expectation(&state)?)
    }

    pub(crate) fn run_model(
        &self,
        state: &mut Statevector<T>,
        theta: &[T],
    ) -> Result<(), QnnError> {
        if theta.len() != self.num_params() {
            return Err(QnnError::Sim(crate::qsim::QsimError::ParamCountMismatch {
                expected: self.num_params(),
                got: theta.len(),
            }));
        }
        for gate in self.circuit.gates() {
            state.apply_bound(gate, theta)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::encoders::threshold_encode;
    use rand::{Rng, SeedableRng};

    #[test]
    fn parameter_count_is_data_qubits_times_layers() {
        let m = build_model::<f64>(16, &[CouplingKind::Xx, CouplingKind::Zz]);
        assert_eq!(m.num_params(), 32);
        let shared = QnnModel::<f64>::new(
            16,
            vec![CouplingKind::Xx, CouplingKind::Zz],
            ReadoutObservable::Z,
            true,
        );
        assert_eq!(shared.num_params(), 2);
    }

    #[test]
    fn single_qubit_single_layer_shape() {
        let m = build_model::<f64>(1, &[CouplingKind::Xx]);
        assert_eq!(m.num_params(), 1);
        // X, H, coupling, H
        assert_eq!(m.circuit().size(), 4);
    }

    #[test]
    fn layer_gates_appear_in_declaration_order() {
        use crate::qsim::GateKind;
        let m = build_model::<f64>(3, &[CouplingKind::Xx, CouplingKind::Zz]);
        let kinds: Vec<GateKind> = m
            .circuit()
            .gates()
            .iter()
            .map(|g| g.kind())
            .filter(|k| matches!(k, GateKind::Xx | GateKind::Zz))
            .collect();
        assert_eq!(
            kinds,
            vec![
                GateKind::Xx,
                GateKind::Xx,
                GateKind::Xx,
                GateKind::Zz,
                GateKind::Zz,
                GateKind::Zz
            ]
        );
    }

    #[test]
    fn zero_theta_output_ignores_input_data() {
        // with all couplings at zero the readout sees only X, H, H
        let m = build_model::<f64>(4, &[CouplingKind::Xx, CouplingKind::Zz]);
        let theta = vec![0.0; m.num_params()];
        let mut outputs = Vec::new();
        for bits in [[0u8, 0, 0, 0], [1, 0, 1, 0], [1, 1, 1, 1]] {
            let input = threshold_encode::<f64>(&bits).unwrap();
            outputs.push(m.forward(&input, &theta).unwrap());
        }
        for w in outputs.windows(2) {
            assert!((w[0] - w[1]).abs() < 1e-12);
        }
        // H X H |0> readout measured in Z: X H|0>... the prepared readout
        // X,H then closing H gives |1> up to phase, so <Z> = -1.
        assert!((outputs[0] + 1.0).abs() < 1e-12);
    }

    #[test]
    fn forward_stays_in_unit_interval() {
        let m = build_model::<f64>(3, &[CouplingKind::Xx, CouplingKind::Zz]);
        let input = threshold_encode::<f64>(&[1, 0, 1]).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let theta: Vec<f64> = (0..m.num_params())
                .map(|_| rng.gen::<f64>() * std::f64::consts::TAU)
                .collect();
            let out = m.forward(&input, &theta).unwrap();
            assert!((-1.0 - 1e-10..=1.0 + 1e-10).contains(&out), "out = {out}");
        }
    }

    #[test]
    fn qubit_mismatch_is_error() {
        let m = build_model::<f64>(3, &[CouplingKind::Xx]);
        let input = threshold_encode::<f64>(&[1, 0]).unwrap();
        assert!(matches!(
            m.forward(&input, &[0.0; 3]),
            Err(QnnError::QubitCountMismatch { model: 3, input: 2 })
        ));
    }
}
