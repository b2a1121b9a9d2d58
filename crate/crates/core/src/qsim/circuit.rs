//! Ordered gate list over a fixed register, with depth/size accounting and
//! a line-oriented text serialization.

use std::fmt::Write as _;

use super::error::{CircuitParseError, QsimError};
use super::gate::{Gate, GateKind, GateParam};
use super::state::Statevector;
use crate::scalar::Real;

/// Gate sequence on `num_qubits` qubits. Unbound rotation angles reference
/// parameter slots 0..num_params, resolved by [`Circuit::run`].
#[derive(Clone, Debug, PartialEq)]
pub struct Circuit<T> {
    num_qubits: usize,
    gates: Vec<Gate<T>>,
    num_params: usize,
}

impl<T: Real> Circuit<T> {
    pub fn new(num_qubits: usize) -> Self {
        assert!(num_qubits >= 1, "circuit needs at least one qubit");
        Circuit {
            num_qubits,
            gates: Vec::new(),
            num_params: 0,
        }
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn gates(&self) -> &[Gate<T>] {
        &self.gates
    }

    /// Count of distinct parameter slots (max referenced slot + 1).
    pub fn num_params(&self) -> usize {
        self.num_params
    }

    /// Append a gate after validating it against the register.
    pub fn push(&mut self, gate: Gate<T>) -> Result<(), QsimError> {
        gate.validate(self.num_qubits)?;
        if let Some(slot) = gate.param_slot() {
            self.num_params = self.num_params.max(slot + 1);
        }
        self.gates.push(gate);
        Ok(())
    }

    /// Total gate count.
    pub fn size(&self) -> usize {
        self.gates.len()
    }

    /// Longest chain of gates under "B follows A if they share a qubit",
    /// computed greedily with per-qubit layer counters.
    pub fn depth(&self) -> usize {
        let mut level = vec![0usize; self.num_qubits];
        let mut depth = 0;
        for gate in &self.gates {
            let layer = gate.qubits().map(|q| level[q]).max().unwrap_or(0) + 1;
            for q in gate.qubits() {
                level[q] = layer;
            }
            depth = depth.max(layer);
        }
        depth
    }

    /// Apply every gate in order to a copy of `initial`, binding parameter
    /// slots from `theta`.
    pub fn run(&self, initial: &Statevector<T>, theta: &[T]) -> Result<Statevector<T>, QsimError> {
        let mut state = initial.clone();
        self.run_in_place(&mut state, theta)?;
        Ok(state)
    }

    pub fn run_in_place(&self, state: &mut Statevector<T>, theta: &[T]) -> Result<(), QsimError> {
        if theta.len() != self.num_params {
            return Err(QsimError::ParamCountMismatch {
                expected: self.num_params,
                got: theta.len(),
            });
        }
        if state.num_qubits() != self.num_qubits {
            return Err(QsimError::QubitCountMismatch {
                state_qubits: state.num_qubits(),
                circuit_qubits: self.num_qubits,
            });
        }
        for gate in &self.gates {
            state.apply_bound(gate, theta)?;
        }
        Ok(())
    }

    /// Same circuit on a wider register (extra qubits untouched).
    pub fn widened(&self, num_qubits: usize) -> Circuit<T> {
        assert!(num_qubits >= self.num_qubits);
        Circuit {
            num_qubits,
            gates: self.gates.clone(),
            num_params: self.num_params,
        }
    }

    /// Serialize to the text format: a `qubits N params P` header, then one
    /// gate per line as `KIND targets | controls | theta_or_param` where the
    /// parameter field is empty, a literal angle, or `@slot`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "qubits {} params {}", self.num_qubits, self.num_params);
        for gate in &self.gates {
            let targets = join_indices(gate.targets());
            let controls = join_indices(gate.controls());
            let param = match gate.param() {
                None => String::new(),
                Some(GateParam::Fixed(v)) => format!("{v}"),
                Some(GateParam::Slot(s)) => format!("@{s}"),
            };
            let mut line = format!("{} {} | {} | {}", gate.kind().name(), targets, controls, param);
            while line.contains("  ") {
                line = line.replace("  ", " ");
            }
            let _ = writeln!(out, "{}", line.trim_end());
        }
        out
    }

    /// Parse the text format produced by [`Circuit::to_text`].
    pub fn from_text(text: &str) -> Result<Circuit<T>, CircuitParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or(CircuitParseError::MissingHeader)?;
        let hp: Vec<&str> = header.split_whitespace().collect();
        if hp.len() != 4 || hp[0] != "qubits" || hp[2] != "params" {
            return Err(CircuitParseError::Syntax {
                line: hline,
                msg: format!("expected `qubits N params P`, got `{header}`"),
            });
        }
        let num_qubits: usize = hp[1].parse().map_err(|_| CircuitParseError::Syntax {
            line: hline,
            msg: "bad qubit count".into(),
        })?;
        let declared_params: usize = hp[3].parse().map_err(|_| CircuitParseError::Syntax {
            line: hline,
            msg: "bad param count".into(),
        })?;
        if num_qubits == 0 {
            return Err(CircuitParseError::Syntax {
                line: hline,
                msg: "qubit count must be >= 1".into(),
            });
        }
        let mut circuit = Circuit::new(num_qubits);
        for (lineno, line) in lines {
            let fields: Vec<&str> = line.split('|').collect();
            if fields.len() != 3 {
                return Err(CircuitParseError::Syntax {
                    line: lineno,
                    msg: "expected `KIND targets | controls | param`".into(),
                });
            }
            let mut head = fields[0].split_whitespace();
            let name = head.next().ok_or_else(|| CircuitParseError::Syntax {
                line: lineno,
                msg: "missing gate name".into(),
            })?;
            let kind = GateKind::from_name(name).ok_or_else(|| CircuitParseError::UnknownGate {
                line: lineno,
                name: name.to_string(),
            })?;
            let targets = parse_indices(head, lineno)?;
            let controls = parse_indices(fields[1].split_whitespace(), lineno)?;
            let ptext = fields[2].trim();
            let param = if ptext.is_empty() {
                None
            } else if let Some(slot) = ptext.strip_prefix('@') {
                let slot: usize = slot.parse().map_err(|_| CircuitParseError::Syntax {
                    line: lineno,
                    msg: format!("bad parameter slot `{ptext}`"),
                })?;
                Some(GateParam::Slot(slot))
            } else {
                let v: T = ptext.parse().map_err(|_| CircuitParseError::Syntax {
                    line: lineno,
                    msg: format!("bad angle `{ptext}`"),
                })?;
                Some(GateParam::Fixed(v))
            };
            let gate = Gate::with_parts(kind, targets, controls, param);
            circuit
                .push(gate)
                .map_err(|source| CircuitParseError::Gate { line: lineno, source })?;
        }
        circuit.num_params = circuit.num_params.max(declared_params);
        Ok(circuit)
    }
}

fn join_indices(idx: &[usize]) -> String {
    idx.iter()
        .map(|q| q.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn parse_indices<'a>(
    parts: impl Iterator<Item = &'a str>,
    line: usize,
) -> Result<Vec<usize>, CircuitParseError> {
    parts
        .map(|p| {
            p.parse().map_err(|_| CircuitParseError::Syntax {
                line,
                msg: format!("bad qubit index `{p}`"),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_circuit_is_identity() {
        let c = Circuit::<f64>::new(2);
        let s = Statevector::zero(2);
        let out = c.run(&s, &[]).unwrap();
        assert_eq!(out, s);
        assert_eq!(c.depth(), 0);
        assert_eq!(c.size(), 0);
    }

    #[test]
    fn double_hadamard_restores_zero() {
        let mut c = Circuit::<f64>::new(1);
        c.push(Gate::h(0)).unwrap();
        c.push(Gate::h(0)).unwrap();
        let out = c.run(&Statevector::zero(1), &[]).unwrap();
        assert!((out.amp(0).re - 1.0).abs() < 1e-12);
        assert!(out.amp(1).norm() < 1e-12);
    }

    #[test]
    fn depth_counts_shared_qubits() {
        let mut c = Circuit::<f64>::new(2);
        c.push(Gate::h(0)).unwrap();
        c.push(Gate::h(1)).unwrap();
        c.push(Gate::cx(0, 1)).unwrap();
        assert_eq!(c.size(), 3);
        assert_eq!(c.depth(), 2);
    }

    #[test]
    fn param_count_mismatch_is_error() {
        let mut c = Circuit::<f64>::new(1);
        c.push(Gate::rx_slot(0, 0)).unwrap();
        assert_eq!(c.num_params(), 1);
        let s = Statevector::zero(1);
        assert!(matches!(
            c.run(&s, &[]),
            Err(QsimError::ParamCountMismatch { expected: 1, got: 0 })
        ));
        assert!(c.run(&s, &[0.3]).is_ok());
    }

    #[test]
    fn text_round_trip() {
        let mut c = Circuit::<f64>::new(4);
        c.push(Gate::h(0)).unwrap();
        c.push(Gate::x(2)).unwrap();
        c.push(Gate::cx(0, 1)).unwrap();
        c.push(Gate::ccx(0, 1, 2)).unwrap();
        c.push(Gate::mcx(vec![0, 1, 2], 3)).unwrap();
        c.push(Gate::rx(1, std::f64::consts::FRAC_PI_3)).unwrap();
        c.push(Gate::zz_slot(0, 3, 1)).unwrap();
        c.push(Gate::i(3)).unwrap();
        let text = c.to_text();
        let parsed = Circuit::<f64>::from_text(&text).unwrap();
        assert_eq!(parsed, c);
        // serialization is idempotent
        assert_eq!(parsed.to_text(), text);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Circuit::<f64>::from_text("").is_err());
        assert!(Circuit::<f64>::from_text("qubits 2 params 0\nWAT 0 | |").is_err());
        assert!(Circuit::<f64>::from_text("nonsense").is_err());
    }
}
