//! Gate decomposition for resource accounting.
//!
//! Two target bases:
//! * `CcxLevel` — MCX gates with k >= 3 controls become CCX chains over
//!   k - 2 ancilla qubits appended above the original register; the chain
//!   uncomputes so every ancilla returns to |0>.
//! * `Standard` — additionally expands every CCX into the standard
//!   6-CX + single-qubit-gate construction. CX and single-qubit gates pass
//!   through unchanged.
//!
//! The output is state-equivalent to the input up to global phase on every
//! input (ancillas, when added, start and end in |0>).

use super::circuit::Circuit;
use super::gate::{Gate, GateKind};
use crate::scalar::Real;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecomposeBasis {
    CcxLevel,
    Standard,
}

pub fn decompose<T: Real>(circuit: &Circuit<T>, basis: DecomposeBasis) -> Circuit<T> {
    let ccx_level = to_ccx_level(circuit);
    match basis {
        DecomposeBasis::CcxLevel => ccx_level,
        DecomposeBasis::Standard => expand_ccx(&ccx_level),
    }
}

fn to_ccx_level<T: Real>(circuit: &Circuit<T>) -> Circuit<T> {
    let base = circuit.num_qubits();
    let max_ancillas = circuit
        .gates()
        .iter()
        .filter(|g| g.kind() == GateKind::Mcx)
        .map(|g| g.controls().len().saturating_sub(2))
        .max()
        .unwrap_or(0);
    let mut out = Circuit::new(base + max_ancillas);
    for gate in circuit.gates() {
        if gate.kind() != GateKind::Mcx {
            out.push(gate.clone()).expect("gate valid on wider register");
            continue;
        }
        let controls = gate.controls();
        let target = gate.targets()[0];
        match controls.len() {
            1 => out.push(Gate::cx(controls[0], target)).unwrap(),
            2 => out
                .push(Gate::ccx(controls[0], controls[1], target))
                .unwrap(),
            k => {
                // v-chain: fold controls pairwise into ancillas, hit the
                // target, then uncompute (2k - 3 CCX gates total).
                let anc: Vec<usize> = (base..base + k - 2).collect();
                let mut chain = Vec::with_capacity(k - 2);
                chain.push(Gate::ccx(controls[0], controls[1], anc[0]));
                for j in 2..k - 1 {
                    chain.push(Gate::ccx(controls[j], anc[j - 2], anc[j - 1]));
                }
                for g in &chain {
                    out.push(g.clone()).unwrap();
                }
                out.push(Gate::ccx(controls[k - 1], anc[k - 3], target))
                    .unwrap();
                for g in chain.iter().rev() {
                    out.push(g.clone()).unwrap();
                }
            }
        }
    }
    out
}

/// Standard CCX construction (6 CX, 9 single-qubit gates). T-dagger is
/// emitted as RZ(-pi/4), which matches T^dagger up to global phase.
fn expand_ccx<T: Real>(circuit: &Circuit<T>) -> Circuit<T> {
    let tdg = -T::FRAC_PI_4();
    let mut out = Circuit::new(circuit.num_qubits());
    for gate in circuit.gates() {
        if gate.kind() != GateKind::Ccx {
            out.push(gate.clone()).unwrap();
            continue;
        }
        let a = gate.controls()[0];
        let b = gate.controls()[1];
        let c = gate.targets()[0];
        let seq: [Gate<T>; 15] = [
            Gate::h(c),
            Gate::cx(b, c),
            Gate::rz(c, tdg),
            Gate::cx(a, c),
            Gate::t(c),
            Gate::cx(b, c),
            Gate::rz(c, tdg),
            Gate::cx(a, c),
            Gate::t(b),
            Gate::t(c),
            Gate::h(c),
            Gate::cx(a, b),
            Gate::t(a),
            Gate::rz(b, tdg),
            Gate::cx(a, b),
        ];
        for g in seq {
            out.push(g).unwrap();
        }
    }
    out
}
