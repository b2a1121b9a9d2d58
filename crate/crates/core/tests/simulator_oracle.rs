//! Simulator correctness against the dense kron-expanded matrix oracle.

mod common;

use common::{gate_matrix, max_amp_diff, random_state};
use qimg_core::qsim::{decompose, Circuit, DecomposeBasis, Gate, Pauli, PauliObservable, Statevector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// One representative of every gate kind on a register of `n` qubits,
/// with distinct randomly drawn qubits and angles.
fn sample_gates(n: usize, rng: &mut ChaCha8Rng) -> Vec<Gate<f64>> {
    let mut pick = |k: usize| -> Vec<usize> {
        let mut qs: Vec<usize> = (0..n).collect();
        for i in 0..k {
            let j = rng.gen_range(i..n);
            qs.swap(i, j);
        }
        qs.truncate(k);
        qs
    };
    let theta = rng.gen::<f64>() * std::f64::consts::TAU - std::f64::consts::PI;
    let q1 = pick(1)[0];
    let q2 = pick(2);
    let q3 = pick(3);
    let q4 = pick(4.min(n));
    let mcx_qs = pick(n.min(6));
    let mut gates = vec![
        Gate::i(q1),
        Gate::x(q1),
        Gate::y(q1),
        Gate::z(q1),
        Gate::h(q1),
        Gate::s(q1),
        Gate::t(q1),
        Gate::cx(q2[0], q2[1]),
        Gate::rx(q1, theta),
        Gate::ry(q1, theta * 0.7),
        Gate::rz(q1, -theta),
        Gate::xx(q2[0], q2[1], theta),
        Gate::yy(q2[0], q2[1], theta * 1.3),
        Gate::zz(q2[0], q2[1], -theta * 0.4),
    ];
    if n >= 3 {
        gates.push(Gate::ccx(q3[0], q3[1], q3[2]));
        gates.push(Gate::mcx(vec![q3[0], q3[1]], q3[2]));
    }
    if n >= 4 {
        gates.push(Gate::mcx(q4[..q4.len() - 1].to_vec(), q4[q4.len() - 1]));
    }
    if n >= 5 {
        gates.push(Gate::mcx(
            mcx_qs[..mcx_qs.len() - 1].to_vec(),
            mcx_qs[mcx_qs.len() - 1],
        ));
    }
    gates
}

#[test]
fn all_gate_kinds_match_dense_matrices_up_to_six_qubits() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for n in 1..=6 {
        for _round in 0..4 {
            let state = random_state(n, &mut rng);
            for gate in sample_gates(n, &mut rng) {
                let mut fast = state.clone();
                fast.apply(&gate).unwrap();
                let dense = gate_matrix(&gate, n);
                let want = dense.matvec(state.amplitudes());
                let diff = max_amp_diff(fast.amplitudes(), &want);
                assert!(
                    diff < 1e-10,
                    "gate {:?} on {n} qubits: max diff {diff}",
                    gate.kind()
                );
            }
        }
    }
}

#[test]
fn norm_preserved_over_thousand_random_applications() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut checked = 0;
    while checked < 1000 {
        let n = rng.gen_range(2..=6);
        let mut state = random_state(n, &mut rng);
        for gate in sample_gates(n, &mut rng) {
            state.apply(&gate).unwrap();
            let err = (state.norm() - 1.0).abs();
            assert!(err < 1e-12, "norm drift {err} after {:?}", gate.kind());
            checked += 1;
        }
    }
}

#[test]
fn single_pauli_expectations_stay_in_unit_interval() {
    let mut rng = ChaCha8Rng::seed_from_u64(5150);
    for _ in 0..200 {
        let n = rng.gen_range(1..=5);
        let state = random_state(n, &mut rng);
        let q = rng.gen_range(0..n);
        let p = match rng.gen_range(0..3) {
            0 => Pauli::X,
            1 => Pauli::Y,
            _ => Pauli::Z,
        };
        let e = PauliObservable::<f64>::single(q, p)
            .expectation(&state)
            .unwrap();
        assert!((-1.0 - 1e-10..=1.0 + 1e-10).contains(&e), "<P> = {e}");
    }
}

/// Random circuits with MCX up to 6 controls agree with their decomposed
/// forms on every computational-basis input (ancillas start in |0> and are
/// compared against |0> on output).
#[test]
fn decomposition_equivalence_on_basis_states() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _round in 0..6 {
        let n = rng.gen_range(4..=7);
        let mut circuit = Circuit::<f64>::new(n);
        for _ in 0..8 {
            match rng.gen_range(0..4) {
                0 => circuit.push(Gate::h(rng.gen_range(0..n))).unwrap(),
                1 => circuit.push(Gate::x(rng.gen_range(0..n))).unwrap(),
                2 => {
                    let a = rng.gen_range(0..n);
                    let b = (a + 1 + rng.gen_range(0..n - 1)) % n;
                    circuit.push(Gate::cx(a, b)).unwrap();
                }
                _ => {
                    let k = rng.gen_range(1..n.min(7));
                    let mut qs: Vec<usize> = (0..n).collect();
                    for i in 0..=k {
                        let j = rng.gen_range(i..n);
                        qs.swap(i, j);
                    }
                    circuit
                        .push(Gate::mcx(qs[..k].to_vec(), qs[k]))
                        .unwrap();
                }
            }
        }
        for basis in [DecomposeBasis::CcxLevel, DecomposeBasis::Standard] {
            let low = decompose(&circuit, basis);
            let wide = low.num_qubits();
            for idx in 0..(1usize << n) {
                let want = circuit
                    .run(&Statevector::basis(n, idx).unwrap(), &[])
                    .unwrap();
                let got = low
                    .run(&Statevector::basis(wide, idx).unwrap(), &[])
                    .unwrap();
                // embed the reference in the wide register (ancillas |0>)
                let mut embedded = vec![num_complex::Complex64::new(0.0, 0.0); 1 << wide];
                embedded[..1 << n].copy_from_slice(want.amplitudes());
                let embedded = Statevector::from_amplitudes(embedded).unwrap();
                let diff = embedded.max_diff_up_to_phase(&got);
                assert!(
                    diff < 1e-10,
                    "{basis:?} basis {idx}: diff {diff} (n = {n})"
                );
            }
        }
    }
}

#[test]
fn depth_never_exceeds_size() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..50 {
        let n = rng.gen_range(2..=5);
        let mut circuit = Circuit::<f64>::new(n);
        for _ in 0..rng.gen_range(0..20) {
            circuit.push(Gate::h(rng.gen_range(0..n))).unwrap();
        }
        assert!(circuit.depth() <= circuit.size());
    }
}
