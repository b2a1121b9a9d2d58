//! Test-only dense linear-algebra oracle, independent of the simulator
//! kernels: gates become explicit 2^n x 2^n matrices assembled from textbook
//! 2x2/4x4 blocks and index bookkeeping, applied by naive matrix-vector
//! products.

use num_complex::Complex64;
use qimg_core::qsim::{Gate, GateKind, Statevector};
use rand::Rng;

pub type C = Complex64;

fn c(re: f64, im: f64) -> C {
    C::new(re, im)
}

/// Row-major dense complex matrix.
pub struct Dense {
    pub dim: usize,
    pub data: Vec<C>,
}

impl Dense {
    fn zeros(dim: usize) -> Self {
        Dense {
            dim,
            data: vec![c(0.0, 0.0); dim * dim],
        }
    }

    fn at(&self, row: usize, col: usize) -> C {
        self.data[row * self.dim + col]
    }

    fn set(&mut self, row: usize, col: usize, v: C) {
        self.data[row * self.dim + col] = v;
    }

    pub fn matvec(&self, x: &[C]) -> Vec<C> {
        assert_eq!(x.len(), self.dim);
        (0..self.dim)
            .map(|r| {
                let mut acc = c(0.0, 0.0);
                for (col, xv) in x.iter().enumerate() {
                    acc += self.at(r, col) * xv;
                }
                acc
            })
            .collect()
    }
}

fn kron(a: &[C], da: usize, b: &[C], db: usize) -> (Vec<C>, usize) {
    let dim = da * db;
    let mut out = vec![c(0.0, 0.0); dim * dim];
    for ra in 0..da {
        for ca in 0..da {
            for rb in 0..db {
                for cb in 0..db {
                    out[(ra * db + rb) * dim + (ca * db + cb)] = a[ra * da + ca] * b[rb * db + cb];
                }
            }
        }
    }
    (out, dim)
}

fn pauli2(k: char) -> Vec<C> {
    match k {
        'X' => vec![c(0., 0.), c(1., 0.), c(1., 0.), c(0., 0.)],
        'Y' => vec![c(0., 0.), c(0., -1.), c(0., 1.), c(0., 0.)],
        'Z' => vec![c(1., 0.), c(0., 0.), c(0., 0.), c(-1., 0.)],
        _ => panic!("not a Pauli"),
    }
}

/// Small matrix of a gate over its own qubits, index = sum of bit_k * 2^k
/// over the ordered qubit list returned alongside.
fn small_matrix(gate: &Gate<f64>) -> (Vec<C>, Vec<usize>) {
    use std::f64::consts::FRAC_1_SQRT_2;
    let theta = match gate.param() {
        Some(qimg_core::qsim::GateParam::Fixed(v)) => *v,
        Some(qimg_core::qsim::GateParam::Slot(_)) => panic!("bind angles before the oracle"),
        None => 0.0,
    };
    let (h, s2) = ((theta / 2.0).cos(), (theta / 2.0).sin());
    match gate.kind() {
        GateKind::I => (vec![c(1., 0.), c(0., 0.), c(0., 0.), c(1., 0.)], gate.targets().to_vec()),
        GateKind::X => (pauli2('X'), gate.targets().to_vec()),
        GateKind::Y => (pauli2('Y'), gate.targets().to_vec()),
        GateKind::Z => (pauli2('Z'), gate.targets().to_vec()),
        GateKind::H => (
            vec![
                c(FRAC_1_SQRT_2, 0.),
                c(FRAC_1_SQRT_2, 0.),
                c(FRAC_1_SQRT_2, 0.),
                c(-FRAC_1_SQRT_2, 0.),
            ],
            gate.targets().to_vec(),
        ),
        GateKind::S => (
            vec![c(1., 0.), c(0., 0.), c(0., 0.), c(0., 1.)],
            gate.targets().to_vec(),
        ),
        GateKind::T => (
            vec![
                c(1., 0.),
                c(0., 0.),
                c(0., 0.),
                C::from_polar(1.0, std::f64::consts::FRAC_PI_4),
            ],
            gate.targets().to_vec(),
        ),
        GateKind::Rx | GateKind::Ry | GateKind::Rz => {
            let p = match gate.kind() {
                GateKind::Rx => pauli2('X'),
                GateKind::Ry => pauli2('Y'),
                _ => pauli2('Z'),
            };
            // exp(-i theta P / 2) = cos(theta/2) I - i sin(theta/2) P
            let mut m = vec![c(0., 0.); 4];
            for (k, mv) in m.iter_mut().enumerate() {
                let ident = if k % 3 == 0 { c(h, 0.) } else { c(0., 0.) };
                *mv = ident + c(0., -s2) * p[k];
            }
            (m, gate.targets().to_vec())
        }
        GateKind::Xx | GateKind::Yy | GateKind::Zz => {
            let p = match gate.kind() {
                GateKind::Xx => pauli2('X'),
                GateKind::Yy => pauli2('Y'),
                _ => pauli2('Z'),
            };
            let (pp, dim) = kron(&p, 2, &p, 2);
            assert_eq!(dim, 4);
            let mut m = vec![c(0., 0.); 16];
            for r in 0..4 {
                for col in 0..4 {
                    let ident = if r == col { c(h, 0.) } else { c(0., 0.) };
                    m[r * 4 + col] = ident + c(0., -s2) * pp[r * 4 + col];
                }
            }
            // qubit order (q0, q1): index = bit(q0) + 2*bit(q1); PP is
            // symmetric under qubit swap so the kron order is immaterial
            (m, gate.targets().to_vec())
        }
        GateKind::Cx | GateKind::Ccx | GateKind::Mcx => {
            let qubits: Vec<usize> = gate
                .targets()
                .iter()
                .chain(gate.controls().iter())
                .copied()
                .collect();
            let k = qubits.len();
            let dim = 1 << k;
            // permutation: flip bit 0 (the target) when every control bit
            // (bits 1..k) is set
            let mut m = vec![c(0., 0.); dim * dim];
            for col in 0..dim {
                let controls_set = (1..k).all(|b| col >> b & 1 == 1);
                let row = if controls_set { col ^ 1 } else { col };
                m[row * dim + col] = c(1., 0.);
            }
            (m, qubits)
        }
    }
}

/// Expand a gate into the full 2^n x 2^n matrix.
pub fn gate_matrix(gate: &Gate<f64>, num_qubits: usize) -> Dense {
    let (small, qubits) = small_matrix(gate);
    let k = qubits.len();
    let small_dim = 1 << k;
    assert_eq!(small.len(), small_dim * small_dim);
    let dim = 1 << num_qubits;
    let mut rest_mask = usize::MAX;
    for &q in &qubits {
        rest_mask &= !(1 << q);
    }
    let rest_mask = rest_mask & (dim - 1);
    let mut full = Dense::zeros(dim);
    for col in 0..dim {
        let col_small: usize = qubits
            .iter()
            .enumerate()
            .map(|(b, &q)| ((col >> q) & 1) << b)
            .sum();
        for row_small in 0..small_dim {
            let v = small[row_small * small_dim + col_small];
            if v.norm_sqr() == 0.0 {
                continue;
            }
            let mut row = col & rest_mask;
            for (b, &q) in qubits.iter().enumerate() {
                row |= ((row_small >> b) & 1) << q;
            }
            full.set(row, col, full.at(row, col) + v);
        }
    }
    full
}

/// Normalized random state from a seeded generator.
pub fn random_state<R: Rng>(num_qubits: usize, rng: &mut R) -> Statevector<f64> {
    let dim = 1usize << num_qubits;
    let mut amps: Vec<C> = (0..dim)
        .map(|_| c(rng.gen::<f64>() * 2.0 - 1.0, rng.gen::<f64>() * 2.0 - 1.0))
        .collect();
    let norm: f64 = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    for a in &mut amps {
        *a /= norm;
    }
    Statevector::from_amplitudes(amps).unwrap()
}

pub fn max_amp_diff(a: &[C], b: &[C]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}
