//! Pauli-string observables and exact expectation values.

use num_complex::Complex;

use super::error::QsimError;
use super::state::Statevector;
use crate::scalar::Real;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pauli {
    X,
    Y,
    Z,
}

/// Tensor product of single-qubit Paulis, identity elsewhere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PauliString {
    ops: Vec<(usize, Pauli)>,
}

impl PauliString {
    /// Build from (qubit, Pauli) pairs; qubits must be distinct.
    pub fn new(mut ops: Vec<(usize, Pauli)>) -> Result<Self, QsimError> {
        ops.sort_by_key(|&(q, _)| q);
        for w in ops.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(QsimError::DuplicateQubit { qubit: w[0].0 });
            }
        }
        Ok(PauliString { ops })
    }

    pub fn single(qubit: usize, p: Pauli) -> Self {
        PauliString {
            ops: vec![(qubit, p)],
        }
    }

    pub fn ops(&self) -> &[(usize, Pauli)] {
        &self.ops
    }

    fn max_qubit(&self) -> Option<usize> {
        self.ops.last().map(|&(q, _)| q)
    }

    fn masks(&self) -> PauliMasks {
        let mut m = PauliMasks {
            xmask: 0,
            ymask: 0,
            zmask: 0,
        };
        for &(q, p) in &self.ops {
            match p {
                Pauli::X => m.xmask |= 1 << q,
                Pauli::Y => {
                    m.xmask |= 1 << q;
                    m.ymask |= 1 << q;
                }
                Pauli::Z => m.zmask |= 1 << q,
            }
        }
        m
    }

    /// Apply P to the state in place.
    pub fn apply_to<T: Real>(&self, state: &mut Statevector<T>) {
        let m = self.masks();
        let i_pow = m.i_power::<T>();
        let amps = state.amplitudes_mut();
        if m.xmask == 0 {
            for (b, a) in amps.iter_mut().enumerate() {
                *a = *a * (i_pow * m.sign::<T>(b));
            }
            return;
        }
        let hi = 1usize << (usize::BITS - 1 - m.xmask.leading_zeros()) as usize;
        for b in 0..amps.len() {
            if b & hi != 0 {
                continue;
            }
            let b2 = b ^ m.xmask;
            let a1 = amps[b];
            let a2 = amps[b2];
            // (P psi)[b ^ xmask] = phi(b) psi[b]
            amps[b2] = a1 * (i_pow * m.sign::<T>(b));
            amps[b] = a2 * (i_pow * m.sign::<T>(b2));
        }
    }
}

struct PauliMasks {
    xmask: usize,
    ymask: usize,
    zmask: usize,
}

impl PauliMasks {
    fn i_power<T: Real>(&self) -> Complex<T> {
        match self.ymask.count_ones() % 4 {
            0 => Complex::new(T::one(), T::zero()),
            1 => Complex::new(T::zero(), T::one()),
            2 => Complex::new(-T::one(), T::zero()),
            _ => Complex::new(T::zero(), -T::one()),
        }
    }

    fn sign<T: Real>(&self, b: usize) -> T {
        if ((b & self.ymask).count_ones() + (b & self.zmask).count_ones()) & 1 == 0 {
            T::one()
        } else {
            -T::one()
        }
    }
}

/// <bra|P|ket> for states of equal dimension.
pub fn pauli_bilinear<T: Real>(
    bra: &Statevector<T>,
    string: &PauliString,
    ket: &Statevector<T>,
) -> Complex<T> {
    let m = string.masks();
    let i_pow = m.i_power::<T>();
    let b_amps = bra.amplitudes();
    let k_amps = ket.amplitudes();
    debug_assert_eq!(b_amps.len(), k_amps.len());
    let mut acc = Complex::new(T::zero(), T::zero());
    for (b, &amp) in k_amps.iter().enumerate() {
        let contrib = b_amps[b ^ m.xmask].conj() * amp;
        acc = acc + contrib * m.sign::<T>(b);
    }
    acc * i_pow
}

/// Real linear combination of Pauli strings.
#[derive(Clone, Debug, PartialEq)]
pub struct PauliObservable<T: Real> {
    terms: Vec<(T, PauliString)>,
}

impl<T: Real> PauliObservable<T> {
    pub fn new(terms: Vec<(T, PauliString)>) -> Self {
        PauliObservable { terms }
    }

    /// Unit-weight single-Pauli observable.
    pub fn single(qubit: usize, p: Pauli) -> Self {
        PauliObservable {
            terms: vec![(T::one(), PauliString::single(qubit, p))],
        }
    }

    pub fn z(qubit: usize) -> Self {
        Self::single(qubit, Pauli::Z)
    }

    pub fn y(qubit: usize) -> Self {
        Self::single(qubit, Pauli::Y)
    }

    pub fn terms(&self) -> &[(T, PauliString)] {
        &self.terms
    }

    /// <psi|O|psi>. The value of a Hermitian observable is real; the
    /// imaginary residue is asserted below tolerance and discarded.
    pub fn expectation(&self, state: &Statevector<T>) -> Result<T, QsimError> {
        let mut total = Complex::new(T::zero(), T::zero());
        for (coef, string) in &self.terms {
            if let Some(q) = string.max_qubit() {
                if q >= state.num_qubits() {
                    return Err(QsimError::QubitOutOfRange {
                        qubit: q,
                        num_qubits: state.num_qubits(),
                    });
                }
            }
            total = total + string_expectation(string, state).scale(*coef);
        }
        let tol = imag_tolerance::<T>();
        if total.im.abs() > tol {
            return Err(QsimError::ImaginaryResidue {
                imag: total.im.abs().to_f64_lossy(),
            });
        }
        Ok(total.re)
    }
}

/// Tolerance for the imaginary residue of a Hermitian expectation: 1e-10 at
/// f64, loosened in step with machine epsilon at lower precision.
fn imag_tolerance<T: Real>() -> T {
    let floor = T::of(1e-10);
    let eps_scaled = T::epsilon() * T::of(1e3);
    if eps_scaled > floor {
        eps_scaled
    } else {
        floor
    }
}

/// <psi|P|psi> for one Pauli string. P|b> = phi(b) |b ^ xmask> with
/// xmask the X/Y support and phi(b) = i^{#Y} * (-1)^{|b & ymask| + |b & zmask|}.
fn string_expectation<T: Real>(string: &PauliString, state: &Statevector<T>) -> Complex<T> {
    pauli_bilinear(state, string, state)
}
