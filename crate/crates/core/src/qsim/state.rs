//! Dense statevector with in-place gate application.
//!
//! Qubit 0 is the least-significant bit of the basis-state index. All gate
//! kernels preserve the norm up to floating-point roundoff (< 1e-12 at f64).

use num_complex::Complex;

use super::error::QsimError;
use super::gate::{Gate, GateKind};
use crate::scalar::Real;

/// Normalized complex amplitude vector of length 2^num_qubits.
#[derive(Clone, Debug, PartialEq)]
pub struct Statevector<T: Real> {
    num_qubits: usize,
    amps: Vec<Complex<T>>,
}

impl<T: Real> Statevector<T> {
    /// |0...0> on `num_qubits` qubits.
    pub fn zero(num_qubits: usize) -> Self {
        assert!(num_qubits >= 1, "statevector needs at least one qubit");
        let mut amps = vec![Complex::new(T::zero(), T::zero()); 1usize << num_qubits];
        amps[0] = Complex::new(T::one(), T::zero());
        Statevector { num_qubits, amps }
    }

    /// Computational basis state |index>.
    pub fn basis(num_qubits: usize, index: usize) -> Result<Self, QsimError> {
        if index >= (1usize << num_qubits) {
            return Err(QsimError::BasisIndexOutOfRange { index, num_qubits });
        }
        let mut s = Self::zero(num_qubits);
        s.amps[0] = Complex::new(T::zero(), T::zero());
        s.amps[index] = Complex::new(T::one(), T::zero());
        Ok(s)
    }

    /// Wrap an amplitude vector; the length must be a power of two >= 2.
    pub fn from_amplitudes(amps: Vec<Complex<T>>) -> Result<Self, QsimError> {
        let len = amps.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(QsimError::BadStateLength { len });
        }
        Ok(Statevector {
            num_qubits: len.trailing_zeros() as usize,
            amps,
        })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.amps
    }

    pub(crate) fn amplitudes_mut(&mut self) -> &mut [Complex<T>] {
        &mut self.amps
    }

    pub fn amp(&self, index: usize) -> Complex<T> {
        self.amps[index]
    }

    pub fn norm_sqr(&self) -> T {
        self.amps
            .iter()
            .fold(T::zero(), |acc, a| acc + a.norm_sqr())
    }

    pub fn norm(&self) -> T {
        self.norm_sqr().sqrt()
    }

    pub fn probability(&self, index: usize) -> T {
        self.amps[index].norm_sqr()
    }

    /// Apply one gate in place. Parametric gates must carry a fixed angle.
    pub fn apply(&mut self, gate: &Gate<T>) -> Result<(), QsimError> {
        self.apply_bound(gate, &[])
    }

    /// Apply one gate, resolving parameter slots from `theta`.
    pub fn apply_bound(&mut self, gate: &Gate<T>, theta: &[T]) -> Result<(), QsimError> {
        gate.validate(self.num_qubits)?;
        let angle = gate.bound_theta(theta)?;
        self.dispatch(gate, angle, false);
        Ok(())
    }

    /// Apply the inverse (conjugate transpose) of one gate.
    pub fn apply_bound_inverse(&mut self, gate: &Gate<T>, theta: &[T]) -> Result<(), QsimError> {
        gate.validate(self.num_qubits)?;
        let angle = gate.bound_theta(theta)?;
        self.dispatch(gate, angle, true);
        Ok(())
    }

    fn dispatch(&mut self, gate: &Gate<T>, angle: Option<T>, inverse: bool) {
        let t = gate.targets();
        let half = T::of(0.5);
        let sign = if inverse { -T::one() } else { T::one() };
        match gate.kind() {
            GateKind::I => {}
            GateKind::X => self.kernel_flip(0, 1 << t[0]),
            GateKind::Y => self.kernel_y(t[0]),
            GateKind::Z => self.kernel_phase(t[0], Complex::new(-T::one(), T::zero())),
            GateKind::H => self.kernel_h(t[0]),
            GateKind::S => self.kernel_phase(t[0], Complex::new(T::zero(), sign)),
            GateKind::T => {
                let a = T::FRAC_PI_4() * sign;
                self.kernel_phase(t[0], Complex::new(a.cos(), a.sin()));
            }
            GateKind::Cx | GateKind::Ccx | GateKind::Mcx => {
                let mut mask = 0usize;
                for &c in gate.controls() {
                    mask |= 1 << c;
                }
                self.kernel_flip(mask, 1 << t[0]);
            }
            GateKind::Rx => {
                let a = angle.unwrap() * half * sign;
                let (c, s) = (a.cos(), a.sin());
                // exp(-i a X) = [[cos a, -i sin a], [-i sin a, cos a]]
                self.kernel_single(
                    t[0],
                    [
                        Complex::new(c, T::zero()),
                        Complex::new(T::zero(), -s),
                        Complex::new(T::zero(), -s),
                        Complex::new(c, T::zero()),
                    ],
                );
            }
            GateKind::Ry => {
                let a = angle.unwrap() * half * sign;
                let (c, s) = (a.cos(), a.sin());
                self.kernel_single(
                    t[0],
                    [
                        Complex::new(c, T::zero()),
                        Complex::new(-s, T::zero()),
                        Complex::new(s, T::zero()),
                        Complex::new(c, T::zero()),
                    ],
                );
            }
            GateKind::Rz => {
                let a = angle.unwrap() * half * sign;
                let lo = Complex::new(a.cos(), -a.sin());
                let hi = Complex::new(a.cos(), a.sin());
                self.kernel_diag(t[0], lo, hi);
            }
            GateKind::Xx => self.kernel_xx_yy(t[0], t[1], angle.unwrap() * sign, false),
            GateKind::Yy => self.kernel_xx_yy(t[0], t[1], angle.unwrap() * sign, true),
            GateKind::Zz => self.kernel_zz(t[0], t[1], angle.unwrap() * sign),
        }
    }

    /// 2x2 matrix [m00 m01; m10 m11] on `target`.
    fn kernel_single(&mut self, target: usize, m: [Complex<T>; 4]) {
        let bit = 1usize << target;
        let low = bit - 1;
        for k in 0..(self.amps.len() >> 1) {
            let i0 = ((k & !low) << 1) | (k & low);
            let i1 = i0 | bit;
            let a0 = self.amps[i0];
            let a1 = self.amps[i1];
            self.amps[i0] = m[0] * a0 + m[1] * a1;
            self.amps[i1] = m[2] * a0 + m[3] * a1;
        }
    }

    fn kernel_h(&mut self, target: usize) {
        let r = T::FRAC_1_SQRT_2();
        let bit = 1usize << target;
        let low = bit - 1;
        for k in 0..(self.amps.len() >> 1) {
            let i0 = ((k & !low) << 1) | (k & low);
            let i1 = i0 | bit;
            let a0 = self.amps[i0];
            let a1 = self.amps[i1];
            self.amps[i0] = (a0 + a1).scale(r);
            self.amps[i1] = (a0 - a1).scale(r);
        }
    }

    /// X on `target`, restricted to indices where all `ctrl_mask` bits are set.
    fn kernel_flip(&mut self, ctrl_mask: usize, target_bit: usize) {
        for i in 0..self.amps.len() {
            if i & target_bit == 0 && i & ctrl_mask == ctrl_mask {
                self.amps.swap(i, i | target_bit);
            }
        }
    }

    fn kernel_y(&mut self, target: usize) {
        let bit = 1usize << target;
        let low = bit - 1;
        for k in 0..(self.amps.len() >> 1) {
            let i0 = ((k & !low) << 1) | (k & low);
            let i1 = i0 | bit;
            let a0 = self.amps[i0];
            let a1 = self.amps[i1];
            // Y = [[0, -i], [i, 0]]
            self.amps[i0] = Complex::new(a1.im, -a1.re);
            self.amps[i1] = Complex::new(-a0.im, a0.re);
        }
    }

    /// Multiply amplitudes with the target bit set by `phase`.
    fn kernel_phase(&mut self, target: usize, phase: Complex<T>) {
        let bit = 1usize << target;
        for (i, a) in self.amps.iter_mut().enumerate() {
            if i & bit != 0 {
                *a = *a * phase;
            }
        }
    }

    fn kernel_diag(&mut self, target: usize, lo: Complex<T>, hi: Complex<T>) {
        let bit = 1usize << target;
        for (i, a) in self.amps.iter_mut().enumerate() {
            *a = *a * if i & bit == 0 { lo } else { hi };
        }
    }

    /// exp(-i theta XX/2) or exp(-i theta YY/2) on (q0, q1).
    fn kernel_xx_yy(&mut self, q0: usize, q1: usize, theta: T, yy: bool) {
        let half = theta * T::of(0.5);
        let (c, s) = (half.cos(), half.sin());
        let mask = (1usize << q0) | (1usize << q1);
        let hi = 1usize << q0.max(q1);
        for i in 0..self.amps.len() {
            if i & hi != 0 {
                continue;
            }
            let j = i ^ mask;
            let a = self.amps[i];
            let b = self.amps[j];
            // XX|b> flips both bits; YY|b> flips both bits with sign
            // -(-1)^(parity of the two bits).
            let (sa, sb) = if yy {
                let pi = (i & mask).count_ones() & 1;
                let pj = (j & mask).count_ones() & 1;
                (
                    if pi == 0 { -T::one() } else { T::one() },
                    if pj == 0 { -T::one() } else { T::one() },
                )
            } else {
                (T::one(), T::one())
            };
            // new_i = c*a - i*s*sign_j*b ; new_j = c*b - i*s*sign_i*a
            self.amps[i] = a.scale(c) + Complex::new(T::zero(), -s * sb) * b;
            self.amps[j] = b.scale(c) + Complex::new(T::zero(), -s * sa) * a;
        }
    }

    /// exp(-i theta ZZ/2): phase e^{-i theta/2} on equal bits, e^{+i theta/2}
    /// on unequal bits.
    fn kernel_zz(&mut self, q0: usize, q1: usize, theta: T) {
        let half = theta * T::of(0.5);
        let eq = Complex::new(half.cos(), -half.sin());
        let ne = eq.conj();
        let b0 = 1usize << q0;
        let b1 = 1usize << q1;
        for (i, a) in self.amps.iter_mut().enumerate() {
            let same = ((i & b0 != 0) == (i & b1 != 0)) as usize;
            *a = *a * if same == 1 { eq } else { ne };
        }
    }

    /// Largest absolute amplitude difference after aligning the global phase
    /// of `other` to this state (phase taken at this state's largest
    /// amplitude). Global phase is physically unobservable.
    pub fn max_diff_up_to_phase(&self, other: &Statevector<T>) -> T {
        assert_eq!(self.amps.len(), other.amps.len(), "dimension mismatch");
        let mut pivot = 0;
        let mut best = T::zero();
        for (i, a) in self.amps.iter().enumerate() {
            let n = a.norm_sqr();
            if n > best {
                best = n;
                pivot = i;
            }
        }
        let pa = self.amps[pivot];
        let pb = other.amps[pivot];
        let phase = if pb.norm() > T::epsilon() {
            (pa / pb) / Complex::new((pa / pb).norm(), T::zero())
        } else {
            Complex::new(T::one(), T::zero())
        };
        let mut max = T::zero();
        for (a, b) in self.amps.iter().zip(other.amps.iter()) {
            let d = (*a - *b * phase).norm();
            if d > max {
                max = d;
            }
        }
        max
    }
}
