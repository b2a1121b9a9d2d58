//! Flat-vector optimizers shared by the quantum and classical trainers.

use serde::{Deserialize, Serialize};

use crate::scalar::Real;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Optimizer {
    Adam,
    Sgd,
}

/// Adam state over one flat parameter vector.
pub struct AdamState<T> {
    m: Vec<T>,
    v: Vec<T>,
    step: usize,
    beta1: T,
    beta2: T,
    epsilon: T,
}

impl<T: Real> AdamState<T> {
    pub fn new(len: usize, beta1: T, beta2: T, epsilon: T) -> Self {
        AdamState {
            m: vec![T::zero(); len],
            v: vec![T::zero(); len],
            step: 0,
            beta1,
            beta2,
            epsilon,
        }
    }

    pub fn step(&mut self, params: &mut [T], grads: &[T], lr: T) {
        debug_assert_eq!(params.len(), grads.len());
        self.step += 1;
        let t = self.step as i32;
        let bias1 = T::one() - self.beta1.powi(t);
        let bias2 = T::one() - self.beta2.powi(t);
        for i in 0..params.len() {
            let g = grads[i];
            self.m[i] = self.beta1 * self.m[i] + (T::one() - self.beta1) * g;
            self.v[i] = self.beta2 * self.v[i] + (T::one() - self.beta2) * g * g;
            let m_hat = self.m[i] / bias1;
            let v_hat = self.v[i] / bias2;
            params[i] = params[i] - lr * m_hat / (v_hat.sqrt() + self.epsilon);
        }
    }
}

/// Either optimizer behind one `step` call.
pub enum OptimizerState<T> {
    Adam(AdamState<T>),
    Sgd,
}

impl<T: Real> OptimizerState<T> {
    pub fn new(kind: Optimizer, len: usize, beta1: T, beta2: T, epsilon: T) -> Self {
        match kind {
            Optimizer::Adam => OptimizerState::Adam(AdamState::new(len, beta1, beta2, epsilon)),
            Optimizer::Sgd => OptimizerState::Sgd,
        }
    }

    pub fn step(&mut self, params: &mut [T], grads: &[T], lr: T) {
        match self {
            OptimizerState::Adam(a) => a.step(params, grads, lr),
            OptimizerState::Sgd => {
                for (p, &g) in params.iter_mut().zip(grads) {
                    *p = *p - lr * g;
                }
            }
        }
    }
}
