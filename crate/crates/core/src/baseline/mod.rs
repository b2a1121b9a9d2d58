//! Classical comparison model: a small fully-connected network with sigmoid
//! activations, binary cross-entropy loss, backpropagation and Adam. Shares
//! the [`TrainReport`] schema with the quantum trainer.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::imgdata::Label;
use crate::optim::OptimizerState;
use crate::qnn::{EpochMetrics, TrainConfig, TrainReport};
use crate::scalar::Real;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MlpError {
    #[error("input has {got} features, model expects {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("network needs at least input and output layers")]
    BadArchitecture,

    #[error("dataset is empty")]
    EmptyDataset,

    #[error("{inputs} inputs but {labels} labels")]
    LengthMismatch { inputs: usize, labels: usize },
}

/// Feed-forward sigmoid network with a single probability output.
/// Parameters live in one flat vector laid out as [W1, b1, W2, b2, ...]
/// with row-major weight blocks.
#[derive(Clone, Debug)]
pub struct MlpModel<T> {
    layer_sizes: Vec<usize>,
    params: Vec<T>,
}

fn sigmoid<T: Real>(z: T) -> T {
    T::one() / (T::one() + (-z).exp())
}

impl<T: Real> MlpModel<T> {
    /// Xavier-uniform initialization from a seeded generator; biases zero.
    pub fn new(layer_sizes: &[usize], seed: u64) -> Result<Self, MlpError> {
        if layer_sizes.len() < 2 || *layer_sizes.last().unwrap() != 1 {
            return Err(MlpError::BadArchitecture);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut params = Vec::new();
        for w in layer_sizes.windows(2) {
            let (fan_in, fan_out) = (w[0], w[1]);
            let scale = (6.0 / (fan_in + fan_out) as f64).sqrt();
            for _ in 0..fan_in * fan_out {
                params.push(T::of((rng.gen::<f64>() * 2.0 - 1.0) * scale));
            }
            for _ in 0..fan_out {
                params.push(T::zero());
            }
        }
        Ok(MlpModel {
            layer_sizes: layer_sizes.to_vec(),
            params,
        })
    }

    /// Build directly from a flat parameter vector (tests).
    pub fn from_params(layer_sizes: &[usize], params: Vec<T>) -> Result<Self, MlpError> {
        let model = MlpModel {
            layer_sizes: layer_sizes.to_vec(),
            params,
        };
        if layer_sizes.len() < 2 || *layer_sizes.last().unwrap() != 1 {
            return Err(MlpError::BadArchitecture);
        }
        assert_eq!(
            model.params.len(),
            model.param_count(),
            "flat parameter vector has the wrong length"
        );
        Ok(model)
    }

    pub fn layer_sizes(&self) -> &[usize] {
        &self.layer_sizes
    }

    pub fn params(&self) -> &[T] {
        &self.params
    }

    pub fn param_count(&self) -> usize {
        self.layer_sizes
            .windows(2)
            .map(|w| w[0] * w[1] + w[1])
            .sum()
    }

    pub fn input_dim(&self) -> usize {
        self.layer_sizes[0]
    }

    /// P(label = +1) in (0, 1).
    pub fn forward(&self, x: &[T]) -> Result<T, MlpError> {
        Ok(*self.activations(x)?.last().unwrap().first().unwrap())
    }

    fn activations(&self, x: &[T]) -> Result<Vec<Vec<T>>, MlpError> {
        if x.len() != self.input_dim() {
            return Err(MlpError::DimensionMismatch {
                expected: self.input_dim(),
                got: x.len(),
            });
        }
        let mut acts = vec![x.to_vec()];
        let mut offset = 0;
        for w in self.layer_sizes.windows(2) {
            let (fan_in, fan_out) = (w[0], w[1]);
            let weights = &self.params[offset..offset + fan_in * fan_out];
            let biases = &self.params[offset + fan_in * fan_out..offset + fan_in * fan_out + fan_out];
            offset += fan_in * fan_out + fan_out;
            let prev = acts.last().unwrap();
            let mut next = Vec::with_capacity(fan_out);
            for o in 0..fan_out {
                let mut z = biases[o];
                let row = &weights[o * fan_in..(o + 1) * fan_in];
                for (wi, xi) in row.iter().zip(prev) {
                    z += *wi * *xi;
                }
                next.push(sigmoid(z));
            }
            acts.push(next);
        }
        Ok(acts)
    }

    /// Binary cross-entropy loss and its flat gradient for one example.
    fn loss_and_gradient(&self, x: &[T], target: T) -> Result<(T, Vec<T>), MlpError> {
        let acts = self.activations(x)?;
        let p = acts.last().unwrap()[0];
        let eps = T::of(1e-12);
        let clamped = p.max(eps).min(T::one() - eps);
        let loss = -(target * clamped.ln() + (T::one() - target) * (T::one() - clamped).ln());

        let mut grads = vec![T::zero(); self.params.len()];
        // output delta for sigmoid + BCE: dL/dz = p - t
        let mut delta = vec![p - target];
        let mut offsets = Vec::new();
        let mut off = 0;
        for w in self.layer_sizes.windows(2) {
            offsets.push(off);
            off += w[0] * w[1] + w[1];
        }
        for layer in (0..self.layer_sizes.len() - 1).rev() {
            let fan_in = self.layer_sizes[layer];
            let fan_out = self.layer_sizes[layer + 1];
            let w_off = offsets[layer];
            let b_off = w_off + fan_in * fan_out;
            let prev = &acts[layer];
            for o in 0..fan_out {
                for i in 0..fan_in {
                    grads[w_off + o * fan_in + i] = delta[o] * prev[i];
                }
                grads[b_off + o] = delta[o];
            }
            if layer > 0 {
                let mut next_delta = vec![T::zero(); fan_in];
                for (i, nd) in next_delta.iter_mut().enumerate() {
                    let mut acc = T::zero();
                    for o in 0..fan_out {
                        acc += self.params[w_off + o * fan_in + i] * delta[o];
                    }
                    let a = prev[i];
                    *nd = acc * a * (T::one() - a);
                }
                delta = next_delta;
            }
        }
        Ok((loss, grads))
    }
}

fn target_of(label: Label) -> f64 {
    match label {
        Label::Plus => 1.0,
        Label::Minus => 0.0,
    }
}

fn predicted_label<T: Real>(p: T) -> Label {
    if p > T::of(0.5) {
        Label::Plus
    } else if p < T::of(0.5) {
        Label::Minus
    } else {
        Label::Plus
    }
}

/// Train with minibatch Adam (or SGD) on binary cross-entropy; labels +1/-1
/// map to targets 1/0. Deterministic per seed. The report follows the same
/// shape as the quantum trainer: `epochs[0]` is the initialization point.
pub fn mlp_train<T: Real>(
    model: &MlpModel<T>,
    train_x: &[Vec<T>],
    train_labels: &[Label],
    test_x: &[Vec<T>],
    test_labels: &[Label],
    config: &TrainConfig,
) -> Result<(MlpModel<T>, TrainReport), MlpError> {
    if train_x.is_empty() {
        return Err(MlpError::EmptyDataset);
    }
    if train_x.len() != train_labels.len() {
        return Err(MlpError::LengthMismatch {
            inputs: train_x.len(),
            labels: train_labels.len(),
        });
    }
    if test_x.len() != test_labels.len() {
        return Err(MlpError::LengthMismatch {
            inputs: test_x.len(),
            labels: test_labels.len(),
        });
    }
    let started = Instant::now();
    let mut model = model.clone();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let lr = T::of(config.learning_rate);
    let mut opt = OptimizerState::new(
        config.optimizer,
        model.params.len(),
        T::of(config.beta1),
        T::of(config.beta2),
        T::of(config.epsilon),
    );

    let evaluate = |model: &MlpModel<T>| -> Result<EpochMetrics, MlpError> {
        let mut loss = T::zero();
        let mut correct = 0usize;
        for (x, &label) in train_x.iter().zip(train_labels) {
            let (l, _) = (model.loss_and_gradient(x, T::of(target_of(label))))?;
            loss += l;
            if predicted_label(model.forward(x)?) == label {
                correct += 1;
            }
        }
        let mut test_correct = 0usize;
        for (x, &label) in test_x.iter().zip(test_labels) {
            if predicted_label(model.forward(x)?) == label {
                test_correct += 1;
            }
        }
        Ok(EpochMetrics {
            loss: (loss / T::of(train_x.len() as f64)).to_f64_lossy(),
            train_acc: correct as f64 / train_x.len() as f64,
            test_acc: if test_x.is_empty() {
                0.0
            } else {
                test_correct as f64 / test_x.len() as f64
            },
        })
    };

    let mut epochs = vec![evaluate(&model)?];
    let batch_size = config.batch_size.max(1);
    let mut order: Vec<usize> = (0..train_x.len()).collect();
    for _ in 0..config.epochs {
        order.shuffle(&mut rng);
        for batch in order.chunks(batch_size) {
            let mut grad = vec![T::zero(); model.params.len()];
            for &i in batch {
                let t = T::of(target_of(train_labels[i]));
                let (_, g) = model.loss_and_gradient(&train_x[i], t)?;
                for (acc, gi) in grad.iter_mut().zip(g) {
                    *acc += gi;
                }
            }
            let scale = T::one() / T::of(batch.len() as f64);
            for g in &mut grad {
                *g *= scale;
            }
            opt.step(&mut model.params, &grad, lr);
        }
        epochs.push(evaluate(&model)?);
    }

    let final_test_acc = epochs.last().map(|e| e.test_acc).unwrap_or(0.0);
    let report = TrainReport {
        seed: config.seed,
        config: config.clone(),
        epochs,
        final_test_acc,
        wall_time_s: started.elapsed().as_secs_f64(),
    };
    Ok((model, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::optim::Optimizer;

    #[test]
    fn zero_parameters_give_half() {
        let model = MlpModel::from_params(&[3, 2, 1], vec![0.0f64; 3 * 2 + 2 + 2 + 1]).unwrap();
        let p = model.forward(&[0.4, -1.0, 2.0]).unwrap();
        assert!((p - 0.5).abs() < 1e-12);
    }

    #[test]
    fn output_stays_in_open_unit_interval() {
        let model = MlpModel::<f64>::new(&[4, 8, 1], 3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..1000 {
            let x: Vec<f64> = (0..4).map(|_| rng.gen::<f64>() * 10.0 - 5.0).collect();
            let p = model.forward(&x).unwrap();
            assert!(p > 0.0 && p < 1.0);
        }
    }

    #[test]
    fn matches_hand_computed_two_two_one_network() {
        // W1 = [[1, -1], [0.5, 0.25]], b1 = [0, 0.1]
        // W2 = [[2, -1]], b2 = [0.3]
        let params = vec![1.0, -1.0, 0.5, 0.25, 0.0, 0.1, 2.0, -1.0, 0.3];
        let model = MlpModel::from_params(&[2, 2, 1], params).unwrap();
        let x = [0.2f64, 0.4];
        let h1 = 1.0 / (1.0 + f64::exp(-(0.2 - 0.4)));
        let h2 = 1.0 / (1.0 + f64::exp(-(0.1 + 0.2 * 0.5 + 0.4 * 0.25)));
        let expect = 1.0 / (1.0 + f64::exp(-(0.3 + 2.0 * h1 - h2)));
        let got = model.forward(&x).unwrap();
        assert!((got - expect).abs() < 1e-12, "{got} vs {expect}");
    }

    #[test]
    fn dimension_mismatch_is_error() {
        let model = MlpModel::<f64>::new(&[3, 2, 1], 0).unwrap();
        assert!(matches!(
            model.forward(&[1.0, 2.0]),
            Err(MlpError::DimensionMismatch { expected: 3, got: 2 })
        ));
    }

    #[test]
    fn backprop_matches_finite_differences() {
        let model = MlpModel::<f64>::new(&[3, 4, 1], 11).unwrap();
        let x = vec![0.3, -0.8, 1.2];
        let t = 1.0;
        let (_, grads) = model.loss_and_gradient(&x, t).unwrap();
        let h = 1e-6;
        for k in 0..model.params.len() {
            let mut perturbed = model.clone();
            perturbed.params[k] += h;
            let (lp, _) = perturbed.loss_and_gradient(&x, t).unwrap();
            perturbed.params[k] -= 2.0 * h;
            let (lm, _) = perturbed.loss_and_gradient(&x, t).unwrap();
            let fd = (lp - lm) / (2.0 * h);
            assert!(
                (grads[k] - fd).abs() <= 1e-5 * fd.abs().max(1.0),
                "param {k}: {} vs {fd}",
                grads[k]
            );
        }
    }

    #[test]
    fn xor_trains_to_full_accuracy() {
        let x: Vec<Vec<f64>> = vec![
            vec![0.0, 0.0],
            vec![0.0, 1.0],
            vec![1.0, 0.0],
            vec![1.0, 1.0],
        ];
        let labels = vec![Label::Minus, Label::Plus, Label::Plus, Label::Minus];
        let model = MlpModel::<f64>::new(&[2, 8, 1], 5).unwrap();
        // 2000 full-batch updates
        let config = TrainConfig {
            epochs: 2000,
            batch_size: 4,
            learning_rate: 0.05,
            seed: 5,
            ..TrainConfig::default()
        };
        let (trained, report) = mlp_train(&model, &x, &labels, &x, &labels, &config).unwrap();
        assert_eq!(report.epochs.last().unwrap().train_acc, 1.0);
        assert!(trained.params().iter().all(|p| p.is_finite()));
    }

    #[test]
    fn loss_decreases_over_first_epoch_on_separable_data() {
        let x: Vec<Vec<f64>> = (0..40)
            .map(|i| {
                let c = if i % 2 == 0 { 1.0 } else { -1.0 };
                vec![c * (1.0 + (i as f64) * 0.01), c * 0.5]
            })
            .collect();
        let labels: Vec<Label> = (0..40)
            .map(|i| if i % 2 == 0 { Label::Plus } else { Label::Minus })
            .collect();
        let model = MlpModel::<f64>::new(&[2, 4, 1], 7).unwrap();
        let config = TrainConfig {
            epochs: 1,
            batch_size: 8,
            learning_rate: 1e-3,
            seed: 7,
            ..TrainConfig::default()
        };
        let (_, report) = mlp_train(&model, &x, &labels, &x, &labels, &config).unwrap();
        assert!(report.epochs[1].loss < report.epochs[0].loss);
    }

    #[test]
    fn deterministic_per_seed() {
        let x: Vec<Vec<f64>> = vec![vec![0.1, 0.9], vec![0.8, 0.2]];
        let labels = vec![Label::Plus, Label::Minus];
        let model = MlpModel::<f64>::new(&[2, 3, 1], 42).unwrap();
        let config = TrainConfig {
            epochs: 5,
            seed: 42,
            optimizer: Optimizer::Adam,
            ..TrainConfig::default()
        };
        let (_, mut a) = mlp_train(&model, &x, &labels, &x, &labels, &config).unwrap();
        let (_, mut b) = mlp_train(&model, &x, &labels, &x, &labels, &config).unwrap();
        a.wall_time_s = 0.0;
        b.wall_time_s = 0.0;
        assert_eq!(a, b);
    }
}
