//! Seeded, reproducible training of the variational classifier.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::error::QnnError;
use super::grad::{forward_and_gradient, grad_hinge_from_states};
use super::loss::{batch_hinge_loss, hinge_accuracy};
use super::model::QnnModel;
use crate::imgdata::Label;
use crate::optim::{Optimizer, OptimizerState};
use crate::qsim::{Circuit, Statevector};
use crate::scalar::Real;

/// Training hyperparameters. Defaults follow the usual Adam setup with
/// lr 0.02 and 20 epochs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrainConfig {
    pub epochs: usize,
    pub batch_size: usize,
    pub learning_rate: f64,
    pub seed: u64,
    pub optimizer: Optimizer,
    pub beta1: f64,
    pub beta2: f64,
    pub epsilon: f64,
}

impl Default for TrainConfig {
    fn default() -> Self {
        TrainConfig {
            epochs: 20,
            batch_size: 32,
            learning_rate: 0.02,
            seed: 0,
            optimizer: Optimizer::Adam,
            beta1: 0.9,
            beta2: 0.999,
            epsilon: 1e-8,
        }
    }
}

/// Metrics after one epoch (loss and accuracy on the training set, accuracy
/// on the held-out set).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EpochMetrics {
    pub loss: f64,
    pub train_acc: f64,
    pub test_acc: f64,
}

/// Full trajectory of one training run. `epochs[0]` is the initialization
/// point (before any update); one entry per training epoch follows.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrainReport {
    pub seed: u64,
    pub config: TrainConfig,
    pub epochs: Vec<EpochMetrics>,
    pub final_test_acc: f64,
    pub wall_time_s: f64,
}

impl TrainReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

/// Train with minibatch parameter-shift gradients and hinge loss.
///
/// Deterministic for a fixed config: parameters start at uniform(0, 2pi)
/// from a seeded generator, shuffles draw from the same stream, and batch
/// reductions run in index order.
pub fn train<T: Real>(
    model: &QnnModel<T>,
    train_inputs: &[Circuit<T>],
    train_labels: &[Label],
    test_inputs: &[Circuit<T>],
    test_labels: &[Label],
    config: &TrainConfig,
) -> Result<TrainReport, QnnError> {
    if train_inputs.is_empty() {
        return Err(QnnError::EmptyDataset);
    }
    if train_inputs.len() != train_labels.len() {
        return Err(QnnError::LengthMismatch {
            inputs: train_inputs.len(),
            labels: train_labels.len(),
        });
    }
    if test_inputs.len() != test_labels.len() {
        return Err(QnnError::LengthMismatch {
            inputs: test_inputs.len(),
            labels: test_labels.len(),
        });
    }
    let started = Instant::now();

    // encoder states do not depend on theta; prepare them once
    let train_states: Vec<Statevector<T>> = train_inputs
        .par_iter()
        .map(|c| model.input_state(c))
        .collect::<Result<_, _>>()?;
    let test_states: Vec<Statevector<T>> = test_inputs
        .par_iter()
        .map(|c| model.input_state(c))
        .collect::<Result<_, _>>()?;

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut theta: Vec<T> = (0..model.num_params())
        .map(|_| T::of(rng.gen::<f64>() * std::f64::consts::TAU))
        .collect();
    let lr = T::of(config.learning_rate);
    let mut opt = OptimizerState::new(
        config.optimizer,
        theta.len(),
        T::of(config.beta1),
        T::of(config.beta2),
        T::of(config.epsilon),
    );

    let evaluate = |theta: &[T]| -> Result<EpochMetrics, QnnError> {
        let train_preds = predict_batch(model, &train_states, theta)?;
        let test_preds = predict_batch(model, &test_states, theta)?;
        Ok(EpochMetrics {
            loss: batch_hinge_loss(train_labels, &train_preds).to_f64_lossy(),
            train_acc: hinge_accuracy(train_labels, &train_preds).to_f64_lossy(),
            test_acc: if test_preds.is_empty() {
                0.0
            } else {
                hinge_accuracy(test_labels, &test_preds).to_f64_lossy()
            },
        })
    };

    let mut epochs = vec![evaluate(&theta)?];
    let batch_size = config.batch_size.max(1);
    let mut order: Vec<usize> = (0..train_states.len()).collect();
    for _ in 0..config.epochs {
        order.shuffle(&mut rng);
        for batch in order.chunks(batch_size) {
            let states: Vec<Statevector<T>> =
                batch.iter().map(|&i| train_states[i].clone()).collect();
            let labels: Vec<Label> = batch.iter().map(|&i| train_labels[i]).collect();
            let grad = grad_hinge_from_states(model, &states, &labels, &theta)?;
            opt.step(&mut theta, &grad, lr);
        }
        epochs.push(evaluate(&theta)?);
    }

    let final_test_acc = epochs.last().map(|e| e.test_acc).unwrap_or(0.0);
    Ok(TrainReport {
        seed: config.seed,
        config: config.clone(),
        epochs,
        final_test_acc,
        wall_time_s: started.elapsed().as_secs_f64(),
    })
}

fn predict_batch<T: Real>(
    model: &QnnModel<T>,
    states: &[Statevector<T>],
    theta: &[T],
) -> Result<Vec<T>, QnnError> {
    states
        .par_iter()
        .map(|s| model.forward_from_state(s, theta))
        .collect()
}

/// Forward pass plus per-example gradients over prepared states; exposed for
/// callers that implement their own update rules.
pub fn batch_forward_and_gradient<T: Real>(
    model: &QnnModel<T>,
    states: &[Statevector<T>],
    theta: &[T],
) -> Result<Vec<(T, Vec<T>)>, QnnError> {
    states
        .par_iter()
        .map(|s| forward_and_gradient(model, s, theta))
        .collect()
}
