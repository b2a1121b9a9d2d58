//! Hinge loss and sign-agreement accuracy over [-1, 1] readouts.

use crate::imgdata::Label;
use crate::scalar::Real;

/// max(0, 1 - y * y_hat).
pub fn hinge_loss<T: Real>(y_true: Label, y_pred: T) -> T {
    (T::one() - y_true.sign::<T>() * y_pred).max(T::zero())
}

/// Batch-averaged hinge loss.
pub fn batch_hinge_loss<T: Real>(labels: &[Label], preds: &[T]) -> T {
    assert_eq!(labels.len(), preds.len());
    if labels.is_empty() {
        return T::zero();
    }
    let sum = labels
        .iter()
        .zip(preds)
        .fold(T::zero(), |acc, (&y, &p)| acc + hinge_loss(y, p));
    sum / T::of(labels.len() as f64)
}

/// Fraction of predictions whose sign matches the label; sign(0) counts
/// as +1.
pub fn hinge_accuracy<T: Real>(labels: &[Label], preds: &[T]) -> T {
    assert_eq!(labels.len(), preds.len());
    if labels.is_empty() {
        return T::zero();
    }
    let correct = labels
        .iter()
        .zip(preds)
        .filter(|(&y, &p)| Label::from_sign(p) == y)
        .count();
    T::of(correct as f64) / T::of(labels.len() as f64)
}
