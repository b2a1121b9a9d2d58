//! Principal component analysis via symmetric eigendecomposition of the
//! sample covariance matrix (cyclic Jacobi rotations).

use super::error::DataError;
use crate::scalar::Real;

/// Mean vector plus the top-k orthonormal eigenvectors of the sample
/// covariance matrix, eigenvalues sorted descending.
#[derive(Clone, Debug, PartialEq)]
pub struct PcaModel<T> {
    mean: Vec<T>,
    components: Vec<Vec<T>>,
    eigenvalues: Vec<T>,
}

impl<T: Real> PcaModel<T> {
    pub fn mean(&self) -> &[T] {
        &self.mean
    }

    /// Component rows, orthonormal, highest-variance first.
    pub fn components(&self) -> &[Vec<T>] {
        &self.components
    }

    pub fn k(&self) -> usize {
        self.components.len()
    }

    /// Variance captured by each kept component (descending).
    pub fn explained_variance(&self) -> &[T] {
        &self.eigenvalues
    }
}

/// Fit a k-component PCA on row vectors of equal dimension.
///
/// A single-sample dataset has zero covariance; the fit succeeds with all
/// eigenvalues zero.
pub fn pca_fit<T: Real>(data: &[Vec<T>], k: usize) -> Result<PcaModel<T>, DataError> {
    if data.is_empty() {
        return Err(DataError::EmptyDataset);
    }
    let dim = data[0].len();
    if k > dim {
        return Err(DataError::KTooLarge { k, dim });
    }
    let n = data.len();
    let inv_n = T::one() / T::of(n as f64);
    let mut mean = vec![T::zero(); dim];
    for row in data {
        debug_assert_eq!(row.len(), dim);
        for (m, &v) in mean.iter_mut().zip(row) {
            *m += v;
        }
    }
    for m in &mut mean {
        *m *= inv_n;
    }

    // sample covariance (divides by n - 1; zero matrix when n == 1)
    let denom = if n > 1 {
        T::one() / T::of((n - 1) as f64)
    } else {
        T::zero()
    };
    let mut cov = vec![T::zero(); dim * dim];
    for row in data {
        for i in 0..dim {
            let di = row[i] - mean[i];
            for j in i..dim {
                cov[i * dim + j] += di * (row[j] - mean[j]);
            }
        }
    }
    for i in 0..dim {
        for j in i..dim {
            let v = cov[i * dim + j] * denom;
            cov[i * dim + j] = v;
            cov[j * dim + i] = v;
        }
    }

    let (mut eigenvalues, mut vectors) = jacobi_eigh(&mut cov, dim);

    // sort descending by eigenvalue
    let mut order: Vec<usize> = (0..dim).collect();
    order.sort_by(|&a, &b| {
        eigenvalues[b]
            .partial_cmp(&eigenvalues[a])
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    eigenvalues = order.iter().map(|&i| eigenvalues[i]).collect();
    vectors = order.iter().map(|&i| std::mem::take(&mut vectors[i])).collect();

    Ok(PcaModel {
        mean,
        components: vectors.into_iter().take(k).collect(),
        eigenvalues: eigenvalues.into_iter().take(k).collect(),
    })
}

/// Project a vector: components * (x - mean).
pub fn pca_transform<T: Real>(model: &PcaModel<T>, x: &[T]) -> Vec<T> {
    assert_eq!(x.len(), model.mean.len(), "dimension mismatch");
    model
        .components
        .iter()
        .map(|c| {
            let mut acc = T::zero();
            for ((&ci, &xi), &mi) in c.iter().zip(x).zip(&model.mean) {
                acc += ci * (xi - mi);
            }
            acc
        })
        .collect()
}

/// Cyclic Jacobi eigendecomposition of a symmetric matrix (row-major,
/// destroyed in place). Returns (eigenvalues, eigenvector rows).
fn jacobi_eigh<T: Real>(a: &mut [T], dim: usize) -> (Vec<T>, Vec<Vec<T>>) {
    let mut v = vec![T::zero(); dim * dim];
    for i in 0..dim {
        v[i * dim + i] = T::one();
    }
    if dim == 0 {
        return (Vec::new(), Vec::new());
    }
    let tol = T::epsilon() * frobenius(a) * T::of(dim as f64);
    for _sweep in 0..100 {
        let mut off = T::zero();
        for p in 0..dim {
            for q in (p + 1)..dim {
                off += a[p * dim + q] * a[p * dim + q];
            }
        }
        if off.sqrt() <= tol {
            break;
        }
        for p in 0..dim {
            for q in (p + 1)..dim {
                let apq = a[p * dim + q];
                if apq.abs() <= T::epsilon() * tol.max(T::min_positive_value()) {
                    continue;
                }
                let app = a[p * dim + p];
                let aqq = a[q * dim + q];
                let theta = (aqq - app) / (T::of(2.0) * apq);
                let t = {
                    let s = if theta >= T::zero() { T::one() } else { -T::one() };
                    s / (theta.abs() + (theta * theta + T::one()).sqrt())
                };
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;
                for i in 0..dim {
                    let aip = a[i * dim + p];
                    let aiq = a[i * dim + q];
                    a[i * dim + p] = c * aip - s * aiq;
                    a[i * dim + q] = s * aip + c * aiq;
                }
                for j in 0..dim {
                    let apj = a[p * dim + j];
                    let aqj = a[q * dim + j];
                    a[p * dim + j] = c * apj - s * aqj;
                    a[q * dim + j] = s * apj + c * aqj;
                }
                for j in 0..dim {
                    let vpj = v[p * dim + j];
                    let vqj = v[q * dim + j];
                    v[p * dim + j] = c * vpj - s * vqj;
                    v[q * dim + j] = s * vpj + c * vqj;
                }
            }
        }
    }
    let eigenvalues: Vec<T> = (0..dim).map(|i| a[i * dim + i]).collect();
    let vectors: Vec<Vec<T>> = (0..dim)
        .map(|i| v[i * dim..(i + 1) * dim].to_vec())
        .collect();
    (eigenvalues, vectors)
}

fn frobenius<T: Real>(a: &[T]) -> T {
    a.iter().fold(T::zero(), |acc, &x| acc + x * x).sqrt()
}
