//! Labeled datasets: class filtering, deterministic subsampling and the
//! line-delimited cache format.

use std::io::{BufRead, Write};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::error::DataError;
use super::image::GrayImage;
use crate::scalar::Real;

/// Binary class label in {+1, -1}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Label {
    Plus,
    Minus,
}

impl Label {
    pub fn sign<T: Real>(self) -> T {
        match self {
            Label::Plus => T::one(),
            Label::Minus => -T::one(),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Label::Plus => "+1",
            Label::Minus => "-1",
        }
    }

    pub fn from_str_token(s: &str) -> Result<Self, DataError> {
        match s {
            "+1" | "1" => Ok(Label::Plus),
            "-1" => Ok(Label::Minus),
            other => Err(DataError::BadLabel(other.to_string())),
        }
    }

    /// Prediction label from a real-valued score; sign(0) counts as +1.
    pub fn from_sign<T: Real>(v: T) -> Self {
        if v < T::zero() {
            Label::Minus
        } else {
            Label::Plus
        }
    }
}

/// Images paired with +/-1 labels.
#[derive(Clone, Debug, PartialEq)]
pub struct LabeledImages {
    pub name: String,
    pub images: Vec<GrayImage>,
    pub labels: Vec<Label>,
}

impl LabeledImages {
    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// Serialize as one record per line: `label,width,height,p0,p1,...`.
    pub fn write_cache<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        for (img, label) in self.images.iter().zip(&self.labels) {
            write!(w, "{},{},{}", label.as_str(), img.width(), img.height())?;
            for p in img.pixels() {
                write!(w, ",{p}")?;
            }
            writeln!(w)?;
        }
        Ok(())
    }

    pub fn read_cache<R: BufRead>(r: R, name: &str) -> Result<Self, DataError> {
        let mut images = Vec::new();
        let mut labels = Vec::new();
        for (i, line) in r.lines().enumerate() {
            let lineno = i + 1;
            let line = line.map_err(|e| DataError::CacheParse {
                line: lineno,
                msg: e.to_string(),
            })?;
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut parts = line.split(',');
            let label = Label::from_str_token(parts.next().unwrap_or(""))?;
            let width: usize = parse_field(parts.next(), lineno, "width")?;
            let height: usize = parse_field(parts.next(), lineno, "height")?;
            let pixels: Vec<u8> = parts
                .map(|p| {
                    p.trim().parse().map_err(|_| DataError::CacheParse {
                        line: lineno,
                        msg: format!("bad pixel `{p}`"),
                    })
                })
                .collect::<Result<_, _>>()?;
            images.push(GrayImage::new(width, height, pixels)?);
            labels.push(label);
        }
        Ok(LabeledImages {
            name: name.to_string(),
            images,
            labels,
        })
    }
}

fn parse_field(field: Option<&str>, line: usize, what: &str) -> Result<usize, DataError> {
    field
        .and_then(|f| f.trim().parse().ok())
        .ok_or_else(|| DataError::CacheParse {
            line,
            msg: format!("missing or bad {what}"),
        })
}

/// Real-valued feature vectors paired with +/-1 labels (post-PCA data).
#[derive(Clone, Debug, PartialEq)]
pub struct LabeledFeatures<T> {
    pub name: String,
    pub features: Vec<Vec<T>>,
    pub labels: Vec<Label>,
}

impl<T: Real> LabeledFeatures<T> {
    pub fn len(&self) -> usize {
        self.features.len()
    }

    pub fn is_empty(&self) -> bool {
        self.features.is_empty()
    }

    /// One record per line: `label,k,v0,v1,...`.
    pub fn write_cache<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        for (vec, label) in self.features.iter().zip(&self.labels) {
            write!(w, "{},{}", label.as_str(), vec.len())?;
            for v in vec {
                write!(w, ",{v}")?;
            }
            writeln!(w)?;
        }
        Ok(())
    }

    pub fn read_cache<R: BufRead>(r: R, name: &str) -> Result<Self, DataError> {
        let mut features = Vec::new();
        let mut labels = Vec::new();
        for (i, line) in r.lines().enumerate() {
            let lineno = i + 1;
            let line = line.map_err(|e| DataError::CacheParse {
                line: lineno,
                msg: e.to_string(),
            })?;
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut parts = line.split(',');
            let label = Label::from_str_token(parts.next().unwrap_or(""))?;
            let k: usize = parse_field(parts.next(), lineno, "dimension")?;
            let vec: Vec<T> = parts
                .map(|p| {
                    p.trim().parse().map_err(|_| DataError::CacheParse {
                        line: lineno,
                        msg: format!("bad value `{p}`"),
                    })
                })
                .collect::<Result<_, _>>()?;
            if vec.len() != k {
                return Err(DataError::CacheParse {
                    line: lineno,
                    msg: format!("expected {k} values, got {}", vec.len()),
                });
            }
            features.push(vec);
            labels.push(label);
        }
        Ok(LabeledFeatures {
            name: name.to_string(),
            features,
            labels,
        })
    }
}

/// Keep only two source classes and map them onto {+1, -1}.
pub fn filter_binary(
    images: &[GrayImage],
    labels: &[u8],
    pos_class: u8,
    neg_class: u8,
    name: &str,
) -> LabeledImages {
    let mut out_images = Vec::new();
    let mut out_labels = Vec::new();
    for (img, &label) in images.iter().zip(labels) {
        let mapped = if label == pos_class {
            Label::Plus
        } else if label == neg_class {
            Label::Minus
        } else {
            continue;
        };
        out_images.push(img.clone());
        out_labels.push(mapped);
    }
    LabeledImages {
        name: name.to_string(),
        images: out_images,
        labels: out_labels,
    }
}

/// Draw `n` items without replacement, deterministically for a fixed seed,
/// preserving image/label pairing. `n == len` yields a seeded permutation.
pub fn subsample(dataset: &LabeledImages, n: usize, seed: u64) -> Result<LabeledImages, DataError> {
    if n > dataset.len() {
        return Err(DataError::SubsampleTooLarge {
            n,
            len: dataset.len(),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut indices: Vec<usize> = (0..dataset.len()).collect();
    indices.shuffle(&mut rng);
    indices.truncate(n);
    Ok(LabeledImages {
        name: dataset.name.clone(),
        images: indices.iter().map(|&i| dataset.images[i].clone()).collect(),
        labels: indices.iter().map(|&i| dataset.labels[i]).collect(),
    })
}
