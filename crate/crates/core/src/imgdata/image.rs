//! 8-bit grayscale images, block-average downscaling and binarization.

use super::error::DataError;
use crate::scalar::Real;

/// 2D grid of 8-bit pixel intensities, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrayImage {
    width: usize,
    height: usize,
    pixels: Vec<u8>,
}

impl GrayImage {
    pub fn new(width: usize, height: usize, pixels: Vec<u8>) -> Result<Self, DataError> {
        if pixels.len() != width * height {
            return Err(DataError::BadPixelCount {
                width,
                height,
                len: pixels.len(),
            });
        }
        Ok(GrayImage {
            width,
            height,
            pixels,
        })
    }

    pub fn constant(width: usize, height: usize, value: u8) -> Self {
        GrayImage {
            width,
            height,
            pixels: vec![value; width * height],
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn pixels(&self) -> &[u8] {
        &self.pixels
    }

    pub fn pixel(&self, x: usize, y: usize) -> u8 {
        self.pixels[y * self.width + x]
    }

    /// Pixels scaled into [0, 1].
    pub fn to_normalized<T: Real>(&self) -> Vec<T> {
        let inv = T::one() / T::of(255.0);
        self.pixels.iter().map(|&p| T::of(p as f64) * inv).collect()
    }
}

/// Block-average pooling with area-weighted fractional boundaries; each
/// output pixel is the weighted mean of its source rectangle, rounded half
/// up.
pub fn downscale(image: &GrayImage, out_w: usize, out_h: usize) -> Result<GrayImage, DataError> {
    if out_w == 0 || out_h == 0 {
        return Err(DataError::ZeroOutputDims);
    }
    if out_w > image.width() {
        return Err(DataError::UpscaleUnsupported {
            out: out_w,
            input: image.width(),
        });
    }
    if out_h > image.height() {
        return Err(DataError::UpscaleUnsupported {
            out: out_h,
            input: image.height(),
        });
    }
    let sx = image.width() as f64 / out_w as f64;
    let sy = image.height() as f64 / out_h as f64;
    let mut pixels = Vec::with_capacity(out_w * out_h);
    for oy in 0..out_h {
        let y0 = oy as f64 * sy;
        let y1 = (oy + 1) as f64 * sy;
        for ox in 0..out_w {
            let x0 = ox as f64 * sx;
            let x1 = (ox + 1) as f64 * sx;
            let mut total = 0.0;
            for sy_i in y0.floor() as usize..(y1.ceil() as usize).min(image.height()) {
                let wy = overlap(sy_i as f64, sy_i as f64 + 1.0, y0, y1);
                if wy <= 0.0 {
                    continue;
                }
                for sx_i in x0.floor() as usize..(x1.ceil() as usize).min(image.width()) {
                    let wx = overlap(sx_i as f64, sx_i as f64 + 1.0, x0, x1);
                    if wx <= 0.0 {
                        continue;
                    }
                    total += wx * wy * image.pixel(sx_i, sy_i) as f64;
                }
            }
            let mean = total / ((x1 - x0) * (y1 - y0));
            // round half up
            let value = (mean + 0.5).floor().clamp(0.0, 255.0) as u8;
            pixels.push(value);
        }
    }
    GrayImage::new(out_w, out_h, pixels)
}

fn overlap(a0: f64, a1: f64, b0: f64, b1: f64) -> f64 {
    (a1.min(b1) - a0.max(b0)).max(0.0)
}

/// 1 where pixel/255 exceeds 0.5, else 0.
pub fn binarize_pixel(p: u8) -> u8 {
    (p as f64 / 255.0 > 0.5) as u8
}

/// Binarize every pixel of an image into a flat row-major vector.
pub fn binarize_image(image: &GrayImage) -> Vec<u8> {
    image.pixels().iter().map(|&p| binarize_pixel(p)).collect()
}

/// Min-max normalize a feature vector to [0, 1], then threshold at 0.5.
/// A constant vector normalizes to all zeros.
pub fn binarize_features<T: Real>(features: &[T]) -> Vec<u8> {
    if features.is_empty() {
        return Vec::new();
    }
    let mut lo = features[0];
    let mut hi = features[0];
    for &f in features {
        if f < lo {
            lo = f;
        }
        if f > hi {
            hi = f;
        }
    }
    let span = hi - lo;
    if span <= T::zero() {
        return vec![0; features.len()];
    }
    let half = T::of(0.5);
    features
        .iter()
        .map(|&f| (((f - lo) / span) > half) as u8)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_image_downscales_to_itself() {
        let img = GrayImage::constant(7, 5, 77);
        let out = downscale(&img, 3, 2).unwrap();
        assert!(out.pixels().iter().all(|&p| p == 77));
    }

    #[test]
    fn two_by_two_mean_rounds_half_up() {
        let img = GrayImage::new(2, 2, vec![0, 255, 0, 255]).unwrap();
        let out = downscale(&img, 1, 1).unwrap();
        // mean 127.5 rounds half up to 128
        assert_eq!(out.pixels(), &[128]);
    }

    #[test]
    fn divisible_blocks_are_exact() {
        // 28x28 -> 4x4 uses exact 7x7 blocks
        let mut pixels = vec![0u8; 28 * 28];
        for by in 0..4 {
            for bx in 0..4 {
                let v = (by * 4 + bx) as u8 * 10;
                for y in 0..7 {
                    for x in 0..7 {
                        pixels[(by * 7 + y) * 28 + bx * 7 + x] = v;
                    }
                }
            }
        }
        let img = GrayImage::new(28, 28, pixels).unwrap();
        let out = downscale(&img, 4, 4).unwrap();
        for by in 0..4 {
            for bx in 0..4 {
                assert_eq!(out.pixel(bx, by), (by * 4 + bx) as u8 * 10);
            }
        }
    }

    #[test]
    fn fractional_boundaries_weight_by_area() {
        // 3x1 -> 2x1: left output covers pixel 0 plus half of pixel 1.
        let img = GrayImage::new(3, 1, vec![100, 200, 40]).unwrap();
        let out = downscale(&img, 2, 1).unwrap();
        // left: (100 + 0.5*200) / 1.5 = 133.33 -> 133
        // right: (0.5*200 + 40) / 1.5 = 93.33 -> 93
        assert_eq!(out.pixels(), &[133, 93]);
    }

    #[test]
    fn downscale_errors() {
        let img = GrayImage::constant(4, 4, 1);
        assert_eq!(downscale(&img, 0, 2), Err(DataError::ZeroOutputDims));
        assert!(matches!(
            downscale(&img, 8, 2),
            Err(DataError::UpscaleUnsupported { .. })
        ));
    }

    #[test]
    fn binarize_threshold_cases() {
        assert_eq!(binarize_pixel(0), 0);
        assert_eq!(binarize_pixel(255), 1);
        // 128/255 = 0.502 > 0.5, 127/255 = 0.498
        assert_eq!(binarize_pixel(128), 1);
        assert_eq!(binarize_pixel(127), 0);
    }

    #[test]
    fn binarize_features_min_max() {
        let out = binarize_features::<f64>(&[-1.0, 0.0, 3.0]);
        assert_eq!(out, vec![0, 0, 1]);
        // constant vector -> all zeros
        assert_eq!(binarize_features::<f64>(&[2.0, 2.0]), vec![0, 0]);
    }

    #[test]
    fn downscale_preserves_mean_for_divisible_sizes() {
        let pixels: Vec<u8> = (0..64).map(|i| (i * 4) as u8).collect();
        let img = GrayImage::new(8, 8, pixels).unwrap();
        let out = downscale(&img, 4, 4).unwrap();
        let mean_in: f64 =
            img.pixels().iter().map(|&p| p as f64).sum::<f64>() / img.pixels().len() as f64;
        let mean_out: f64 =
            out.pixels().iter().map(|&p| p as f64).sum::<f64>() / out.pixels().len() as f64;
        assert!((mean_in - mean_out).abs() <= 1.0);
    }
}
