//! IDX binary format (the MNIST/Fashion-MNIST container): big-endian 32-bit
//! header words, then unsigned bytes. Images use magic 0x00000803 with dims
//! (count, rows, cols); labels use magic 0x00000801 with dims (count).

use super::error::DataError;
use super::image::GrayImage;

pub const IMAGES_MAGIC: u32 = 0x0000_0803;
pub const LABELS_MAGIC: u32 = 0x0000_0801;

struct Reader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn new(bytes: &'a [u8]) -> Self {
        Reader { bytes, pos: 0 }
    }

    fn take(&mut self, n: usize) -> Result<&'a [u8], DataError> {
        if self.pos + n > self.bytes.len() {
            return Err(DataError::Truncated {
                needed: self.pos + n,
                available: self.bytes.len(),
            });
        }
        let slice = &self.bytes[self.pos..self.pos + n];
        self.pos += n;
        Ok(slice)
    }

    fn u32_be(&mut self) -> Result<u32, DataError> {
        let b = self.take(4)?;
        Ok(u32::from_be_bytes([b[0], b[1], b[2], b[3]]))
    }
}

pub fn parse_idx_images(bytes: &[u8]) -> Result<Vec<GrayImage>, DataError> {
    let mut r = Reader::new(bytes);
    let magic = r.u32_be()?;
    if magic != IMAGES_MAGIC {
        return Err(DataError::BadMagic {
            expected: IMAGES_MAGIC,
            got: magic,
        });
    }
    let count = r.u32_be()? as usize;
    let rows = r.u32_be()? as usize;
    let cols = r.u32_be()? as usize;
    let mut images = Vec::with_capacity(count);
    for _ in 0..count {
        let pixels = r.take(rows * cols)?.to_vec();
        images.push(GrayImage::new(cols, rows, pixels)?);
    }
    Ok(images)
}

pub fn parse_idx_labels(bytes: &[u8]) -> Result<Vec<u8>, DataError> {
    let mut r = Reader::new(bytes);
    let magic = r.u32_be()?;
    if magic != LABELS_MAGIC {
        return Err(DataError::BadMagic {
            expected: LABELS_MAGIC,
            got: magic,
        });
    }
    let count = r.u32_be()? as usize;
    Ok(r.take(count)?.to_vec())
}

/// Inverse of [`parse_idx_images`]; all images must share one size.
pub fn write_idx_images(images: &[GrayImage]) -> Vec<u8> {
    let (rows, cols) = images
        .first()
        .map(|i| (i.height(), i.width()))
        .unwrap_or((0, 0));
    let mut out = Vec::new();
    out.extend_from_slice(&IMAGES_MAGIC.to_be_bytes());
    out.extend_from_slice(&(images.len() as u32).to_be_bytes());
    out.extend_from_slice(&(rows as u32).to_be_bytes());
    out.extend_from_slice(&(cols as u32).to_be_bytes());
    for img in images {
        assert_eq!(
            (img.height(), img.width()),
            (rows, cols),
            "mixed image sizes in one IDX stream"
        );
        out.extend_from_slice(img.pixels());
    }
    out
}

pub fn write_idx_labels(labels: &[u8]) -> Vec<u8> {
    let mut out = Vec::new();
    out.extend_from_slice(&LABELS_MAGIC.to_be_bytes());
    out.extend_from_slice(&(labels.len() as u32).to_be_bytes());
    out.extend_from_slice(labels);
    out
}
