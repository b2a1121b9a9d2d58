use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DataError {
    #[error("bad IDX magic: expected {expected:#010x}, got {got:#010x}")]
    BadMagic { expected: u32, got: u32 },

    #[error("truncated IDX stream: needed {needed} bytes, had {available}")]
    Truncated { needed: usize, available: usize },

    #[error("pixel buffer length {len} does not match {width}x{height}")]
    BadPixelCount {
        width: usize,
        height: usize,
        len: usize,
    },

    #[error("zero output dimensions")]
    ZeroOutputDims,

    #[error("output {out} exceeds input {input} along one axis")]
    UpscaleUnsupported { out: usize, input: usize },

    #[error("cannot subsample {n} items from a dataset of {len}")]
    SubsampleTooLarge { n: usize, len: usize },

    #[error("PCA component count {k} exceeds dimension {dim}")]
    KTooLarge { k: usize, dim: usize },

    #[error("dataset is empty")]
    EmptyDataset,

    #[error("label {0} is not +1/-1")]
    BadLabel(String),

    #[error("cache line {line}: {msg}")]
    CacheParse { line: usize, msg: String },
}
