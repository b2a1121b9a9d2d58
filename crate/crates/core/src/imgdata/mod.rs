//! Classical data handling: IDX ingestion, binary-task filtering,
//! downscaling, PCA projection and binarization.

mod dataset;
mod error;
mod idx;
mod image;
mod pca;

pub use dataset::{filter_binary, subsample, Label, LabeledFeatures, LabeledImages};
pub use error::DataError;
pub use idx::{
    parse_idx_images, parse_idx_labels, write_idx_images, write_idx_labels, IMAGES_MAGIC,
    LABELS_MAGIC,
};
pub use image::{binarize_features, binarize_image, binarize_pixel, downscale, GrayImage};
pub use pca::{pca_fit, pca_transform, PcaModel};
