//! Scalar abstraction: everything numeric in this crate is generic over a
//! floating-point type so the same code runs at f32 or f64 precision.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_traits::{Float, FloatConst, FromPrimitive, NumAssignOps, ToPrimitive};

/// Floating-point scalar (f32 or f64) used for amplitudes, angles, losses
/// and trainable parameters.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + NumAssignOps
    + FromStr
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    /// Convert from f64, panicking only for non-finite values a float type
    /// cannot represent (never the case for f32/f64).
    fn of(v: f64) -> Self {
        Self::from_f64(v).expect("f64 value not representable")
    }

    /// Lossless-for-reporting conversion back to f64.
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().expect("scalar not representable as f64")
    }
}

impl Real for f32 {}
impl Real for f64 {}
