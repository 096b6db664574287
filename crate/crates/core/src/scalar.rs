//! Scalar abstraction for the floating-point side of the crate.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive};

/// Real scalar usable for planar geometry and complex evaluation.
pub trait Real:
    Float + FloatConst + FromPrimitive + Debug + Display + Send + Sync + 'static
{
    /// Converts an `f64` constant, panicking is impossible for the supported types.
    fn lit(value: f64) -> Self {
        Self::from_f64(value).expect("f64 literal representable")
    }
}

impl Real for f32 {}
impl Real for f64 {}
