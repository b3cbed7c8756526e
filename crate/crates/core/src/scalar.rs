use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_traits::{Float, FromPrimitive};

/// Floating-point element type for weights and statistics: `f32` or `f64`.
///
/// `Display` must print the shortest representation that parses back to the
/// same value, which is what the std impls for `f32`/`f64` do.
pub trait Scalar:
    Float + FromPrimitive + Display + Debug + FromStr + Default + Send + Sync + 'static
{
    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count representable as float")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
