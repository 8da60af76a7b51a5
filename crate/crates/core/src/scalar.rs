//! Integer scalar abstraction backing all exact arithmetic.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_traits::{PrimInt, Signed};

/// Signed integer type usable as the backing storage of half-integer
/// coordinates. Weight coordinates stay within a few multiples of the rank,
/// so any width from `i16` up is plenty; `i64` is the default everywhere.
pub trait Scalar:
    PrimInt + Signed + Hash + Debug + Display + Send + Sync + 'static
{
    /// Lossless conversion from a small constant.
    fn from_i32(v: i32) -> Self {
        Self::from(v).expect("scalar narrower than i32")
    }
}

impl<T> Scalar for T where
    T: PrimInt + Signed + Hash + Debug + Display + Send + Sync + 'static
{
}
