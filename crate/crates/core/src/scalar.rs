//! Scalar traits the exact linear algebra layer is generic over.
//!
//! Everything in [`crate::linalg`] is written against these traits so the
//! same code runs on machine integers (handy for quick experiments and for
//! cross-checking) and on arbitrary-precision integers, which is what the
//! rest of the crate uses through the aliases in the crate root.

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed};

/// A commutative ring element with exact arithmetic.
pub trait Scalar: Clone + Debug + Display + PartialEq + Num + Send + Sync + 'static {}

impl<T> Scalar for T where T: Clone + Debug + Display + PartialEq + Num + Send + Sync + 'static {}

/// An exact Euclidean integer type (`i64`, `i128`, `BigInt`, ...).
///
/// Division `/` is expected to truncate and `%` to give a remainder of
/// absolute value strictly smaller than the divisor.
pub trait IntScalar: Scalar + Integer + Signed + Ord + FromPrimitive {}

impl<T> IntScalar for T where T: Scalar + Integer + Signed + Ord + FromPrimitive {}

/// Exact field of fractions over an [`IntScalar`].
pub type Frac<T> = Ratio<T>;
