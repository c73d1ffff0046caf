//! Critical groups `K(V)` of modules over finite-dimensional Hopf algebras,
//! computed in exact arithmetic.

pub mod brauer;
pub mod catalog;
pub mod chipfire;
pub mod critical;
pub mod error;
pub mod linalg;
pub mod rep;
pub mod richness;
pub mod scalar;
pub mod schema;

pub use error::{Error, Result};

/// Arbitrary-precision integer used throughout the crate.
pub type Int = num_bigint::BigInt;
/// Exact rational over [`Int`].
pub type Rational = num_rational::BigRational;

pub type IntMatrix = linalg::Matrix<Int>;
pub type RatMatrix = linalg::Matrix<Rational>;
pub type SmithDecomposition = linalg::SmithForm<Int>;
pub type AbelianGroupStructure = linalg::AbelianGroup<Int>;
pub type IntPoly = linalg::Poly<Int>;
