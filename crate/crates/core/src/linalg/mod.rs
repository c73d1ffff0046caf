//! Exact integer and rational linear algebra, generic over the scalar type.

pub mod abelian;
pub mod elim;
pub mod matrix;
pub mod poly;
pub mod smith;

pub use abelian::AbelianGroup;
pub use elim::{determinant, rank, rat_inverse, rat_solve, to_rational};
pub use matrix::{dot, Matrix};
pub use poly::{char_poly, Poly};
pub use smith::{cokernel_structure, smith_normal_form, SmithForm};
