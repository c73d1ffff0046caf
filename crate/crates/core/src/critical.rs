//! Critical groups `K(V)`.
//!
//! `K(V)` is defined through `Z ⊕ K(V) ≅ Z^{ℓ+1} / im L_V`. The definitional
//! route runs Smith normal form on `L_V`; the remaining functions are closed
//! forms and cardinality formulas that the definitional route is checked
//! against.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{char_poly, dot, rank, smith_normal_form, AbelianGroup};
use crate::rep::{gcd_all, laplacian, ModuleClass, RepDatum};
use crate::{AbelianGroupStructure, Int, IntMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalGroupResult {
    pub group: AbelianGroupStructure,
    pub laplacian: IntMatrix,
    /// Invariant factors of `L_V`, zeros included.
    pub smith_diagonal: Vec<Int>,
    pub nullity: usize,
    pub finite: bool,
    pub cardinality: Option<Int>,
}

/// `K(V)` via Smith normal form of `L_V`.
///
/// The cokernel of `L_V` always has a free summand since `s^T L_V = 0` and
/// `s` has a unit coordinate; exactly one `Z` is split off.
pub fn critical_group(rep: &RepDatum, v: &ModuleClass) -> Result<CriticalGroupResult> {
    let l = laplacian(rep, v)?;
    let snf = smith_normal_form(&l)?;
    let nullity = l.rows() - snf.rank;
    let group = snf.cokernel().without_free_summand().ok_or_else(|| {
        Error::InternalConsistency("cokernel of L_V has no free summand".into())
    })?;
    let finite = group.is_finite();
    if finite != (nullity == 1) {
        return Err(Error::InternalConsistency(format!(
            "nullity {nullity} but K(V) = {group}"
        )));
    }
    Ok(CriticalGroupResult {
        cardinality: group.order(),
        group,
        laplacian: l,
        smith_diagonal: snf.diagonal,
        nullity,
        finite,
    })
}

/// `K(A)` of the regular module from `γ = gcd(p)`, `d = dim A` and the
/// number of simples: trivial when there is one simple, otherwise
/// `Z/γ ⊕ (Z/d)^{ℓ-1}`.
pub fn regular_closed_form(gamma: &Int, d: &Int, ell_plus_1: usize) -> Result<AbelianGroupStructure> {
    if ell_plus_1 == 0 {
        return Err(Error::InvalidParameters("need at least one simple module".into()));
    }
    if !gamma.is_positive() || !d.is_positive() {
        return Err(Error::InvalidParameters(format!(
            "γ = {gamma} and d = {d} must be positive"
        )));
    }
    if !d.is_multiple_of(gamma) {
        return Err(Error::InvalidParameters(format!("γ = {gamma} does not divide d = {d}")));
    }
    if ell_plus_1 == 1 {
        return Ok(AbelianGroup::trivial());
    }
    let mut torsion = Vec::with_capacity(ell_plus_1 - 1);
    if !gamma.is_one() {
        torsion.push(gamma.clone());
    }
    if !d.is_one() {
        torsion.extend(std::iter::repeat_n(d.clone(), ell_plus_1 - 2));
    }
    AbelianGroup::new(0, torsion)
}

fn check_rank_one_input(s: &[Int], p: &[Int]) -> Result<Int> {
    if s.len() != p.len() {
        return Err(Error::LengthMismatch {
            expected: s.len(),
            got: p.len(),
        });
    }
    if s.is_empty() {
        return Err(Error::EmptyMatrix);
    }
    if !s.iter().any(One::is_one) {
        return Err(Error::NoUnitCoordinate);
    }
    let d = dot(s, p);
    if d.is_zero() {
        return Err(Error::ZeroDimension);
    }
    Ok(d)
}

/// `d I - p s^T` with `d = s^T p`.
pub fn rank_one_update(s: &[Int], p: &[Int]) -> Result<IntMatrix> {
    let d = check_rank_one_input(s, p)?;
    IntMatrix::scalar(s.len(), d).sub(&IntMatrix::outer(p, s))
}

/// Closed form of `coker(d I - p s^T) = Z ⊕ Z/γ ⊕ (Z/d)^{ℓ-1}`.
pub fn rank_one_closed_form(s: &[Int], p: &[Int]) -> Result<AbelianGroupStructure> {
    let d = check_rank_one_input(s, p)?.abs();
    let gamma = gcd_all(p);
    let ell = s.len() - 1;
    let mut factors = Vec::with_capacity(ell);
    if ell > 0 {
        factors.push(gamma);
        factors.extend(std::iter::repeat_n(d, ell - 1));
    }
    Ok(AbelianGroup::from_cyclic_factors(1, &factors))
}

/// Full cokernel of `d I - p s^T` computed by Smith normal form and checked
/// against [`rank_one_closed_form`].
pub fn rank_one_cokernel(s: &[Int], p: &[Int]) -> Result<AbelianGroupStructure> {
    let l = rank_one_update(s, p)?;
    let by_smith = smith_normal_form(&l)?.cokernel();
    let closed = rank_one_closed_form(s, p)?;
    if by_smith != closed {
        return Err(Error::InternalConsistency(format!(
            "Smith form gives {by_smith}, closed form gives {closed}"
        )));
    }
    Ok(by_smith)
}

/// `|q(0)|` where `det(xI - L) = x q(x)`, i.e. the product of the nonzero
/// eigenvalues up to sign. Fails unless 0 is a simple root.
fn nonzero_eigen_product(l: &IntMatrix) -> Result<Int> {
    let cp = char_poly(l)?;
    if cp.x_adic_valuation() != 1 {
        let nullity = l.rows() - rank(l);
        return Err(Error::Nullity(nullity));
    }
    Ok(cp.div_x().expect("x divides").coeff(0).abs())
}

/// Torsion order of `coker L` for `L` of nullity one, from the spectrum and
/// primitive generators of the two integer null spaces:
/// `#K = |λ_1 ⋯ λ_ℓ| / |n_left^T n_right|`.
pub fn lorenzini_cardinality(l: &IntMatrix, n_right: &[Int], n_left: &[Int]) -> Result<Int> {
    let size = l.require_square()?;
    for v in [n_right, n_left] {
        if v.len() != size {
            return Err(Error::LengthMismatch {
                expected: size,
                got: v.len(),
            });
        }
        if !gcd_all(v).is_one() {
            return Err(Error::InvalidInput("null vectors must be primitive".into()));
        }
    }
    if l.mul_vec(n_right)?.iter().any(|x| !x.is_zero()) {
        return Err(Error::InvalidInput("n_right is not a right null vector".into()));
    }
    if l.vec_mul(n_left)?.iter().any(|x| !x.is_zero()) {
        return Err(Error::InvalidInput("n_left is not a left null vector".into()));
    }
    let pairing = dot(n_left, n_right).abs();
    if pairing.is_zero() {
        return Err(Error::ZeroDotProduct);
    }
    let product = nonzero_eigen_product(l)?;
    let (q, r) = product.div_rem(&pairing);
    if !r.is_zero() {
        return Err(Error::InternalConsistency(format!(
            "eigenvalue product {product} not divisible by pairing {pairing}"
        )));
    }
    Ok(q)
}

/// `#K(V) = |γ/d · λ_1 ⋯ λ_ℓ|` from the characteristic polynomial of `L_V`.
pub fn eigenvalue_cardinality(rep: &RepDatum, v: &ModuleClass) -> Result<Int> {
    let l = laplacian(rep, v)?;
    let nullity = l.rows() - rank(&l);
    if nullity != 1 {
        return Err(Error::KInfinite(format!("L_V has nullity {nullity}")));
    }
    let product = nonzero_eigen_product(&l)?;
    let numerator = rep.gamma() * product;
    let d = rep.s_dot_p();
    let (q, r) = numerator.div_rem(&d);
    if !r.is_zero() {
        return Err(Error::InternalConsistency(format!(
            "γ·λ_1⋯λ_ℓ = {numerator} is not divisible by d = {d}"
        )));
    }
    Ok(q.abs())
}
