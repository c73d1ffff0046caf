//! Tensor-richness and the finiteness criteria for `K(V)`.
//!
//! Five conditions are equivalent for a module `V`: the reduced Laplacian
//! (trivial row and column struck out) is a nonsingular M-matrix; it is
//! nonsingular; `L_V` has nullity one; `K(V)` is finite; `V` is tensor-rich.
//! [`finiteness_report`] decides each one by its own route and refuses to
//! return if they disagree.

use std::collections::VecDeque;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::critical::critical_group;
use crate::error::{Error, Result};
use crate::linalg::{determinant, rank, rat_inverse};
use crate::rep::{laplacian, mckay_matrix, ModuleClass, RepDatum};
use crate::{Int, IntMatrix, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitenessReport {
    pub nonsingular_m_matrix: bool,
    pub reduced_nonsingular: bool,
    pub nullity_one: bool,
    pub k_finite: bool,
    pub tensor_rich: bool,
    /// Least `t` with `⊕_{k<=t} V^{⊗k}` rich, when `V` is tensor-rich.
    pub witness_t: Option<usize>,
}

impl FinitenessReport {
    pub fn flags(&self) -> [bool; 5] {
        [
            self.nonsingular_m_matrix,
            self.reduced_nonsingular,
            self.nullity_one,
            self.k_finite,
            self.tensor_rich,
        ]
    }

    pub fn consistent(&self) -> bool {
        let f = self.flags();
        f.iter().all(|&b| b == f[0])
    }
}

/// `L_V` with the trivial row and column deleted.
pub fn reduced_laplacian(rep: &RepDatum, v: &ModuleClass) -> Result<IntMatrix> {
    if rep.num_simples() < 2 {
        return Err(Error::InvalidParameters(
            "reduced Laplacian needs at least two simple modules".into(),
        ));
    }
    let l = laplacian(rep, v)?;
    Ok(l.minor(rep.trivial_index, rep.trivial_index))
}

/// Why `q` fails to be a nonsingular M-matrix, or `None` if it is one.
pub fn m_matrix_violation(q: &IntMatrix) -> Option<String> {
    if !q.is_square() {
        return Some(format!("{}x{} is not square", q.rows(), q.cols()));
    }
    if !q.has_nonpositive_off_diagonal() {
        return Some("positive off-diagonal entry".into());
    }
    let inv = match rat_inverse(q) {
        Ok(inv) => inv,
        Err(_) => return Some("singular".into()),
    };
    inv.entries()
        .iter()
        .any(Signed::is_negative)
        .then(|| "inverse has a negative entry".into())
}

/// Nonpositive off-diagonal, invertible, and `Q^{-1} >= 0` entrywise.
pub fn is_nonsingular_m_matrix(q: &IntMatrix) -> bool {
    m_matrix_violation(q).is_none()
}

/// `x = Q^{-1} 1`, which satisfies `x > 0` and `Q x = 1 > 0`.
pub fn plemmons_certificate(q: &IntMatrix) -> Result<Vec<Rational>> {
    if let Some(reason) = m_matrix_violation(q) {
        return Err(Error::NotMMatrix(reason));
    }
    let inv = rat_inverse(q)?;
    let ones = vec![Rational::one(); q.rows()];
    let x = inv.mul_vec(&ones)?;
    let qx = q.map(|a| Rational::from_integer(a.clone())).mul_vec(&x)?;
    if !x.iter().all(Signed::is_positive) || qx != ones {
        return Err(Error::InternalConsistency(
            "Q^{-1} 1 is not a positive certificate".into(),
        ));
    }
    Ok(x)
}

/// Scales [`plemmons_certificate`] to the least positive integer vector.
pub fn integral_certificate(q: &IntMatrix) -> Result<Vec<Int>> {
    let x = plemmons_certificate(q)?;
    let denom = x.iter().fold(Int::one(), |acc, r| acc.lcm(r.denom()));
    Ok(x.iter()
        .map(|r| (r * Rational::from_integer(denom.clone())).to_integer())
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Richness {
    pub rich: bool,
    /// Eccentricity of the trivial node in the McKay quiver, when every
    /// node is reachable.
    pub witness_t: Option<usize>,
}

/// Breadth-first distances from the trivial simple along `j -> i` whenever
/// `S_i` is a composition factor of `S_j ⊗ V`.
pub fn quiver_distances(rep: &RepDatum, v: &ModuleClass) -> Result<Vec<Option<usize>>> {
    let m = mckay_matrix(rep, v)?;
    let n = rep.num_simples();
    let mut dist = vec![None; n];
    dist[rep.trivial_index] = Some(0);
    let mut queue = VecDeque::from([rep.trivial_index]);
    while let Some(j) = queue.pop_front() {
        let dj = dist[j].expect("queued nodes have distances");
        for i in 0..n {
            if dist[i].is_none() && m[(i, j)].is_positive() {
                dist[i] = Some(dj + 1);
                queue.push_back(i);
            }
        }
    }
    Ok(dist)
}

/// Every simple occurs in some tensor power of `V`.
pub fn is_tensor_rich(rep: &RepDatum, v: &ModuleClass) -> Result<Richness> {
    let dist = quiver_distances(rep, v)?;
    let witness_t = dist
        .iter()
        .try_fold(0usize, |acc, d| d.map(|d| acc.max(d)));
    Ok(Richness {
        rich: witness_t.is_some(),
        witness_t,
    })
}

/// Decides all five finiteness criteria independently.
///
/// With a single simple module the reduced Laplacian is empty; by
/// convention every condition is then reported true.
pub fn finiteness_report(rep: &RepDatum, v: &ModuleClass) -> Result<FinitenessReport> {
    v.check_for(rep)?;
    if rep.num_simples() == 1 {
        return Ok(FinitenessReport {
            nonsingular_m_matrix: true,
            reduced_nonsingular: true,
            nullity_one: true,
            k_finite: true,
            tensor_rich: true,
            witness_t: Some(0),
        });
    }
    let reduced = reduced_laplacian(rep, v)?;
    let l = laplacian(rep, v)?;
    let richness = is_tensor_rich(rep, v)?;
    let report = FinitenessReport {
        nonsingular_m_matrix: is_nonsingular_m_matrix(&reduced),
        reduced_nonsingular: !determinant(&reduced)?.is_zero(),
        nullity_one: rank(&l) + 1 == rep.num_simples(),
        k_finite: critical_group(rep, v)?.finite,
        tensor_rich: richness.rich,
        witness_t: richness.witness_t,
    };
    if !report.consistent() {
        return Err(Error::EquivalenceViolation(format!("{:?}", report.flags())));
    }
    Ok(report)
}
