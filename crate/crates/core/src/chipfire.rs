//! Chip-firing on avalanche-finite matrices.
//!
//! A site `i` is unstable when it holds at least `L_ii` chips; firing it
//! subtracts column `i` of `L`. For an avalanche-finite `L` (an integer
//! nonsingular M-matrix) every configuration stabilizes, and the stable
//! result does not depend on the firing order.
//!
//! These dynamics model `coker L`. For the reduced Laplacian of a module this
//! agrees with `K(V)` when the algebra is semisimple; in general the two
//! groups can differ.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rep::{mckay_matrix, ModuleClass, RepDatum};
use crate::richness::{integral_certificate, is_nonsingular_m_matrix};
use crate::{Int, IntMatrix};

pub const DEFAULT_STEP_LIMIT: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChipConfig {
    chips: Vec<Int>,
}

impl ChipConfig {
    pub fn new(chips: Vec<Int>) -> Result<Self> {
        if let Some(i) = chips.iter().position(Signed::is_negative) {
            return Err(Error::InvalidInput(format!(
                "site {i} holds a negative number of chips"
            )));
        }
        Ok(ChipConfig { chips })
    }

    pub fn from_i64(chips: &[i64]) -> Result<Self> {
        Self::new(chips.iter().map(|&c| Int::from(c)).collect())
    }

    pub fn zeros(len: usize) -> Self {
        ChipConfig {
            chips: vec![Int::zero(); len],
        }
    }

    pub fn chips(&self) -> &[Int] {
        &self.chips
    }

    pub fn len(&self) -> usize {
        self.chips.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chips.is_empty()
    }

    pub fn add(&self, other: &ChipConfig) -> Result<ChipConfig> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                got: other.len(),
            });
        }
        Ok(ChipConfig {
            chips: self.chips.iter().zip(&other.chips).map(|(a, b)| a + b).collect(),
        })
    }

    /// First site with at least `L_ii` chips.
    pub fn first_unstable(&self, l: &IntMatrix) -> Option<usize> {
        (0..self.len()).find(|&i| self.chips[i] >= l[(i, i)])
    }
}

impl std::fmt::Display for ChipConfig {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.chips.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiringRecord {
    pub stable: ChipConfig,
    /// Number of times each site fired.
    pub firings: Vec<Int>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StabilizeOptions {
    pub step_limit: u64,
    /// Skip the avalanche-finite check; the step limit still applies.
    pub check_avalanche_finite: bool,
}

impl Default for StabilizeOptions {
    fn default() -> Self {
        StabilizeOptions {
            step_limit: DEFAULT_STEP_LIMIT,
            check_avalanche_finite: true,
        }
    }
}

pub fn is_avalanche_finite(l: &IntMatrix) -> bool {
    is_nonsingular_m_matrix(l)
}

fn check_input(l: &IntMatrix, c: &ChipConfig, opts: &StabilizeOptions) -> Result<()> {
    let n = l.require_square()?;
    if c.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: c.len(),
        });
    }
    if opts.check_avalanche_finite && !is_avalanche_finite(l) {
        return Err(Error::NotAvalancheFinite);
    }
    Ok(())
}

/// Stabilizes `c`, always firing the lowest-index unstable site.
pub fn stabilize(l: &IntMatrix, c: &ChipConfig) -> Result<FiringRecord> {
    stabilize_with(l, c, &StabilizeOptions::default())
}

pub fn stabilize_with(l: &IntMatrix, c: &ChipConfig, opts: &StabilizeOptions) -> Result<FiringRecord> {
    stabilize_by(l, c, opts, |unstable| unstable[0])
}

/// Stabilizes `c`, letting `choose` pick which of the currently unstable
/// sites fires next. `choose` must return one of the sites it is given.
pub fn stabilize_by(
    l: &IntMatrix,
    c: &ChipConfig,
    opts: &StabilizeOptions,
    mut choose: impl FnMut(&[usize]) -> usize,
) -> Result<FiringRecord> {
    check_input(l, c, opts)?;
    let n = c.len();
    let mut chips = c.chips.clone();
    let mut firings = vec![Int::zero(); n];
    let mut steps = 0u64;
    loop {
        let unstable: Vec<usize> = (0..n).filter(|&i| chips[i] >= l[(i, i)]).collect();
        if unstable.is_empty() {
            break;
        }
        if steps >= opts.step_limit {
            return Err(Error::StepLimitExceeded(opts.step_limit));
        }
        let site = choose(&unstable);
        if !unstable.contains(&site) {
            return Err(Error::Precondition(format!("site {site} is not unstable")));
        }
        for (k, chip) in chips.iter_mut().enumerate() {
            *chip -= &l[(k, site)];
        }
        firings[site] += 1;
        steps += 1;
    }
    Ok(FiringRecord {
        stable: ChipConfig::new(chips)?,
        firings,
    })
}

/// Column `trivial_index` of `M_V` with its trivial entry removed.
///
/// Only defined for semisimple data, detected by `p[trivial] == 1`.
pub fn burning_config(rep: &RepDatum, v: &ModuleClass) -> Result<ChipConfig> {
    if !rep.is_semisimple() {
        return Err(Error::NotSemisimple(format!(
            "p at the trivial simple is {}, not 1",
            rep.p[rep.trivial_index]
        )));
    }
    let m = mckay_matrix(rep, v)?;
    let column = m.column(rep.trivial_index);
    let chips = column
        .into_iter()
        .enumerate()
        .filter(|&(i, _)| i != rep.trivial_index)
        .map(|(_, x)| x)
        .collect();
    ChipConfig::new(chips)
}

/// A burning configuration for any avalanche-finite `L`: `L σ` where `σ` is
/// the least positive integer multiple of `L^{-1} 1`, so every entry equals
/// the same positive integer.
pub fn burning_config_for_matrix(l: &IntMatrix) -> Result<ChipConfig> {
    if !is_avalanche_finite(l) {
        return Err(Error::NotAvalancheFinite);
    }
    let sigma = integral_certificate(l)?;
    ChipConfig::new(l.mul_vec(&sigma)?)
}

/// Burning test: a stable `c` is recurrent iff stabilizing `c + b` returns
/// `c`.
pub fn is_recurrent(l: &IntMatrix, b: &ChipConfig, c: &ChipConfig) -> Result<bool> {
    is_recurrent_with(l, b, c, &StabilizeOptions::default())
}

pub fn is_recurrent_with(
    l: &IntMatrix,
    b: &ChipConfig,
    c: &ChipConfig,
    opts: &StabilizeOptions,
) -> Result<bool> {
    check_input(l, c, opts)?;
    if let Some(i) = c.first_unstable(l) {
        return Err(Error::UnstableConfig(i));
    }
    let total = c.add(b)?;
    let unchecked = StabilizeOptions {
        check_avalanche_finite: false,
        ..*opts
    };
    Ok(stabilize_with(l, &total, &unchecked)?.stable == *c)
}

/// Applies `L · firings` and checks `initial == stable + L · firings`.
pub fn conserves(l: &IntMatrix, initial: &ChipConfig, record: &FiringRecord) -> Result<bool> {
    let fired = l.mul_vec(&record.firings)?;
    Ok(initial
        .chips
        .iter()
        .zip(record.stable.chips.iter().zip(&fired))
        .all(|(a, (s, f))| *a == s + f))
}

/// All stable configurations (entries below the diagonal of `L`).
pub fn stable_box(l: &IntMatrix) -> Result<Vec<ChipConfig>> {
    let n = l.require_square()?;
    let bounds: Vec<Int> = (0..n).map(|i| l[(i, i)].clone()).collect();
    if bounds.iter().any(|b| !b.is_positive()) {
        return Err(Error::NotAvalancheFinite);
    }
    let mut out = vec![Vec::new()];
    for bound in bounds {
        let mut next = Vec::new();
        for prefix in &out {
            let mut k = Int::zero();
            while k < bound {
                let mut v: Vec<Int> = prefix.clone();
                v.push(k.clone());
                next.push(v);
                k += Int::one();
            }
        }
        out = next;
    }
    out.into_iter().map(ChipConfig::new).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::group_algebra;
    use crate::linalg::determinant;
    use crate::richness::reduced_laplacian;

    fn path2() -> IntMatrix {
        IntMatrix::from_i64_rows(&[&[2, -1], &[-1, 2]])
    }

    #[test]
    fn avalanche_finite_examples() {
        assert!(is_avalanche_finite(&IntMatrix::identity(2)));
        assert!(!is_avalanche_finite(&IntMatrix::from_i64_rows(&[&[0]])));
    }

    #[test]
    fn stabilize_small() {
        let l = path2();
        let r = stabilize(&l, &ChipConfig::zeros(2)).unwrap();
        assert_eq!(r.stable, ChipConfig::zeros(2));
        let c = ChipConfig::from_i64(&[2, 0]).unwrap();
        let r = stabilize(&l, &c).unwrap();
        assert_eq!(r.stable, ChipConfig::from_i64(&[0, 1]).unwrap());
        assert_eq!(r.firings, vec![Int::one(), Int::zero()]);
        assert!(conserves(&l, &c, &r).unwrap());
    }

    #[test]
    fn rejects_bad_input() {
        let sing = IntMatrix::from_i64_rows(&[&[1, -1], &[-1, 1]]);
        let c = ChipConfig::from_i64(&[1, 0]).unwrap();
        assert_eq!(stabilize(&sing, &c), Err(Error::NotAvalancheFinite));
        let opts = StabilizeOptions {
            step_limit: 100,
            check_avalanche_finite: false,
        };
        assert_eq!(stabilize_with(&sing, &c, &opts), Err(Error::StepLimitExceeded(100)));
        assert!(ChipConfig::from_i64(&[-1]).is_err());
        let b = ChipConfig::from_i64(&[1, 1]).unwrap();
        let unstable = ChipConfig::from_i64(&[2, 0]).unwrap();
        assert_eq!(is_recurrent(&path2(), &b, &unstable), Err(Error::UnstableConfig(0)));
    }

    #[test]
    fn one_by_one() {
        let l = IntMatrix::from_i64_rows(&[&[1]]);
        let b = ChipConfig::from_i64(&[1]).unwrap();
        assert!(is_recurrent(&l, &b, &ChipConfig::zeros(1)).unwrap());
    }

    #[test]
    fn semisimple_burning_config() {
        let entry = group_algebra("s4p0").unwrap();
        let rep = &entry.datum;
        let d31 = rep.module_by_label("D31").unwrap();
        let b = burning_config(rep, &d31).unwrap();
        assert_eq!(b, ChipConfig::from_i64(&[1, 0, 0, 0]).unwrap());
        let triv = ModuleClass::unit(rep.num_simples(), rep.trivial_index);
        assert_eq!(burning_config(rep, &triv).unwrap(), ChipConfig::zeros(4));
        let s4p2 = group_algebra("s4p2").unwrap().datum;
        let v = ModuleClass::unit(2, 1);
        assert!(matches!(burning_config(&s4p2, &v), Err(Error::NotSemisimple(_))));
    }

    #[test]
    fn recurrent_count_matches_determinant() {
        let entry = group_algebra("s4p0").unwrap();
        let rep = &entry.datum;
        let v = rep.module_by_label("D31").unwrap();
        let l = reduced_laplacian(rep, &v).unwrap();
        let b = burning_config(rep, &v).unwrap();
        let count = stable_box(&l)
            .unwrap()
            .iter()
            .filter(|c| is_recurrent(&l, &b, c).unwrap())
            .count();
        assert_eq!(Int::from(count), determinant(&l).unwrap().abs());
        let general = burning_config_for_matrix(&l).unwrap();
        let count2 = stable_box(&l)
            .unwrap()
            .iter()
            .filter(|c| is_recurrent(&l, &general, c).unwrap())
            .count();
        assert_eq!(count, count2);
    }

    #[test]
    fn general_burning_config_is_constant() {
        let l = IntMatrix::from_i64_rows(&[&[3, -1], &[-1, 2]]);
        assert_eq!(burning_config_for_matrix(&l).unwrap(), ChipConfig::from_i64(&[5, 5]).unwrap());
    }
}
