use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::matrix::Matrix;
use crate::linalg::smith::smith_normal_form;
use crate::scalar::IntScalar;

/// A finitely generated abelian group `Z^free_rank ⊕ Z/a_1 ⊕ ... ⊕ Z/a_k`
/// with invariant factors `2 <= a_1 | a_2 | ... | a_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianGroup<T> {
    pub free_rank: usize,
    pub torsion: Vec<T>,
}

impl<T: IntScalar> AbelianGroup<T> {
    pub fn trivial() -> Self {
        AbelianGroup {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    /// Checked constructor: `torsion` must already be an invariant-factor chain.
    pub fn new(free_rank: usize, torsion: Vec<T>) -> Result<Self> {
        let g = AbelianGroup { free_rank, torsion };
        g.check_invariants()?;
        Ok(g)
    }

    /// Normalizes an arbitrary list of cyclic orders into invariant factors.
    /// Zeros count as free summands, units vanish, signs are ignored.
    pub fn from_cyclic_factors(free_rank: usize, factors: &[T]) -> Self {
        if factors.is_empty() {
            return AbelianGroup {
                free_rank,
                torsion: Vec::new(),
            };
        }
        let k = factors.len();
        let diag = Matrix::from_fn(k, k, |i, j| {
            if i == j {
                factors[i].clone()
            } else {
                T::zero()
            }
        });
        let snf = smith_normal_form(&diag).expect("nonempty diagonal matrix");
        let mut g = snf.cokernel();
        g.free_rank += free_rank;
        g
    }

    pub fn check_invariants(&self) -> Result<()> {
        for (i, a) in self.torsion.iter().enumerate() {
            if *a <= T::one() {
                return Err(Error::InvalidParameters(format!(
                    "invariant factor {a} must be at least 2"
                )));
            }
            if let Some(next) = self.torsion.get(i + 1) {
                if !next.is_multiple_of(a) {
                    return Err(Error::InvalidParameters(format!(
                        "invariant factor {a} does not divide {next}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Order of the group, `None` when infinite.
    pub fn order(&self) -> Option<T> {
        self.is_finite()
            .then(|| self.torsion_order())
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> T {
        self.torsion.iter().fold(T::one(), |acc, a| acc * a.clone())
    }

    /// Splits off one `Z` summand, if there is one.
    pub fn without_free_summand(&self) -> Option<Self> {
        (self.free_rank > 0).then(|| AbelianGroup {
            free_rank: self.free_rank - 1,
            torsion: self.torsion.clone(),
        })
    }

    /// Adds `Z^k`.
    pub fn with_free_rank(mut self, k: usize) -> Self {
        self.free_rank += k;
        self
    }
}

/// Prints in the style `Z^2 ⊕ (Z/2)^3 ⊕ Z/24`; the trivial group prints as `0`.
impl<T: IntScalar> fmt::Display for AbelianGroup<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let a = &self.torsion[i];
            let run = self.torsion[i..].iter().take_while(|b| *b == a).count();
            if run == 1 {
                parts.push(format!("Z/{a}"));
            } else {
                parts.push(format!("(Z/{a})^{run}"));
            }
            i += run;
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" ⊕ "))
        }
    }
}
