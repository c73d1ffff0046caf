//! Brauer characters of group algebras.
//!
//! A [`BrauerTable`] holds the Brauer characters of the simple modules on the
//! p-regular conjugacy classes. Because `[V] ↦ χ_V` is a ring isomorphism
//! from the Grothendieck ring onto class functions, the table alone
//! determines the fusion rules, the eigenvalues of every McKay matrix and a
//! closed form for `#K(V)`.
//!
//! Values are exact integers. Tables that need genuine cyclotomic values are
//! outside what this module represents.

use std::collections::BTreeSet;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{char_poly, rat_inverse, Poly};
use crate::rep::{gcd_all, mckay_matrix, ModuleClass, RepDatum};
use crate::{Int, IntMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrauerTable {
    /// Characteristic of the field, 0 or a prime.
    pub characteristic: u64,
    pub group_order: Int,
    /// Order `p^a` of a Sylow p-subgroup; 1 in characteristic zero.
    pub sylow_order: Int,
    pub class_labels: Vec<String>,
    pub identity_class: usize,
    /// Row `i` is the Brauer character of `S_i`.
    pub chi: IntMatrix,
}

impl BrauerTable {
    pub fn new(
        characteristic: u64,
        group_order: Int,
        sylow_order: Int,
        class_labels: Vec<String>,
        identity_class: usize,
        chi: IntMatrix,
    ) -> Result<Self> {
        let table = BrauerTable {
            characteristic,
            group_order,
            sylow_order,
            class_labels,
            identity_class,
            chi,
        };
        table.check()?;
        Ok(table)
    }

    fn check(&self) -> Result<()> {
        let bad = |m: String| Err(Error::BrauerTable(m));
        let k = self.class_labels.len();
        if k == 0 || self.chi.rows() != k || self.chi.cols() != k {
            return bad(format!(
                "character table is {}x{} but there are {k} classes",
                self.chi.rows(),
                self.chi.cols()
            ));
        }
        if self.identity_class >= k {
            return bad(format!("identity_class {} out of range", self.identity_class));
        }
        if rat_inverse(&self.chi).is_err() {
            return bad("character table is singular".into());
        }
        if !self.group_order.is_positive() || !self.sylow_order.is_positive() {
            return bad("group and Sylow orders must be positive".into());
        }
        if !self.group_order.is_multiple_of(&self.sylow_order) {
            return bad(format!(
                "Sylow order {} does not divide |G| = {}",
                self.sylow_order, self.group_order
            ));
        }
        let p = Int::from(self.characteristic);
        if self.characteristic == 0 {
            if !self.sylow_order.is_one() {
                return bad("Sylow order must be 1 in characteristic 0".into());
            }
        } else {
            let mut rest = self.sylow_order.clone();
            while rest.is_multiple_of(&p) {
                rest /= &p;
            }
            if !rest.is_one() {
                return bad(format!("{} is not a power of {p}", self.sylow_order));
            }
            let q = &self.group_order / &self.sylow_order;
            if !q.gcd(&p).is_one() {
                return bad(format!("|G| / p^a = {q} is still divisible by {p}"));
            }
        }
        Ok(())
    }

    pub fn num_classes(&self) -> usize {
        self.class_labels.len()
    }

    /// `χ_{S_i}(e)` for every simple, i.e. the dimension vector `s`.
    pub fn identity_column(&self) -> Vec<Int> {
        self.chi.column(self.identity_class)
    }

    fn check_class(&self, v: &ModuleClass) -> Result<()> {
        if v.len() != self.num_classes() {
            return Err(Error::LengthMismatch {
                expected: self.num_classes(),
                got: v.len(),
            });
        }
        Ok(())
    }
}

/// `χ_V(g_j) = Σ_i c_i χ_{S_i}(g_j)`.
pub fn chi_of_class(table: &BrauerTable, v: &ModuleClass) -> Result<Vec<Int>> {
    table.check_class(v)?;
    table.chi.vec_mul(v.multiplicities())
}

/// Recovers `fusion[t][(i, j)] = [S_j ⊗ S_t : S_i]` by decomposing each
/// pointwise product `χ_{S_j} χ_{S_t}` in the basis of simple characters.
pub fn fusion_from_brauer(table: &BrauerTable) -> Result<Vec<IntMatrix>> {
    let k = table.num_classes();
    let chi = &table.chi;
    // x^T chi = product  <=>  chi^T x = product
    let solver = rat_inverse(&chi.transpose())?;
    let mut fusion = vec![IntMatrix::zeros(k, k); k];
    for t in 0..k {
        for j in 0..k {
            let product: Vec<_> = (0..k)
                .map(|g| crate::Rational::from_integer(&chi[(j, g)] * &chi[(t, g)]))
                .collect();
            let mult = solver.mul_vec(&product)?;
            for (i, x) in mult.into_iter().enumerate() {
                if !x.is_integer() {
                    return Err(Error::NonIntegralFusion {
                        i,
                        j,
                        t,
                        value: x.to_string(),
                    });
                }
                let x = x.to_integer();
                if x.is_negative() {
                    return Err(Error::NegativeMultiplicity {
                        i,
                        j,
                        t,
                        value: x.to_string(),
                    });
                }
                fusion[t][(i, j)] = x;
            }
        }
    }
    Ok(fusion)
}

/// Per-class outcome of the eigenvector identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassEigenCheck {
    pub class_label: String,
    pub eigenvalue: Int,
    /// `s(g)^T M_V = χ_V(g) s(g)^T`.
    pub left: bool,
    /// `M_V p*(g) = χ_V(g) p*(g)`.
    pub right: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenReport {
    pub classes: Vec<ClassEigenCheck>,
    /// `det(xI - M_V) = Π_g (x - χ_V(g))`.
    pub char_poly_matches: bool,
}

impl EigenReport {
    pub fn all_passed(&self) -> bool {
        self.char_poly_matches && self.classes.iter().all(|c| c.left && c.right)
    }
}

/// Checks that the columns of the simple and projective Brauer tables are
/// left and right eigenvectors of `M_V` with eigenvalues `χ_V(g)`, and that
/// these exhaust the spectrum.
///
/// The projective characters are `χ_{P_j} = Σ_i C_{ij} χ_{S_i}` and
/// `p*(g)_j = χ_{P_j^*}(g)` uses the datum's dual permutation.
pub fn eigen_check(table: &BrauerTable, rep: &RepDatum, v: &ModuleClass) -> Result<EigenReport> {
    table.check_class(v)?;
    v.check_for(rep)?;
    let cartan = rep.cartan.as_ref().ok_or(Error::MissingCartan)?;
    let m = mckay_matrix(rep, v)?;
    let chi_v = chi_of_class(table, v)?;
    let k = table.num_classes();
    // projective[(j, g)] = χ_{P_j}(g)
    let projective = cartan.transpose().mul(&table.chi)?;

    let mut classes = Vec::with_capacity(k);
    for g in 0..k {
        let lambda = &chi_v[g];
        let s_g = table.chi.column(g);
        let left = m.vec_mul(&s_g)? == s_g.iter().map(|x| x * lambda).collect::<Vec<_>>();
        let p_g: Vec<Int> = (0..k)
            .map(|j| projective[(rep.dual_of(j), g)].clone())
            .collect();
        let right = m.mul_vec(&p_g)? == p_g.iter().map(|x| x * lambda).collect::<Vec<_>>();
        classes.push(ClassEigenCheck {
            class_label: table.class_labels[g].clone(),
            eigenvalue: lambda.clone(),
            left,
            right,
        });
    }
    let char_poly_matches = char_poly(&m)? == Poly::from_roots(&chi_v);
    Ok(EigenReport {
        classes,
        char_poly_matches,
    })
}

/// `V` is tensor-rich iff no non-identity p-regular class has `χ_V(g) = n`.
pub fn brauer_tensor_rich(table: &BrauerTable, v: &ModuleClass) -> Result<bool> {
    let chi_v = chi_of_class(table, v)?;
    let n = &chi_v[table.identity_class];
    Ok(chi_v
        .iter()
        .enumerate()
        .all(|(g, x)| g == table.identity_class || x != n))
}

/// `#K(V) = (p^a / |G|) Π_{g ≠ e} (n - χ_V(g))`.
pub fn gaetz_cardinality(table: &BrauerTable, v: &ModuleClass) -> Result<Int> {
    let chi_v = chi_of_class(table, v)?;
    let n = &chi_v[table.identity_class];
    let mut product = Int::one();
    for (g, x) in chi_v.iter().enumerate() {
        if g == table.identity_class {
            continue;
        }
        let factor = n - x;
        if factor.is_zero() {
            return Err(Error::KInfinite(format!(
                "χ_V = n on class {}",
                table.class_labels[g]
            )));
        }
        product *= factor;
    }
    let numerator = &table.sylow_order * product;
    let (q, r) = numerator.div_rem(&table.group_order);
    if !r.is_zero() {
        return Err(Error::InternalConsistency(format!(
            "{numerator} is not divisible by |G| = {}",
            table.group_order
        )));
    }
    Ok(q.abs())
}

/// With `t` the number of distinct values of `χ_V`, checks that
/// `Σ_{k<t} M_V^k e_ε` is entrywise positive.
pub fn richness_bound_check(table: &BrauerTable, rep: &RepDatum, v: &ModuleClass) -> Result<bool> {
    if !brauer_tensor_rich(table, v)? {
        return Err(Error::Precondition("module is not tensor-rich".into()));
    }
    let chi_v = chi_of_class(table, v)?;
    let t = chi_v.iter().collect::<BTreeSet<_>>().len();
    let m = mckay_matrix(rep, v)?;
    let size = rep.num_simples();
    let mut term = vec![Int::zero(); size];
    term[rep.trivial_index] = Int::one();
    let mut sum = term.clone();
    for _ in 1..t {
        term = m.mul_vec(&term)?;
        for (acc, x) in sum.iter_mut().zip(&term) {
            *acc += x;
        }
    }
    Ok(sum.iter().all(Signed::is_positive))
}

/// `gcd(p)` equals the Sylow order.
pub fn sylow_gcd_check(table: &BrauerTable, rep: &RepDatum) -> bool {
    gcd_all(&rep.p) == table.sylow_order
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table_s4p2() -> BrauerTable {
        BrauerTable::new(
            2,
            Int::from(24),
            Int::from(8),
            vec!["e".into(), "(ijk)".into()],
            0,
            IntMatrix::from_i64_rows(&[&[1, 1], &[2, -1]]),
        )
        .unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| Int::from(x)).collect()
    }

    #[test]
    fn characters_of_classes() {
        let t = table_s4p2();
        let d31 = ModuleClass::unit(2, 1);
        assert_eq!(chi_of_class(&t, &d31).unwrap(), ints(&[2, -1]));
        assert_eq!(chi_of_class(&t, &ModuleClass::unit(2, 0)).unwrap(), ints(&[1, 1]));
        assert!(chi_of_class(&t, &ModuleClass::unit(3, 0)).is_err());
    }

    #[test]
    fn fusion_two_by_two_solve_oracle() {
        // a (1, 1) + b (2, -1) = (4, 1)  =>  a = 2, b = 1
        let f = fusion_from_brauer(&table_s4p2()).unwrap();
        assert_eq!(f[1].column(1), ints(&[2, 1]));
        assert_eq!(f[0], IntMatrix::identity(2));
        assert_eq!(f[1], IntMatrix::from_i64_rows(&[&[0, 2], &[1, 1]]));
    }

    fn fake_table(rows: &[&[i64]]) -> BrauerTable {
        BrauerTable::new(
            0,
            Int::from(4),
            Int::from(1),
            vec!["e".into(), "g".into()],
            0,
            IntMatrix::from_i64_rows(rows),
        )
        .unwrap()
    }

    #[test]
    fn corrupted_tables_detected() {
        // (2,1)^2 = (4,1) = 7/3 (2,1) - 2/3 (1,2)
        assert!(matches!(
            fusion_from_brauer(&fake_table(&[&[2, 1], &[1, 2]])),
            Err(Error::NonIntegralFusion { .. })
        ));
        // (1,3)^2 = (1,9) = -3 (1,1) + 4 (1,3)
        assert!(matches!(
            fusion_from_brauer(&fake_table(&[&[1, 1], &[1, 3]])),
            Err(Error::NegativeMultiplicity { .. })
        ));
    }

    #[test]
    fn table_checks() {
        let chi = IntMatrix::from_i64_rows(&[&[1, 1], &[2, -1]]);
        let labels = || vec!["e".to_string(), "(ijk)".to_string()];
        // 24 = 8 * 3 but 4 is not the full 2-part
        assert!(BrauerTable::new(2, Int::from(24), Int::from(4), labels(), 0, chi.clone()).is_err());
        assert!(BrauerTable::new(2, Int::from(24), Int::from(6), labels(), 0, chi.clone()).is_err());
        assert!(BrauerTable::new(0, Int::from(24), Int::from(8), labels(), 0, chi.clone()).is_err());
        assert!(BrauerTable::new(2, Int::from(24), Int::from(8), labels(), 2, chi).is_err());
        let singular = IntMatrix::from_i64_rows(&[&[1, 1], &[2, 2]]);
        assert!(BrauerTable::new(2, Int::from(24), Int::from(8), labels(), 0, singular).is_err());
    }

    #[test]
    fn gaetz_small() {
        let t = table_s4p2();
        assert_eq!(gaetz_cardinality(&t, &ModuleClass::unit(2, 1)).unwrap(), Int::from(1));
        assert!(matches!(
            gaetz_cardinality(&t, &ModuleClass::unit(2, 0)),
            Err(Error::KInfinite(_))
        ));
        assert!(brauer_tensor_rich(&t, &ModuleClass::unit(2, 1)).unwrap());
        assert!(!brauer_tensor_rich(&t, &ModuleClass::unit(2, 0)).unwrap());
    }
}
