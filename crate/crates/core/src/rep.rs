//! Representation data of a finite-dimensional algebra and the McKay
//! matrices and Laplacians built from it.
//!
//! Simples are indexed `0..num_simples`. The fusion data is stored as one
//! McKay matrix per simple: `fusion[t][(i, j)] = [S_j ⊗ S_t : S_i]`. The
//! McKay matrix of any class `[V] = Σ c_t [S_t]` is then `Σ c_t fusion[t]`.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::dot;
use crate::{Int, IntMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepDatum {
    pub label: String,
    pub trivial_index: usize,
    /// Dimensions of the simple modules.
    pub s: Vec<Int>,
    /// Dimensions of the indecomposable projectives, `p[i] = dim P_i`
    /// where `P_i` is the projective cover of `S_i`.
    pub p: Vec<Int>,
    /// Dimension of the algebra.
    pub dim: Int,
    /// `cartan[(i, j)] = [P_j : S_i]`.
    pub cartan: Option<IntMatrix>,
    pub fusion: Vec<IntMatrix>,
    /// `P_j^* ≅ P_{dual_permutation[j]}`; identity when absent.
    pub dual_permutation: Option<Vec<usize>>,
    pub simple_labels: Option<Vec<String>>,
}

impl RepDatum {
    /// Checks only the shape of the data; the algebraic identities are left
    /// to [`validate`].
    pub fn new(
        label: impl Into<String>,
        trivial_index: usize,
        s: Vec<Int>,
        p: Vec<Int>,
        dim: Int,
        cartan: Option<IntMatrix>,
        fusion: Vec<IntMatrix>,
    ) -> Result<Self> {
        let rep = RepDatum {
            label: label.into(),
            trivial_index,
            s,
            p,
            dim,
            cartan,
            fusion,
            dual_permutation: None,
            simple_labels: None,
        };
        rep.check_shape()?;
        Ok(rep)
    }

    pub fn with_simple_labels(mut self, labels: Vec<String>) -> Result<Self> {
        self.simple_labels = Some(labels);
        self.check_shape()?;
        Ok(self)
    }

    pub fn with_dual_permutation(mut self, perm: Vec<usize>) -> Result<Self> {
        self.dual_permutation = Some(perm);
        self.check_shape()?;
        Ok(self)
    }

    pub fn num_simples(&self) -> usize {
        self.s.len()
    }

    /// `γ = gcd(p)`.
    pub fn gamma(&self) -> Int {
        gcd_all(&self.p)
    }

    /// `s^T p`.
    pub fn s_dot_p(&self) -> Int {
        dot(&self.s, &self.p)
    }

    /// Whether the trivial module is its own projective cover.
    pub fn is_semisimple(&self) -> bool {
        self.p[self.trivial_index].is_one()
    }

    pub fn dual_of(&self, j: usize) -> usize {
        self.dual_permutation.as_ref().map_or(j, |perm| perm[j])
    }

    pub fn simple_label(&self, i: usize) -> String {
        self.simple_labels
            .as_ref()
            .map_or_else(|| format!("S{}", i + 1), |l| l[i].clone())
    }

    pub fn check_shape(&self) -> Result<()> {
        let n = self.s.len();
        let bad = |msg: String| Err(Error::InvalidInput(msg));
        if n == 0 {
            return bad("no simple modules".into());
        }
        if self.p.len() != n {
            return bad(format!("p has length {}, expected {n}", self.p.len()));
        }
        if self.trivial_index >= n {
            return bad(format!("trivial_index {} out of range", self.trivial_index));
        }
        if self.fusion.len() != n {
            return bad(format!("{} fusion matrices, expected {n}", self.fusion.len()));
        }
        for (t, f) in self.fusion.iter().enumerate() {
            if f.rows() != n || f.cols() != n {
                return bad(format!("fusion[{t}] is {}x{}, expected {n}x{n}", f.rows(), f.cols()));
            }
        }
        if let Some(c) = &self.cartan {
            if c.rows() != n || c.cols() != n {
                return bad(format!("cartan is {}x{}, expected {n}x{n}", c.rows(), c.cols()));
            }
        }
        if let Some(perm) = &self.dual_permutation {
            let mut seen = vec![false; n];
            if perm.len() != n || !perm.iter().all(|&j| j < n && !std::mem::replace(&mut seen[j], true)) {
                return bad("dual_permutation is not a permutation".into());
            }
        }
        if let Some(labels) = &self.simple_labels {
            if labels.len() != n {
                return bad(format!("{} simple labels, expected {n}", labels.len()));
            }
        }
        Ok(())
    }

    /// Resolves a module name: a simple label, `P<k>` (1-based projective
    /// index), `P(<label>)`, `trivial`, or `regular`.
    pub fn module_by_label(&self, name: &str) -> Result<ModuleClass> {
        let n = self.num_simples();
        if name == "regular" {
            return Ok(regular_class(self));
        }
        if name == "trivial" {
            return Ok(ModuleClass::unit(n, self.trivial_index));
        }
        if let Some(i) = (0..n).find(|&i| self.simple_label(i) == name) {
            return Ok(ModuleClass::unit(n, i));
        }
        let projective = name
            .strip_prefix("P(")
            .and_then(|rest| rest.strip_suffix(')'))
            .and_then(|inner| (0..n).find(|&i| self.simple_label(i) == inner))
            .or_else(|| {
                name.strip_prefix('P')
                    .and_then(|k| k.parse::<usize>().ok())
                    .filter(|&k| (1..=n).contains(&k))
                    .map(|k| k - 1)
            });
        match projective {
            Some(j) => {
                let cartan = self.cartan.as_ref().ok_or(Error::MissingCartan)?;
                ModuleClass::new(cartan.column(j))
            }
            None => Err(Error::UnknownModule(name.to_string())),
        }
    }
}

/// A class `[V] = Σ c_i [S_i]` in the Grothendieck group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleClass {
    c: Vec<Int>,
}

impl ModuleClass {
    pub fn new(c: Vec<Int>) -> Result<Self> {
        if c.iter().any(Signed::is_negative) {
            return Err(Error::InvalidInput("module multiplicities must be nonnegative".into()));
        }
        Ok(ModuleClass { c })
    }

    pub fn from_i64(c: &[i64]) -> Result<Self> {
        Self::new(c.iter().map(|&x| Int::from(x)).collect())
    }

    /// The class of the simple `S_i`.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut c = vec![Int::zero(); len];
        c[i] = Int::one();
        ModuleClass { c }
    }

    pub fn multiplicities(&self) -> &[Int] {
        &self.c
    }

    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c.is_empty()
    }

    /// `n = s^T c`.
    pub fn dimension(&self, rep: &RepDatum) -> Result<Int> {
        self.check_for(rep)?;
        Ok(dot(&rep.s, &self.c))
    }

    pub fn check_for(&self, rep: &RepDatum) -> Result<()> {
        if self.c.len() != rep.num_simples() {
            return Err(Error::LengthMismatch {
                expected: rep.num_simples(),
                got: self.c.len(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &ModuleClass) -> Result<ModuleClass> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                got: other.len(),
            });
        }
        Ok(ModuleClass {
            c: self.c.iter().zip(&other.c).map(|(a, b)| a + b).collect(),
        })
    }
}

impl fmt::Display for ModuleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.c.iter().map(Int::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `M_V = Σ_t c_t fusion[t]`.
pub fn mckay_matrix(rep: &RepDatum, v: &ModuleClass) -> Result<IntMatrix> {
    v.check_for(rep)?;
    let n = rep.num_simples();
    let mut m = IntMatrix::zeros(n, n);
    for (c, f) in v.multiplicities().iter().zip(&rep.fusion) {
        if !c.is_zero() {
            m = m.add(&f.scale(c))?;
        }
    }
    Ok(m)
}

/// `L_V = n I - M_V` with `n = dim V`.
pub fn laplacian(rep: &RepDatum, v: &ModuleClass) -> Result<IntMatrix> {
    let n = v.dimension(rep)?;
    let m = mckay_matrix(rep, v)?;
    IntMatrix::scalar(rep.num_simples(), n).sub(&m)
}

/// Class of the left-regular module: `[A] = Σ (dim P_i) [S_i]`.
pub fn regular_class(rep: &RepDatum) -> ModuleClass {
    ModuleClass { c: rep.p.clone() }
}

/// McKay matrix of the regular module in closed form, `p s^T`.
pub fn regular_mckay(rep: &RepDatum) -> IntMatrix {
    IntMatrix::outer(&rep.p, &rep.s)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn push(&mut self, name: impl Into<String>, passed: bool, detail: Option<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail,
        });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    pub fn failed(&self, name: &str) -> bool {
        self.checks.iter().any(|c| c.name == name && !c.passed)
    }

    pub fn extend(&mut self, other: ValidationReport) {
        self.checks.extend(other.checks);
    }

    /// Turns failures into an error.
    pub fn into_result(self, label: &str) -> Result<()> {
        if self.all_passed() {
            Ok(())
        } else {
            Err(Error::Validation {
                label: label.to_string(),
                failures: self.failures().iter().map(|c| c.name.clone()).collect(),
            })
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(f, "[{}] {}", if c.passed { "PASS" } else { "FAIL" }, c.name)?;
            if let Some(d) = &c.detail {
                write!(f, " ({d})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn fmt_vec(v: &[Int]) -> String {
    let parts: Vec<String> = v.iter().map(Int::to_string).collect();
    format!("({})", parts.join(", "))
}

/// Runs every structural identity on the datum. Failures are recorded, not
/// raised.
pub fn validate(rep: &RepDatum) -> ValidationReport {
    let mut report = ValidationReport::default();
    let n = rep.num_simples();

    report.push(
        "s positive",
        rep.s.iter().all(Signed::is_positive),
        Some(format!("s = {}", fmt_vec(&rep.s))),
    );
    report.push(
        "p positive",
        rep.p.iter().all(Signed::is_positive),
        Some(format!("p = {}", fmt_vec(&rep.p))),
    );
    report.push("s[trivial] = 1", rep.s[rep.trivial_index].is_one(), None);

    let stp = rep.s_dot_p();
    report.push(
        "s^T p = d",
        stp == rep.dim,
        Some(format!("s^T p = {stp}, d = {}", rep.dim)),
    );

    if let Some(c) = &rep.cartan {
        report.push("cartan nonnegative", c.is_nonnegative(), None);
        let st_c = c.vec_mul(&rep.s).expect("shape checked");
        report.push(
            "p^T = s^T C",
            st_c == rep.p,
            Some(format!("s^T C = {}", fmt_vec(&st_c))),
        );
        let cs = c.mul_vec(&rep.s).expect("shape checked");
        report.push("C s = p", cs == rep.p, Some(format!("C s = {}", fmt_vec(&cs))));
    }

    report.push(
        "fusion[trivial] = I",
        rep.fusion[rep.trivial_index] == IntMatrix::identity(n),
        None,
    );

    for (t, f) in rep.fusion.iter().enumerate() {
        report.push(format!("fusion[{t}] nonnegative"), f.is_nonnegative(), None);
        let st = &rep.s[t];
        let left = f.vec_mul(&rep.s).expect("shape checked");
        let expected_left: Vec<Int> = rep.s.iter().map(|x| x * st).collect();
        report.push(
            format!("s^T fusion[{t}] = s_{t} s^T"),
            left == expected_left,
            None,
        );
        let right = f.mul_vec(&rep.p).expect("shape checked");
        let expected_right: Vec<Int> = rep.p.iter().map(|x| x * st).collect();
        report.push(
            format!("fusion[{t}] p = s_{t} p"),
            right == expected_right,
            None,
        );
    }

    let closed = regular_mckay(rep);
    let summed = mckay_matrix(rep, &regular_class(rep)).expect("shape checked");
    report.push("M_A = p s^T", closed == summed, None);
    if let Some(c) = &rep.cartan {
        let css = IntMatrix::outer(&c.mul_vec(&rep.s).expect("shape checked"), &rep.s);
        report.push("M_A = C s s^T", closed == css, None);
    }

    report
}

pub(crate) fn gcd_all(v: &[Int]) -> Int {
    use num_integer::Integer;
    v.iter().fold(Int::zero(), |acc, x| acc.gcd(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| Int::from(x)).collect()
    }

    fn cyclic(n: usize, shift: usize) -> IntMatrix {
        IntMatrix::from_fn(n, n, |i, j| Int::from(i64::from(i == (j + shift) % n)))
    }

    /// The char-2 datum for the symmetric group on four letters.
    fn s4p2() -> RepDatum {
        RepDatum::new(
            "s4p2",
            0,
            ints(&[1, 2]),
            ints(&[8, 8]),
            Int::from(24),
            Some(IntMatrix::from_i64_rows(&[&[4, 2], &[2, 3]])),
            vec![
                IntMatrix::identity(2),
                IntMatrix::from_i64_rows(&[&[0, 2], &[1, 1]]),
            ],
        )
        .unwrap()
        .with_simple_labels(vec!["D4".into(), "D31".into()])
        .unwrap()
    }

    #[test]
    fn mckay_and_laplacian() {
        let rep = s4p2();
        let v = rep.module_by_label("D31").unwrap();
        assert_eq!(
            mckay_matrix(&rep, &v).unwrap(),
            IntMatrix::from_i64_rows(&[&[0, 2], &[1, 1]])
        );
        assert_eq!(
            laplacian(&rep, &v).unwrap(),
            IntMatrix::from_i64_rows(&[&[2, -2], &[-1, 1]])
        );
        let triv = ModuleClass::unit(2, 0);
        assert_eq!(mckay_matrix(&rep, &triv).unwrap(), IntMatrix::identity(2));
    }

    #[test]
    fn length_mismatch() {
        let rep = s4p2();
        let v = ModuleClass::from_i64(&[1, 0, 0]).unwrap();
        assert!(matches!(mckay_matrix(&rep, &v), Err(Error::LengthMismatch { .. })));
        assert!(matches!(laplacian(&rep, &v), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn negative_class_rejected() {
        assert!(ModuleClass::from_i64(&[1, -1]).is_err());
    }

    #[test]
    fn cyclic_fusion_is_group_multiplication() {
        let rep = RepDatum::new(
            "z3",
            0,
            ints(&[1, 1, 1]),
            ints(&[3, 3, 3]),
            Int::from(9),
            None,
            (0..3).map(|t| cyclic(3, t)).collect(),
        )
        .unwrap();
        let m = mckay_matrix(&rep, &ModuleClass::unit(3, 1)).unwrap();
        // S_j ⊗ S_1 = S_{j+1}
        for j in 0..3 {
            for i in 0..3 {
                let expected = i64::from(i == (j + 1) % 3);
                assert_eq!(m[(i, j)], Int::from(expected));
            }
        }
        assert!(validate(&rep).all_passed());
    }

    #[test]
    fn one_simple_datum() {
        let rep = RepDatum::new(
            "trivial",
            0,
            ints(&[1]),
            ints(&[1]),
            Int::from(1),
            Some(IntMatrix::identity(1)),
            vec![IntMatrix::identity(1)],
        )
        .unwrap();
        let reg = regular_class(&rep);
        assert_eq!(reg.multiplicities(), ints(&[1]).as_slice());
        assert_eq!(reg.dimension(&rep).unwrap(), Int::from(1));
        assert_eq!(regular_mckay(&rep), IntMatrix::identity(1));
        assert_eq!(
            laplacian(&rep, &ModuleClass::unit(1, 0)).unwrap(),
            IntMatrix::zeros(1, 1)
        );
    }

    #[test]
    fn regular_mckay_outer_product() {
        let rep = s4p2();
        assert_eq!(regular_mckay(&rep), IntMatrix::from_i64_rows(&[&[8, 16], &[8, 16]]));
        assert_eq!(
            mckay_matrix(&rep, &regular_class(&rep)).unwrap(),
            regular_mckay(&rep)
        );
    }

    #[test]
    fn validation_passes_and_catches_perturbation() {
        let rep = s4p2();
        let report = validate(&rep);
        assert!(report.all_passed(), "{report}");

        let mut bad = rep.clone();
        bad.p[1] += 1;
        let report = validate(&bad);
        assert!(report.failed("s^T p = d"));
        assert!(report.failed("p^T = s^T C"));
        assert!(!report.all_passed());
    }

    #[test]
    fn shape_errors() {
        let r = RepDatum::new("x", 2, ints(&[1, 1]), ints(&[1, 1]), Int::from(2), None, vec![]);
        assert!(matches!(r, Err(Error::InvalidInput(_))));
        let r = s4p2().with_dual_permutation(vec![0, 0]);
        assert!(r.is_err());
    }

    #[test]
    fn labels() {
        let rep = s4p2();
        assert_eq!(rep.module_by_label("P2").unwrap().multiplicities(), ints(&[2, 3]).as_slice());
        assert_eq!(
            rep.module_by_label("P(D4)").unwrap().multiplicities(),
            ints(&[4, 2]).as_slice()
        );
        assert_eq!(rep.module_by_label("regular").unwrap(), regular_class(&rep));
        assert!(matches!(rep.module_by_label("D22"), Err(Error::UnknownModule(_))));
    }
}
