use std::fmt;

use crate::error::Result;
use crate::linalg::matrix::Matrix;
use crate::scalar::Scalar;

/// Dense univariate polynomial, coefficients in ascending degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    /// Trailing zero coefficients are trimmed.
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn x() -> Self {
        Poly::new(vec![T::zero(), T::one()])
    }

    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    /// `prod (x - r)` over `roots`.
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = &'a T>) -> Self {
        roots.into_iter().fold(Poly::constant(T::one()), |acc, r| {
            acc.mul(&Poly::new(vec![T::zero() - r.clone(), T::one()]))
        })
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn mul(&self, rhs: &Poly<T>) -> Poly<T> {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Poly::new(Vec::new());
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }

    /// Largest `k` with `x^k` dividing the polynomial.
    pub fn x_adic_valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// `p(x) / x`, when `x` divides `p`.
    pub fn div_x(&self) -> Option<Poly<T>> {
        match self.coeffs.first() {
            Some(c) if c.is_zero() => Some(Poly::new(self.coeffs[1..].to_vec())),
            _ => None,
        }
    }
}

impl<T: Scalar + PartialOrd> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = *c < T::zero();
            let mag = if neg { T::zero() - c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = k == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

/// `det(xI - A)` by Berkowitz's division-free algorithm.
///
/// The characteristic polynomial of each leading principal submatrix is
/// obtained from the previous one by multiplying with a lower-triangular
/// Toeplitz matrix built from the new row and column, so only ring
/// operations are used.
pub fn char_poly<T: Scalar>(a: &Matrix<T>) -> Result<Poly<T>> {
    let n = a.require_square()?;
    // descending coefficients of the current principal block
    let mut current = vec![T::one()];
    for r in 0..n {
        let col: Vec<T> = (0..r).map(|i| a[(i, r)].clone()).collect();
        let row: Vec<T> = (0..r).map(|j| a[(r, j)].clone()).collect();

        // toeplitz[k] for k = 0..=r+1: 1, -a_rr, -R C, -R A C, -R A^2 C, ...
        let mut toeplitz = Vec::with_capacity(r + 2);
        toeplitz.push(T::one());
        toeplitz.push(T::zero() - a[(r, r)].clone());
        let mut power_c = col;
        for _ in 0..r {
            let rc = row
                .iter()
                .zip(&power_c)
                .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone());
            toeplitz.push(T::zero() - rc);
            power_c = (0..r)
                .map(|i| {
                    (0..r).fold(T::zero(), |acc, j| acc + a[(i, j)].clone() * power_c[j].clone())
                })
                .collect();
        }

        let next = (0..r + 2)
            .map(|i| {
                (0..=i.min(r)).fold(T::zero(), |acc, j| {
                    acc + toeplitz[i - j].clone() * current[j].clone()
                })
            })
            .collect();
        current = next;
    }
    current.reverse();
    Ok(Poly::new(current))
}
