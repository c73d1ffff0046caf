//! Exact elimination: determinant, rank, inverse and linear solves.

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::matrix::Matrix;
use crate::scalar::IntScalar;

/// Determinant by fraction-free (Bareiss) elimination. Every division is exact.
pub fn determinant<T: IntScalar>(a: &Matrix<T>) -> Result<T> {
    let n = a.require_square()?;
    if n == 0 {
        return Ok(T::one());
    }
    let mut w = a.clone();
    let mut sign = T::one();
    let mut prev = T::one();
    for k in 0..n - 1 {
        if w[(k, k)].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !w[(i, k)].is_zero()) else {
                return Ok(T::zero());
            };
            w.swap_rows(k, p);
            sign = T::zero() - sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = w[(k, k)].clone() * w[(i, j)].clone() - w[(i, k)].clone() * w[(k, j)].clone();
                w[(i, j)] = v / prev.clone();
            }
            w[(i, k)] = T::zero();
        }
        prev = w[(k, k)].clone();
    }
    Ok(sign * w[(n - 1, n - 1)].clone())
}

/// Lifts an integer matrix into its field of fractions.
pub fn to_rational<T: IntScalar>(a: &Matrix<T>) -> Matrix<Ratio<T>> {
    a.map(|x| Ratio::from_integer(x.clone()))
}

/// Reduced row echelon form over the rationals; returns the pivot columns.
fn rref<T: IntScalar>(w: &mut Matrix<Ratio<T>>) -> Vec<usize> {
    let (m, n) = (w.rows(), w.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !w[(i, c)].is_zero()) else {
            continue;
        };
        w.swap_rows(r, p);
        let inv = w[(r, c)].recip();
        for j in 0..n {
            let v = w[(r, j)].clone() * inv.clone();
            w[(r, j)] = v;
        }
        for i in 0..m {
            if i != r && !w[(i, c)].is_zero() {
                let k = Ratio::zero() - w[(i, c)].clone();
                w.add_row_multiple(i, r, &k);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank over the rationals.
pub fn rank<T: IntScalar>(a: &Matrix<T>) -> usize {
    let mut w = to_rational(a);
    rref(&mut w).len()
}

/// Exact inverse over the rationals, entries in lowest terms.
pub fn rat_inverse<T: IntScalar>(a: &Matrix<T>) -> Result<Matrix<Ratio<T>>> {
    let n = a.require_square()?;
    let mut aug = Matrix::from_fn(n, 2 * n, |i, j| {
        if j < n {
            Ratio::from_integer(a[(i, j)].clone())
        } else if j - n == i {
            Ratio::one()
        } else {
            Ratio::zero()
        }
    });
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return Err(Error::SingularMatrix);
    }
    Ok(Matrix::from_fn(n, n, |i, j| aug[(i, j + n)].clone()))
}

/// Solves `A x = b` for square nonsingular `A`.
pub fn rat_solve<T: IntScalar>(a: &Matrix<T>, b: &[Ratio<T>]) -> Result<Vec<Ratio<T>>> {
    let inv = rat_inverse(a)?;
    inv.mul_vec(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix<i64> {
        Matrix::from_rows(rows.iter().map(|r| r.to_vec())).unwrap()
    }

    fn q(n: i64, d: i64) -> Ratio<i64> {
        Ratio::new(n, d)
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant(&m(&[&[2, -2], &[-1, 1]])).unwrap(), 0);
        assert_eq!(determinant(&m(&[&[3, -1], &[-1, 2]])).unwrap(), 5);
        assert_eq!(determinant(&m(&[&[0, 1], &[1, 0]])).unwrap(), -1);
        // first-row expansion: 2(3 - 2) - 0 + 1(1 - 3)
        assert_eq!(determinant(&m(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 1]])).unwrap(), 0);
        assert_eq!(determinant(&m(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 4]])).unwrap(), 18);
        assert_eq!(determinant(&Matrix::<i64>::zeros(0, 0)).unwrap(), 1);
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(&Matrix::<i64>::identity(4)), 4);
        assert_eq!(rank(&Matrix::outer(&[8i64, 8], &[1, 2])), 1);
        assert_eq!(rank(&Matrix::<i64>::zeros(3, 2)), 0);
        assert_eq!(rank(&m(&[&[1, 2, 3], &[2, 4, 6]])), 1);
    }

    #[test]
    fn inverse_one_by_one() {
        assert_eq!(rat_inverse(&m(&[&[1]])).unwrap(), Matrix::from_rows(vec![vec![q(1, 1)]]).unwrap());
    }

    #[test]
    fn inverse_by_adjugate_oracle() {
        // adj([[3,-1],[-1,2]]) / det = [[2,1],[1,3]] / 5
        let inv = rat_inverse(&m(&[&[3, -1], &[-1, 2]])).unwrap();
        let expected =
            Matrix::from_rows(vec![vec![q(2, 5), q(1, 5)], vec![q(1, 5), q(3, 5)]]).unwrap();
        assert_eq!(inv, expected);
    }

    #[test]
    fn singular_inverse() {
        assert_eq!(rat_inverse(&m(&[&[2, -2], &[-1, 1]])), Err(Error::SingularMatrix));
    }

    #[test]
    fn solve() {
        let x = rat_solve(&m(&[&[3, -1], &[-1, 2]]), &[q(1, 1), q(1, 1)]).unwrap();
        assert_eq!(x, vec![q(3, 5), q(4, 5)]);
    }
}
