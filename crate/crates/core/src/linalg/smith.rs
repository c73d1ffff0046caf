//! Smith normal form with unimodular transforms.
//!
//! Pivot rule: the nonzero entry of least absolute value in the active
//! submatrix, ties broken by lowest `(row, col)`. The pivot is moved to the
//! corner, its row and column are reduced by truncating division, and the
//! step repeats until the pivot is alone in its row and column and divides
//! every remaining entry. Every row operation is mirrored into `U` and every
//! column operation into `V`, so `U * A * V == diag(d)` holds throughout.

use crate::error::{Error, Result};
use crate::linalg::abelian::AbelianGroup;
use crate::linalg::matrix::Matrix;
use crate::scalar::IntScalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm<T> {
    /// Diagonal of length `min(rows, cols)`; nonzero entries first, each
    /// dividing the next, then zeros.
    pub diagonal: Vec<T>,
    /// Unimodular `rows x rows` left transform.
    pub left: Matrix<T>,
    /// Unimodular `cols x cols` right transform.
    pub right: Matrix<T>,
    /// Rank of the input over the rationals.
    pub rank: usize,
}

impl<T: IntScalar> SmithForm<T> {
    /// `diag(d)` padded to the shape of the original matrix.
    pub fn diagonal_matrix(&self) -> Matrix<T> {
        let mut d = Matrix::zeros(self.left.rows(), self.right.rows());
        for (i, x) in self.diagonal.iter().enumerate() {
            d[(i, i)] = x.clone();
        }
        d
    }

    /// `Z^rows / im A`.
    pub fn cokernel(&self) -> AbelianGroup<T> {
        let rows = self.left.rows();
        let torsion = self
            .diagonal
            .iter()
            .filter(|x| !x.is_zero() && !x.is_one())
            .cloned()
            .collect();
        AbelianGroup {
            free_rank: rows - self.rank,
            torsion,
        }
    }
}

pub fn smith_normal_form<T: IntScalar>(a: &Matrix<T>) -> Result<SmithForm<T>> {
    if a.is_empty() {
        return Err(Error::EmptyMatrix);
    }
    let (m, n) = (a.rows(), a.cols());
    let mut work = a.clone();
    let mut left = Matrix::identity(m);
    let mut right = Matrix::identity(n);
    let mut rank = 0;

    for k in 0..m.min(n) {
        while let Some((pi, pj)) = min_abs_pivot(&work, k) {
            work.swap_rows(k, pi);
            left.swap_rows(k, pi);
            work.swap_cols(k, pj);
            right.swap_cols(k, pj);

            let mut clean = true;
            for i in k + 1..m {
                if work[(i, k)].is_zero() {
                    continue;
                }
                let q = T::zero() - work[(i, k)].clone() / work[(k, k)].clone();
                if !q.is_zero() {
                    work.add_row_multiple(i, k, &q);
                    left.add_row_multiple(i, k, &q);
                }
                clean &= work[(i, k)].is_zero();
            }
            for j in k + 1..n {
                if work[(k, j)].is_zero() {
                    continue;
                }
                let q = T::zero() - work[(k, j)].clone() / work[(k, k)].clone();
                if !q.is_zero() {
                    work.add_col_multiple(j, k, &q);
                    right.add_col_multiple(j, k, &q);
                }
                clean &= work[(k, j)].is_zero();
            }
            if !clean {
                continue;
            }

            let pivot = work[(k, k)].clone();
            let offender = (k + 1..m).find(|&i| {
                (k + 1..n).any(|j| !work[(i, j)].is_multiple_of(&pivot))
            });
            match offender {
                Some(i) => {
                    // pull the offending row into the pivot row and go again
                    let one = T::one();
                    work.add_row_multiple(k, i, &one);
                    left.add_row_multiple(k, i, &one);
                }
                None => break,
            }
        }
        if work[(k, k)].is_zero() {
            break;
        }
        if work[(k, k)].is_negative() {
            work.negate_row(k);
            left.negate_row(k);
        }
        rank += 1;
    }

    let diagonal = (0..m.min(n)).map(|i| work[(i, i)].clone()).collect();
    Ok(SmithForm {
        diagonal,
        left,
        right,
        rank,
    })
}

fn min_abs_pivot<T: IntScalar>(a: &Matrix<T>, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, T)> = None;
    for i in k..a.rows() {
        for j in k..a.cols() {
            let v = &a[(i, j)];
            if v.is_zero() {
                continue;
            }
            let av = v.abs();
            if best.as_ref().is_none_or(|(_, _, b)| av < *b) {
                best = Some((i, j, av));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

/// Structure of `Z^n / im A` for a square `A`.
pub fn cokernel_structure<T: IntScalar>(a: &Matrix<T>) -> Result<AbelianGroup<T>> {
    a.require_square()?;
    Ok(smith_normal_form(a)?.cokernel())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::elim::determinant;

    fn m(rows: &[&[i64]]) -> Matrix<i64> {
        Matrix::from_rows(rows.iter().map(|r| r.to_vec())).unwrap()
    }

    fn check(a: &Matrix<i64>, expected: &[i64]) {
        let snf = smith_normal_form(a).unwrap();
        assert_eq!(snf.diagonal, expected);
        let prod = snf.left.mul(a).unwrap().mul(&snf.right).unwrap();
        assert_eq!(prod, snf.diagonal_matrix());
        assert_eq!(determinant(&snf.left).unwrap().abs(), 1);
        assert_eq!(determinant(&snf.right).unwrap().abs(), 1);
    }

    #[test]
    fn s4_char2_laplacian() {
        check(&m(&[&[2, -2], &[-1, 1]]), &[1, 0]);
    }

    #[test]
    fn zero_matrix() {
        check(&Matrix::zeros(2, 2), &[0, 0]);
    }

    #[test]
    fn s4_char3_laplacian() {
        let l = m(&[
            &[3, -2, 0, -1],
            &[-1, 2, 0, -1],
            &[0, -1, 3, -2],
            &[0, -1, -1, 2],
        ]);
        check(&l, &[1, 1, 4, 0]);
    }

    #[test]
    fn divisibility_fixup() {
        // diag(2, 3) is not in Smith form; the invariant factors are 1, 6
        check(&m(&[&[2, 0], &[0, 3]]), &[1, 6]);
        check(&m(&[&[4, 0, 0], &[0, 6, 0], &[0, 0, 10]]), &[2, 2, 60]);
    }

    #[test]
    fn rectangular() {
        let a = m(&[&[2, 4, 4], &[-6, 6, 12]]);
        check(&a, &[2, 6]);
    }

    #[test]
    fn empty_rejected() {
        assert_eq!(smith_normal_form(&Matrix::<i64>::zeros(0, 3)), Err(Error::EmptyMatrix));
    }

    #[test]
    fn cokernel_needs_square() {
        assert!(matches!(
            cokernel_structure(&Matrix::<i64>::zeros(2, 3)),
            Err(Error::NotSquare { .. })
        ));
        let g = cokernel_structure(&Matrix::<i64>::identity(3)).unwrap();
        assert_eq!(g.free_rank, 0);
        assert!(g.torsion.is_empty());
    }
}
