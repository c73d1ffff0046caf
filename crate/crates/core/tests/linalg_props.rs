use critgroup::linalg::{char_poly, determinant, rank, rat_inverse, smith_normal_form, Matrix};
use critgroup::{Int, IntMatrix, RatMatrix, Rational};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn int_matrix(rows: usize, cols: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec(-bound..=bound, rows * cols).prop_map(move |v| {
        Matrix::from_vec(rows, cols, v.into_iter().map(Int::from).collect()).unwrap()
    })
}

fn square(bound: i64) -> impl Strategy<Value = IntMatrix> {
    (1usize..=5).prop_flat_map(move |n| int_matrix(n, n, bound))
}

fn rect(bound: i64) -> impl Strategy<Value = IntMatrix> {
    (1usize..=4, 1usize..=4).prop_flat_map(move |(r, c)| int_matrix(r, c, bound))
}

fn gcd_of(values: impl IntoIterator<Item = Int>) -> Int {
    values.into_iter().fold(Int::zero(), |g, x| g.gcd(&x))
}

fn submatrix(a: &IntMatrix, rows: &[usize], cols: &[usize]) -> IntMatrix {
    Matrix::from_fn(rows.len(), cols.len(), |i, j| a[(rows[i], cols[j])].clone())
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    (0..n)
        .flat_map(|last| {
            subsets(last, k - 1).into_iter().map(move |mut s| {
                s.push(last);
                s
            })
        })
        .collect()
}

/// gcd of all k x k minors, computed without any elimination beyond
/// cofactor expansion.
fn determinantal_divisor(a: &IntMatrix, k: usize) -> Int {
    let mut minors = Vec::new();
    for rows in subsets(a.rows(), k) {
        for cols in subsets(a.cols(), k) {
            minors.push(cofactor_det(&submatrix(a, &rows, &cols)));
        }
    }
    gcd_of(minors)
}

fn cofactor_det(a: &IntMatrix) -> Int {
    let n = a.rows();
    if n == 1 {
        return a[(0, 0)].clone();
    }
    (0..n)
        .map(|j| {
            let term = &a[(0, j)] * cofactor_det(&a.minor(0, j));
            if j % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn smith_transforms_are_unimodular(a in rect(9)) {
        let snf = smith_normal_form(&a).unwrap();
        let d = snf.left.mul(&a).unwrap().mul(&snf.right).unwrap();
        prop_assert_eq!(d, snf.diagonal_matrix());
        prop_assert!(determinant(&snf.left).unwrap().abs().is_one());
        prop_assert!(determinant(&snf.right).unwrap().abs().is_one());
        let nonzero: Vec<&Int> = snf.diagonal.iter().take_while(|x| !x.is_zero()).collect();
        prop_assert_eq!(nonzero.len(), snf.rank);
        prop_assert!(snf.diagonal[snf.rank..].iter().all(Zero::is_zero));
        prop_assert!(nonzero.iter().all(|x| x.is_positive()));
        for w in nonzero.windows(2) {
            prop_assert!(w[1].is_multiple_of(w[0]));
        }
    }

    #[test]
    fn smith_matches_determinantal_divisors(a in rect(6)) {
        let snf = smith_normal_form(&a).unwrap();
        let mut running = Int::one();
        for k in 1..=a.rows().min(a.cols()) {
            running *= &snf.diagonal[k - 1];
            prop_assert_eq!(determinantal_divisor(&a, k), running.clone());
        }
    }

    #[test]
    fn rank_agrees_with_smith_and_cokernel(a in rect(4)) {
        let snf = smith_normal_form(&a).unwrap();
        let r = rank(&a);
        prop_assert_eq!(r, snf.rank);
        prop_assert_eq!(snf.cokernel().free_rank, a.rows() - r);
    }

    #[test]
    fn bareiss_matches_cofactor_expansion(a in square(9)) {
        prop_assert_eq!(determinant(&a).unwrap(), cofactor_det(&a));
    }

    #[test]
    fn char_poly_constant_term(a in square(9)) {
        let cp = char_poly(&a).unwrap();
        let n = a.rows();
        prop_assert!(cp.is_monic());
        prop_assert_eq!(cp.degree(), Some(n));
        let sign = if n % 2 == 0 { Int::one() } else { -Int::one() };
        prop_assert_eq!(cp.coeff(0), sign * determinant(&a).unwrap());
        prop_assert_eq!(-cp.coeff(n - 1), a.trace());
    }

    #[test]
    fn rational_inverse(a in square(5)) {
        let det = determinant(&a).unwrap();
        match rat_inverse(&a) {
            Ok(inv) => {
                prop_assert!(!det.is_zero());
                let a_q: RatMatrix = a.map(|x| Rational::from_integer(x.clone()));
                prop_assert_eq!(inv.mul(&a_q).unwrap(), RatMatrix::identity(a.rows()));
            }
            Err(_) => prop_assert!(det.is_zero()),
        }
    }

    #[test]
    fn machine_and_big_integers_agree(v in (1usize..=4, 1usize..=4)
        .prop_flat_map(|(r, c)| (Just((r, c)), prop::collection::vec(-20i64..=20, r * c))))
    {
        let ((r, c), data) = v;
        let small = Matrix::from_vec(r, c, data.clone()).unwrap();
        let big: IntMatrix = Matrix::from_vec(r, c, data.into_iter().map(Int::from).collect()).unwrap();
        let d_small = smith_normal_form(&small).unwrap().diagonal;
        let d_big = smith_normal_form(&big).unwrap().diagonal;
        prop_assert_eq!(d_small.into_iter().map(Int::from).collect::<Vec<_>>(), d_big);
        if r == c {
            prop_assert_eq!(Int::from(determinant(&small).unwrap()), determinant(&big).unwrap());
        }
    }
}
