//! Small exact linear algebra over the rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Matrix = Vec<Vec<BigRational>>;

pub fn from_ints(rows: &[Vec<i64>]) -> Matrix {
    rows.iter()
        .map(|row| row.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect()
}

/// Gauss-Jordan inverse. Returns `None` when the matrix is singular.
pub fn inverse(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    let mut aug: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "inverse of a non-square matrix");
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();

    for col in 0..n {
        let pivot = (col..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, pivot);
        let p = aug[col][col].clone();
        for x in aug[col].iter_mut() {
            *x /= &p;
        }
        for r in 0..n {
            if r == col || aug[r][col].is_zero() {
                continue;
            }
            let f = aug[r][col].clone();
            let (src, dst) = if r < col {
                let (a, b) = aug.split_at_mut(col);
                (&b[0], &mut a[r])
            } else {
                let (a, b) = aug.split_at_mut(r);
                (&a[col], &mut b[0])
            };
            for (d, s) in dst.iter_mut().zip(src.iter()) {
                *d -= &f * s;
            }
        }
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Determinant of an integer matrix by fraction-free (Bareiss) elimination.
pub fn det_int(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Sylvester's criterion on a symmetric integer matrix.
pub fn is_positive_definite(m: &[Vec<i64>]) -> bool {
    (1..=m.len()).all(|k| {
        let minor: Vec<Vec<i64>> = m[..k].iter().map(|row| row[..k].to_vec()).collect();
        det_int(&minor).is_positive()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_a2_cartan() {
        let c = from_ints(&[vec![2, -1], vec![-1, 2]]);
        let inv = inverse(&c).unwrap();
        let third = |n: i64| BigRational::new(n.into(), 3.into());
        assert_eq!(inv, vec![vec![third(2), third(1)], vec![third(1), third(2)]]);
    }

    #[test]
    fn singular_matrix_has_no_inverse() {
        let c = from_ints(&[vec![1, 2], vec![2, 4]]);
        assert!(inverse(&c).is_none());
        assert!(det_int(&[vec![1, 2], vec![2, 4]]).is_zero());
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let m = vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]];
        assert_eq!(det_int(&m), BigInt::from(4));
        // needs a row swap
        let m = vec![vec![0, 1, 2], vec![1, 0, 3], vec![4, -3, 8]];
        assert_eq!(det_int(&m), BigInt::from(-2));
    }

    #[test]
    fn sylvester() {
        assert!(is_positive_definite(&[vec![2, -1], vec![-1, 2]]));
        assert!(!is_positive_definite(&[vec![1, 2], vec![2, 1]]));
    }
}
