//! Dense exact linear algebra over the rationals, only what the basis
//! transitions and coefficient matrices need.

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Gauss–Jordan inverse of a square matrix; `None` if singular.
pub(crate) fn invert(mut a: Vec<Vec<BigRational>>) -> Option<Vec<Vec<BigRational>>> {
    let n = a.len();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let scale = a[col][col].recip();
        if !scale.is_one() {
            for x in a[col].iter_mut().chain(inv[col].iter_mut()) {
                if !x.is_zero() {
                    *x *= &scale;
                }
            }
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for c in 0..n {
                if !a[col][c].is_zero() {
                    let d = &factor * &a[col][c];
                    a[r][c] -= d;
                }
                if !inv[col][c].is_zero() {
                    let d = &factor * &inv[col][c];
                    inv[r][c] -= d;
                }
            }
        }
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn inverts_small_matrix() {
        let a = vec![vec![q(2), q(1)], vec![q(1), q(1)]];
        let inv = invert(a).unwrap();
        assert_eq!(inv, vec![vec![q(1), q(-1)], vec![q(-1), q(2)]]);
    }

    #[test]
    fn singular_is_none() {
        assert!(invert(vec![vec![q(1), q(2)], vec![q(2), q(4)]]).is_none());
    }
}
