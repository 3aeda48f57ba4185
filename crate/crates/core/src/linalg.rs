//! Dense exact linear algebra over the rationals. Matrices here are tiny
//! (at most the rank of the algebra), so plain Gauss-Jordan is enough.

use num_traits::{One, Zero};

use crate::rational::Q;

/// Inverse of a square matrix, or `None` if it is singular.
pub fn invert(m: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let p = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x /= &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// `m * v`.
pub fn mul_vec(m: &[Vec<Q>], v: &[Q]) -> Vec<Q> {
    m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, q};

    #[test]
    fn inverts_g2_cartan() {
        let c = vec![vec![q(2), q(-3)], vec![q(-1), q(2)]];
        let inv = invert(&c).unwrap();
        assert_eq!(inv, vec![vec![q(2), q(3)], vec![q(1), q(2)]]);
        let a2 = vec![vec![q(2), q(-1)], vec![q(-1), q(2)]];
        assert_eq!(invert(&a2).unwrap()[0], vec![frac(2, 3), frac(1, 3)]);
        assert_eq!(mul_vec(&inv, &[q(1), q(0)]), vec![q(2), q(1)]);
    }

    #[test]
    fn singular_is_none() {
        assert!(invert(&[vec![q(1), q(2)], vec![q(2), q(4)]]).is_none());
    }
}
