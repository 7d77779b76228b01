//! Dense exact linear algebra on small rational matrices.

use num_traits::{One, Signed, Zero};

use crate::rational::Q;

pub type Matrix = Vec<Vec<Q>>;

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Q::one() } else { Q::zero() })
                .collect()
        })
        .collect()
}

pub fn mat_vec(m: &[Vec<Q>], v: &[Q]) -> Vec<Q> {
    m.iter().map(|row| dot(row, v)).collect()
}

pub fn mat_mul(a: &[Vec<Q>], b: &[Vec<Q>]) -> Matrix {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .filter(|(x, _)| !x.is_zero())
                        .fold(Q::zero(), |acc, (x, brow)| acc + x * brow[j])
                })
                .collect()
        })
        .collect()
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

/// Gauss-Jordan inverse; `None` when singular.
pub fn invert(m: &[Vec<Q>]) -> Option<Matrix> {
    let n = m.len();
    let mut a: Matrix = m.to_vec();
    let mut inv = identity(n);
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for j in 0..n {
                    let (x, y) = (a[col][j], inv[col][j]);
                    a[r][j] -= f * x;
                    inv[r][j] -= f * y;
                }
            }
        }
    }
    Some(inv)
}

/// Positive definiteness of a symmetric matrix via the pivots of an LDLᵀ
/// elimination (all pivots must be strictly positive).
pub fn is_positive_definite(m: &[Vec<Q>]) -> bool {
    let n = m.len();
    let mut a: Matrix = m.to_vec();
    for k in 0..n {
        let p = a[k][k];
        if !p.is_positive() {
            return false;
        }
        for i in (k + 1)..n {
            let f = a[i][k] / p;
            for j in k..n {
                let x = a[k][j];
                a[i][j] -= f * x;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn m(rows: &[&[i128]]) -> Matrix {
        rows.iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect()
    }

    #[test]
    fn inverse_of_a2_cartan() {
        let a = m(&[&[2, -1], &[-1, 2]]);
        let inv = invert(&a).unwrap();
        assert_eq!(mat_mul(&a, &inv), identity(2));
        assert_eq!(inv[0][0], crate::rational::frac(2, 3));
    }

    #[test]
    fn singular_and_definiteness() {
        assert!(invert(&m(&[&[1, 2], &[2, 4]])).is_none());
        assert!(is_positive_definite(&m(&[&[2, -1], &[-1, 2]])));
        assert!(!is_positive_definite(&m(&[&[1, 2], &[2, 1]])));
    }
}
