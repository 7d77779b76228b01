//! Exact rational scalars.
//!
//! Every quantity the engine produces is rational once the Killing form is
//! normalized, so all arithmetic runs over `Ratio<i128>`. Release builds keep
//! overflow checks on (see the workspace manifest), so an overflow aborts
//! instead of silently corrupting a verdict.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

pub type Q = Ratio<i128>;

#[inline]
pub fn int(n: i128) -> Q {
    Q::from_integer(n)
}

#[inline]
pub fn frac(n: i128, d: i128) -> Q {
    Q::new(n, d)
}

/// `p` for integers, `p/q` otherwise.
pub fn format(value: &Q) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Parses the output of [`format`].
pub fn parse(text: &str) -> Option<Q> {
    let text = text.trim();
    match text.split_once('/') {
        Some((n, d)) => {
            let d: i128 = d.trim().parse().ok()?;
            if d == 0 {
                return None;
            }
            Some(Q::new(n.trim().parse().ok()?, d))
        }
        None => text.parse().ok().map(Q::from_integer),
    }
}

/// Scales a list of positive rationals by one common positive factor so the
/// results are integers with gcd 1.
///
/// Returns `None` if any value is not strictly positive.
pub fn coprime_scaling(values: &[Q]) -> Option<Vec<i128>> {
    if values.iter().any(|v| !v.is_positive()) {
        return None;
    }
    let lcm = values.iter().fold(1i128, |acc, v| acc.lcm(v.denom()));
    let ints: Vec<i128> = values.iter().map(|v| (v * lcm).to_integer()).collect();
    let gcd = ints.iter().fold(0i128, |acc, n| acc.gcd(n));
    if gcd.is_zero() {
        return Some(ints);
    }
    Some(ints.into_iter().map(|n| n / gcd).collect())
}

/// True if `a` and `b` are parallel (one is a rational multiple of the other).
/// The zero vector is parallel to everything.
pub fn parallel(a: &[Q], b: &[Q]) -> bool {
    debug_assert_eq!(a.len(), b.len());
    // Cross-ratio test: a_i b_j == a_j b_i for all pairs.
    for i in 0..a.len() {
        for j in (i + 1)..a.len() {
            if a[i] * b[j] != a[j] * b[i] {
                return false;
            }
        }
    }
    true
}

pub fn is_one(value: &Q) -> bool {
    value.is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_round_trip() {
        for v in [int(0), int(-3), frac(1, 4), frac(-7, 12)] {
            assert_eq!(parse(&format(&v)), Some(v));
        }
        assert_eq!(format(&frac(2, 4)), "1/2");
        assert_eq!(parse("1/0"), None);
    }

    #[test]
    fn coprime_scaling_examples() {
        assert_eq!(
            coprime_scaling(&[frac(2, 3), frac(5, 3), frac(7, 3)]),
            Some(vec![2, 5, 7])
        );
        assert_eq!(
            coprime_scaling(&[frac(1, 2), int(1), frac(3, 2)]),
            Some(vec![1, 2, 3])
        );
        assert_eq!(coprime_scaling(&[int(4), int(6)]), Some(vec![2, 3]));
        assert_eq!(coprime_scaling(&[int(0)]), None);
    }

    #[test]
    fn parallel_vectors() {
        assert!(parallel(&[int(2), int(4)], &[int(1), int(2)]));
        assert!(!parallel(&[int(2), int(4)], &[int(1), int(3)]));
        assert!(parallel(&[int(0), int(0)], &[int(1), int(3)]));
    }
}
