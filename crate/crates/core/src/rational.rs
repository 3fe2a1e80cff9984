//! Exact rational scalars and the small amount of linear algebra the rest of
//! the crate needs.

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar used for every weight coordinate and matrix entry.
pub type Q = Ratio<i64>;

pub fn q(n: i64) -> Q {
    Q::from_integer(n)
}

pub fn frac(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

/// Formats a rational as `"p/q"`, the wire format for weights.
pub fn to_wire(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses `"p/q"` or a bare integer.
pub fn from_wire(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().ok()?;
            let d: i64 = d.trim().parse().ok()?;
            if d == 0 {
                None
            } else {
                Some(Q::new(n, d))
            }
        }
        None => s.parse::<i64>().ok().map(Q::from_integer),
    }
}

/// Converts an integral rational to `i64`, `None` otherwise.
pub fn as_integer(x: &Q) -> Option<i64> {
    if x.is_integer() {
        Some(x.to_integer())
    } else {
        None
    }
}

/// Inverse of a square rational matrix by Gauss-Jordan elimination.
/// Returns `None` for singular input.
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
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col];
                for c in 0..2 * n {
                    let v = a[col][c];
                    a[r][c] -= factor * v;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// `m * v` for a rational matrix and vector.
pub fn mat_vec(m: &[Vec<Q>], v: &[Q]) -> Vec<Q> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

pub fn all_nonnegative(v: &[Q]) -> bool {
    v.iter().all(|x| !x.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wire_round_trip() {
        for x in [frac(2, 3), q(-4), frac(-1, 2), q(0)] {
            assert_eq!(from_wire(&to_wire(&x)), Some(x));
        }
        assert_eq!(from_wire("7"), Some(q(7)));
        assert_eq!(from_wire("1/0"), None);
        assert_eq!(from_wire("x"), None);
    }

    #[test]
    fn inverse_of_a2_cartan() {
        let m = vec![vec![q(2), q(-1)], vec![q(-1), q(2)]];
        let inv = invert(&m).unwrap();
        assert_eq!(inv, vec![vec![frac(2, 3), frac(1, 3)], vec![frac(1, 3), frac(2, 3)]]);
        assert!(invert(&[vec![q(1), q(2)], vec![q(2), q(4)]]).is_none());
    }
}
