//! Dense univariate polynomials and truncated power series over the rationals,
//! stored as ascending coefficient vectors.

use num_traits::{One, Zero};

use super::rat::Rat;

pub fn trim(mut p: Vec<Rat>) -> Vec<Rat> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

pub fn degree(p: &[Rat]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

/// Remainder of `a` modulo nonzero `b`.
pub fn rem(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let db = degree(b).expect("division by zero polynomial");
    let inv = Rat::one() / &b[db];
    let mut r = trim(a.to_vec());
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let q = &r[dr] * &inv;
        let shift = dr - db;
        for (k, c) in b.iter().enumerate().take(db + 1) {
            r[k + shift] -= &q * c;
        }
        r = trim(r);
    }
    r
}

/// Monic greatest common divisor (empty vector for gcd(0, 0)).
pub fn gcd(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
    monic(a)
}

pub fn monic(p: Vec<Rat>) -> Vec<Rat> {
    match p.last() {
        None => p,
        Some(lc) => {
            let inv = Rat::one() / lc;
            p.into_iter().map(|c| c * &inv).collect()
        }
    }
}

/// Product truncated to the first `n` coefficients.
pub fn series_mul(a: &[Rat], b: &[Rat], n: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); n];
    for (i, ai) in a.iter().enumerate().take(n) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(n - i) {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

/// Inverse of a series with nonzero constant term, to `n` coefficients.
pub fn series_inverse(a: &[Rat], n: usize) -> Vec<Rat> {
    assert!(!a[0].is_zero(), "series inverse needs a unit constant term");
    let inv0 = Rat::one() / &a[0];
    let mut out = vec![Rat::zero(); n];
    if n == 0 {
        return out;
    }
    out[0] = inv0.clone();
    for k in 1..n {
        let mut s = Rat::zero();
        for j in 1..=k.min(a.len().saturating_sub(1)) {
            if !a[j].is_zero() {
                s += &a[j] * &out[k - j];
            }
        }
        out[k] = -s * &inv0;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyarith::rat::rat;

    fn v(xs: &[i64]) -> Vec<Rat> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (y-1)(y+2) and (y-1)(y+5)
        assert_eq!(gcd(&v(&[-2, 1, 1]), &v(&[-5, 4, 1])), v(&[-1, 1]));
        assert_eq!(gcd(&v(&[1, 1]), &v(&[2, 1])), v(&[1]));
    }

    #[test]
    fn inverse_of_one_minus_x() {
        assert_eq!(series_inverse(&v(&[1, -1]), 4), v(&[1, 1, 1, 1]));
    }
}
