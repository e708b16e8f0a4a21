//! Arithmetic and row echelon forms modulo word-sized primes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

/// Primes just below 2^31, tried in order.
pub const PRIMES: [u64; 12] = [
    2147483629, 2147483587, 2147483579, 2147483563, 2147483549, 2147483543, 2147483497, 2147483489,
    2147483477, 2147483423, 2147483399, 2147483647,
];

/// Barrett reduction for a fixed modulus below 2^31.
#[derive(Debug, Clone, Copy)]
pub struct Modulus {
    pub p: u64,
    m: u64,
}

impl Modulus {
    pub fn new(p: u64) -> Self {
        assert!(p > 2 && p < (1 << 31));
        Modulus {
            p,
            m: (u128::from(u64::MAX) / u128::from(p)) as u64,
        }
    }

    /// Reduces any `x < 2^63`.
    #[inline]
    pub fn reduce(&self, x: u64) -> u64 {
        let q = ((u128::from(x) * u128::from(self.m)) >> 64) as u64;
        let r = x - q * self.p;
        if r >= self.p {
            r - self.p
        } else {
            r
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        self.reduce(a * b)
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0);
        self.pow(a, self.p - 2)
    }

    pub fn from_big(&self, x: &BigInt) -> u64 {
        let r = x.mod_floor(&BigInt::from(self.p));
        r.to_u64().expect("residue fits")
    }

    pub fn from_i64(&self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }
}

/// Outcome of an ordered echelon pass.
#[derive(Debug, Clone)]
pub struct ModEchelon {
    /// `(row, column)` pairs in elimination order.
    pub pivots: Vec<(usize, usize)>,
    /// First non-pivot column satisfying the stop predicate.
    pub stopped_at: Option<usize>,
}

/// Row echelon pass over `rows` (integer entries) modulo `md`, visiting
/// columns in `order`. Stops at the first column without a pivot for which
/// `stop` holds.
pub fn mod_echelon(
    rows: &[Vec<BigInt>],
    md: Modulus,
    order: &[usize],
    stop: impl Fn(usize) -> bool,
) -> ModEchelon {
    let n = order.len();
    // Column-permuted copy so that the remaining columns form a suffix.
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| order.iter().map(|&c| md.from_big(&r[c])).collect())
        .collect();
    let mut unused: Vec<usize> = (0..m.len()).collect();
    let mut pivots = Vec::new();
    for k in 0..n {
        let Some(pos) = unused.iter().position(|&r| m[r][k] != 0) else {
            if stop(order[k]) {
                return ModEchelon {
                    pivots,
                    stopped_at: Some(order[k]),
                };
            }
            continue;
        };
        let pr = unused.swap_remove(pos);
        let inv = md.inv(m[pr][k]);
        let pivot_tail: Vec<u64> = m[pr][k..].iter().map(|&x| md.mul(x, inv)).collect();
        for &r in &unused {
            let f = m[r][k];
            if f == 0 {
                continue;
            }
            let g = md.p - f;
            for (x, &y) in m[r][k..].iter_mut().zip(&pivot_tail) {
                if y != 0 {
                    *x = md.reduce(*x + g * y);
                }
            }
        }
        pivots.push((pr, order[k]));
    }
    ModEchelon {
        pivots,
        stopped_at: None,
    }
}

/// Inverse of a square matrix modulo `md`, or `None` if singular.
pub fn mod_inverse(a: &[Vec<u64>], md: Modulus) -> Option<Vec<Vec<u64>>> {
    let n = a.len();
    let mut m: Vec<Vec<u64>> = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| u64::from(i == j)));
            row
        })
        .collect();
    for k in 0..n {
        let pr = (k..n).find(|&r| m[r][k] != 0)?;
        m.swap(k, pr);
        let inv = md.inv(m[k][k]);
        for x in m[k].iter_mut() {
            *x = md.mul(*x, inv);
        }
        let pivot = m[k].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == k || row[k] == 0 {
                continue;
            }
            let g = md.p - row[k];
            for (x, &y) in row.iter_mut().zip(&pivot) {
                if y != 0 {
                    *x = md.reduce(*x + g * y);
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn is_zero_mod(x: &BigInt, md: Modulus) -> bool {
    x.is_zero() || md.from_big(x) == 0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn barrett_agrees_with_remainder() {
        let md = Modulus::new(PRIMES[0]);
        for &x in &[0u64, 1, md.p - 1, md.p, md.p * md.p - 1, (1 << 62) + 12345] {
            assert_eq!(md.reduce(x), x % md.p);
        }
        assert_eq!(md.mul(md.inv(12345), 12345), 1);
        assert_eq!(md.from_i64(-1), md.p - 1);
    }

    #[test]
    fn inverse_roundtrip() {
        let md = Modulus::new(PRIMES[1]);
        let a = vec![vec![2, 3], vec![1, 4]];
        let inv = mod_inverse(&a, md).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let s = (0..2).fold(0, |acc, k| md.reduce(acc + md.mul(a[i][k], inv[k][j])));
                assert_eq!(s, u64::from(i == j));
            }
        }
        assert!(mod_inverse(&[vec![1, 2], vec![2, 4]], md).is_none());
    }

    #[test]
    fn echelon_finds_dependent_column() {
        let rows: Vec<Vec<BigInt>> = vec![
            vec![1.into(), 0.into(), 1.into()],
            vec![0.into(), 1.into(), 1.into()],
        ];
        let e = mod_echelon(&rows, Modulus::new(PRIMES[0]), &[0, 1, 2], |_| true);
        assert_eq!(e.stopped_at, Some(2));
        assert_eq!(e.pivots.len(), 2);
    }
}
