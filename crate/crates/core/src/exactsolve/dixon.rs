//! p-adic lifting for square nonsingular integer systems.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::modular::{mod_inverse, Modulus};
use crate::polyarith::Rat;

/// Rational number `a/b ≡ u (mod m)` with `|a|, b ≤ √(m/2)`, if any.
pub fn rational_reconstruction(u: &BigInt, m: &BigInt) -> Option<Rat> {
    let bound = (m / 2u32).sqrt();
    let (mut r0, mut r1) = (m.clone(), u.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let (q, r2) = r0.div_rem(&r1);
        r0 = std::mem::replace(&mut r1, r2);
        let t2 = &t0 - &q * &t1;
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(Rat::new(r1, t1))
}

/// Combines base-`p` digits (least significant first) into one integer.
fn combine_digits(digits: &[u64], p: &BigInt, powers: &mut Vec<BigInt>) -> BigInt {
    fn rec(d: &[u64], level: usize, powers: &[BigInt]) -> BigInt {
        if d.len() <= 1 {
            return d.first().map_or_else(BigInt::zero, |&x| BigInt::from(x));
        }
        let half = 1usize << (level - 1);
        if d.len() <= half {
            return rec(d, level - 1, powers);
        }
        rec(&d[..half], level - 1, powers) + rec(&d[half..], level - 1, powers) * &powers[level - 1]
    }
    let mut level = 0;
    while (1usize << level) < digits.len() {
        level += 1;
    }
    // powers[k] = p^(2^k)
    if powers.is_empty() {
        powers.push(p.clone());
    }
    while powers.len() < level {
        let last = powers.last().unwrap();
        let next = last * last;
        powers.push(next);
    }
    rec(digits, level, powers)
}

/// Exact solution of `A x = b` for square `A` that is invertible modulo
/// `md.p`. Returns `None` if `A` is singular mod p or lifting does not
/// converge to a verified solution.
pub fn dixon_solve(a: &[Vec<BigInt>], b: &[BigInt], md: Modulus) -> Option<Vec<Rat>> {
    let n = a.len();
    if n == 0 {
        return Some(Vec::new());
    }
    let a_mod: Vec<Vec<u64>> = a
        .iter()
        .map(|r| r.iter().map(|x| md.from_big(x)).collect())
        .collect();
    let ainv = mod_inverse(&a_mod, md)?;
    let p = md.p;
    let pb = BigInt::from(p);

    // Hadamard-type bound on the bit size of numerators and denominators.
    let mut log_h: f64 = 0.0;
    for row in a {
        let s: f64 = row
            .iter()
            .map(|x| x.to_f64().unwrap_or(f64::MAX).powi(2))
            .sum();
        log_h += 0.5 * s.max(1.0).log2();
    }
    let bnorm: f64 = b
        .iter()
        .map(|x| x.to_f64().unwrap_or(f64::MAX).powi(2))
        .sum();
    let needed_bits = 2.0 * (log_h + 0.5 * bnorm.max(1.0).log2()) + 64.0;
    let max_iter = (needed_bits / (p as f64).log2()).ceil() as usize + 2;

    let small = a.iter().flatten().chain(b).all(|x| x.bits() <= 52)
        && (n as f64).log2() + 52.0 + 31.0 < 120.0;
    let a_i128: Vec<Vec<i128>> = if small {
        a.iter()
            .map(|r| r.iter().map(|x| x.to_i128().unwrap()).collect())
            .collect()
    } else {
        Vec::new()
    };
    let mut res_small: Vec<i128> = if small {
        b.iter().map(|x| x.to_i128().unwrap()).collect()
    } else {
        Vec::new()
    };
    let mut res_big: Vec<BigInt> = if small { Vec::new() } else { b.to_vec() };

    let mut digits: Vec<Vec<u64>> = vec![Vec::new(); n];
    let mut powers = Vec::new();
    let mut next_check = 16usize;
    for iter in 1..=max_iter.max(16) {
        let rmod: Vec<u64> = if small {
            res_small
                .iter()
                .map(|&x| x.rem_euclid(p as i128) as u64)
                .collect()
        } else {
            res_big.iter().map(|x| md.from_big(x)).collect()
        };
        let xi: Vec<u64> = ainv
            .iter()
            .map(|row| {
                row.iter().zip(&rmod).fold(0u64, |acc, (&u, &v)| {
                    if v == 0 {
                        acc
                    } else {
                        md.reduce(acc + md.mul(u, v))
                    }
                })
            })
            .collect();
        if small {
            for (r, row) in res_small.iter_mut().zip(&a_i128) {
                let s: i128 = row.iter().zip(&xi).map(|(&u, &v)| u * v as i128).sum();
                let t = *r - s;
                debug_assert_eq!(t.rem_euclid(p as i128), 0);
                *r = t / p as i128;
            }
        } else {
            for (r, row) in res_big.iter_mut().zip(a) {
                let s: BigInt = row
                    .iter()
                    .zip(&xi)
                    .filter(|(_, &v)| v != 0)
                    .map(|(u, &v)| u * v)
                    .sum();
                *r = (&*r - s) / &pb;
            }
        }
        for (d, x) in digits.iter_mut().zip(&xi) {
            d.push(*x);
        }
        let done = if small {
            res_small.iter().all(|&x| x == 0)
        } else {
            res_big.iter().all(Zero::is_zero)
        };
        if iter == next_check || iter >= max_iter || done {
            next_check *= 2;
            let modulus = num_traits::pow(pb.clone(), iter);
            let values: Vec<BigInt> = digits
                .iter()
                .map(|d| combine_digits(d, &pb, &mut powers))
                .collect();
            if let Some(sol) = reconstruct_all(&values, &modulus) {
                if verify(a, b, &sol) {
                    return Some(sol);
                }
            }
            if iter >= max_iter {
                return None;
            }
        }
    }
    None
}

/// Reconstructs every component, sharing a growing common denominator.
fn reconstruct_all(values: &[BigInt], m: &BigInt) -> Option<Vec<Rat>> {
    let bound = (m / 2u32).sqrt();
    let half = m / 2u32;
    let mut den = BigInt::one();
    let mut nums = Vec::with_capacity(values.len());
    for u in values {
        let mut w = (u * &den).mod_floor(m);
        if w > half {
            w -= m;
        }
        if w.abs() <= bound {
            nums.push((w, den.clone()));
            continue;
        }
        let q = rational_reconstruction(&w, m)?;
        den *= q.denom();
        nums.push((q.numer().clone(), den.clone()));
    }
    Some(nums.into_iter().map(|(a, d)| Rat::new(a, d)).collect())
}

fn verify(a: &[Vec<BigInt>], b: &[BigInt], x: &[Rat]) -> bool {
    let l = crate::polyarith::rat::denominator_lcm(x.iter());
    let xn: Vec<BigInt> = x.iter().map(|q| q.numer() * (&l / q.denom())).collect();
    a.iter().zip(b).all(|(row, bi)| {
        let s: BigInt = row
            .iter()
            .zip(&xn)
            .filter(|(u, v)| !u.is_zero() && !v.is_zero())
            .map(|(u, v)| u * v)
            .sum();
        s == bi * &l
    })
}
