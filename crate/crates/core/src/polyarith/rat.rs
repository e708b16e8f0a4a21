//! Helpers around arbitrary-precision rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational number with a positive, reduced denominator.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"` or `"p/q"` (optional sign, surrounding whitespace allowed).
pub fn parse_rat(src: &str) -> Option<Rat> {
    let s = src.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rat::new(n, d))
}

/// Canonical `"p/q"` serialization, or `"p"` for integers.
pub fn rat_to_string(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `Some(n)` when `r` is a nonnegative integer fitting in `i64`.
pub fn as_nat(r: &Rat) -> Option<i64> {
    if r.is_integer() && !r.is_negative() {
        r.numer().to_i64()
    } else {
        None
    }
}

pub fn as_int(r: &Rat) -> Option<i64> {
    if r.is_integer() {
        r.numer().to_i64()
    } else {
        None
    }
}

/// Falling factorial z(z-1)...(z-n+1); equals 1 for n <= 0.
pub fn falling_factorial(z: &Rat, n: i64) -> Rat {
    let mut acc = Rat::one();
    for k in 0..n.max(0) {
        acc *= z - rat(k);
    }
    acc
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for t in 0..k {
        acc = acc * BigInt::from(n - t) / BigInt::from(t + 1);
    }
    acc
}

/// Least common multiple of the denominators.
pub fn denominator_lcm<'a>(items: impl IntoIterator<Item = &'a Rat>) -> BigInt {
    items
        .into_iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

/// Serializes a rational as its `"p/q"` string.
pub fn ser_rat<S: serde::Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&rat_to_string(r))
}

pub fn ser_opt_rat<S: serde::Serializer>(r: &Option<Rat>, s: S) -> Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_str(&rat_to_string(r)),
        None => s.serialize_none(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        assert_eq!(parse_rat("-6/4"), Some(ratio(-3, 2)));
        assert_eq!(parse_rat(" 7 "), Some(rat(7)));
        assert_eq!(parse_rat("1/0"), None);
        assert_eq!(parse_rat("abc"), None);
        assert_eq!(rat_to_string(&ratio(-3, 2)), "-3/2");
        assert_eq!(rat_to_string(&rat(5)), "5");
    }

    #[test]
    fn falling_factorials() {
        assert_eq!(falling_factorial(&rat(4), 2), rat(12));
        assert_eq!(falling_factorial(&rat(2), 3), rat(0));
        assert_eq!(falling_factorial(&rat(-4), 2), rat(20));
        assert_eq!(falling_factorial(&ratio(1, 2), 0), rat(1));
        assert_eq!(falling_factorial(&rat(3), -1), rat(1));
    }

    #[test]
    fn naturals() {
        assert_eq!(as_nat(&rat(3)), Some(3));
        assert_eq!(as_nat(&rat(-1)), None);
        assert_eq!(as_nat(&ratio(1, 2)), None);
    }
}
