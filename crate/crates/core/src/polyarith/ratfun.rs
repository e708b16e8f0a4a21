//! Normalized bivariate rational functions.

use std::fmt;

use super::gcd::gcd_poly;
use super::poly::{BiPoly, Var};
use super::rat::Rat;
use super::PolyError;

/// `num/den` with `gcd(num, den) = 1` and `den` monic under graded-lex.
/// Zero is represented as `0/1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFun {
    num: BiPoly,
    den: BiPoly,
}

impl RatFun {
    pub fn new(num: BiPoly, den: BiPoly) -> Result<Self, PolyError> {
        rf_normalize(num, den)
    }

    pub fn from_poly(p: BiPoly) -> Self {
        RatFun {
            num: p,
            den: BiPoly::one(),
        }
    }

    pub fn zero() -> Self {
        RatFun::from_poly(BiPoly::zero())
    }

    pub fn one() -> Self {
        RatFun::from_poly(BiPoly::one())
    }

    pub fn num(&self) -> &BiPoly {
        &self.num
    }

    pub fn den(&self) -> &BiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &RatFun) -> RatFun {
        let n = &(&self.num * &o.den) + &(&o.num * &self.den);
        normalize_nonzero(n, &self.den * &o.den)
    }

    pub fn sub(&self, o: &RatFun) -> RatFun {
        let n = &(&self.num * &o.den) - &(&o.num * &self.den);
        normalize_nonzero(n, &self.den * &o.den)
    }

    pub fn mul(&self, o: &RatFun) -> RatFun {
        normalize_nonzero(&self.num * &o.num, &self.den * &o.den)
    }

    pub fn scale(&self, c: &Rat) -> RatFun {
        RatFun {
            num: self.num.scale(c),
            den: if num_traits::Zero::is_zero(c) {
                BiPoly::one()
            } else {
                self.den.clone()
            },
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<RatFun> {
        if self.is_zero() {
            return None;
        }
        Some(normalize_nonzero(self.den.clone(), self.num.clone()))
    }

    /// Quotient-rule derivative, normalized.
    pub fn diff(&self, var: Var) -> RatFun {
        rf_diff(self, var)
    }

    /// Expresses `self` over the given denominator when that is possible,
    /// returning the corresponding numerator.
    pub fn numerator_over(&self, den: &BiPoly) -> Option<BiPoly> {
        let k = den.div_exact(&self.den)?;
        Some(&self.num * &k)
    }
}

fn normalize_nonzero(num: BiPoly, den: BiPoly) -> RatFun {
    rf_normalize(num, den).expect("denominator of a product of nonzero polynomials is nonzero")
}

/// Cancels the gcd and makes the denominator monic.
pub fn rf_normalize(num: BiPoly, den: BiPoly) -> Result<RatFun, PolyError> {
    if den.is_zero() {
        return Err(PolyError::ZeroDenominator);
    }
    if num.is_zero() {
        return Ok(RatFun::zero());
    }
    let g = gcd_poly(&num, &den);
    let (mut n, mut d) = if g.is_constant() {
        (num, den)
    } else {
        (
            num.div_exact(&g).expect("gcd divides numerator"),
            den.div_exact(&g).expect("gcd divides denominator"),
        )
    };
    let lc = d.leading_coeff_glex();
    let inv = Rat::from_integer(1.into()) / lc;
    n = n.scale(&inv);
    d = d.scale(&inv);
    Ok(RatFun { num: n, den: d })
}

pub fn rf_diff(f: &RatFun, var: Var) -> RatFun {
    let n = &(&f.num.diff(var) * &f.den) - &(&f.num * &f.den.diff(var));
    normalize_nonzero(n, &f.den * &f.den)
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyarith::parse::parse_poly;

    fn p(s: &str) -> BiPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn normalize_cancels() {
        let f = rf_normalize(p("x^2 - y^2"), p("x - y")).unwrap();
        assert_eq!(f, RatFun::from_poly(p("x + y")));
        assert!(rf_normalize(p("x"), BiPoly::zero()).is_err());
    }

    #[test]
    fn canonical_under_scaling() {
        let a = rf_normalize(p("2*x + 2"), p("4*x*y - 6")).unwrap();
        let b = rf_normalize(p("-x - 1"), p("-2*x*y + 3")).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn quotient_rule() {
        let f = rf_normalize(BiPoly::one(), p("x - 2*y")).unwrap();
        let expected = rf_normalize(p("2"), p("(x - 2*y)^2")).unwrap();
        assert_eq!(rf_diff(&f, Var::Y), expected);
    }
}
