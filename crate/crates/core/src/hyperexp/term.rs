//! The term `h = c0 · exp(a/b) · ∏ c_l^{e_l}` and its validation.

use num_traits::{Signed, Zero};

use crate::polyarith::rat::{as_nat, rat_to_string};
use crate::polyarith::{gcd_poly, squarefree_part, BiPoly, Rat, RatFun, Var};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TermError {
    #[error("c0 must be nonzero")]
    ZeroC0,
    #[error("b must be nonzero")]
    ZeroB,
    #[error("factor {0} is the zero polynomial")]
    ZeroFactor(usize),
    #[error("factor {0} has exponent zero")]
    ZeroExponent(usize),
    #[error("the term does not depend on x through a/b or any factor")]
    TrivialInX,
    #[error("the term does not depend on y through a/b or any factor")]
    TrivialInY,
}

/// Non-fatal observations: the degree predictions are sharp only for
/// square-free, pairwise coprime factors with non-natural exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TermWarning {
    FactorNotSquarefree(usize),
    FactorsNotCoprime(usize, usize),
    NaturalExponent(usize),
}

impl std::fmt::Display for TermWarning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TermWarning::FactorNotSquarefree(l) => write!(f, "factor {l} is not square-free"),
            TermWarning::FactorsNotCoprime(l, k) => {
                write!(f, "factors {l} and {k} share a common divisor")
            }
            TermWarning::NaturalExponent(l) => {
                write!(
                    f,
                    "factor {l} has a natural-number exponent and could be moved into c0"
                )
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub poly: BiPoly,
    pub exponent: Rat,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperexpTerm {
    pub c0: BiPoly,
    pub a: BiPoly,
    pub b: BiPoly,
    pub factors: Vec<Factor>,
}

impl HyperexpTerm {
    /// Structural constructor: rejects zero polynomials and zero exponents
    /// but leaves the dependence conditions to [`validate`], so that
    /// univariate terms can still be differentiated.
    pub fn new(
        c0: BiPoly,
        a: BiPoly,
        b: BiPoly,
        factors: Vec<(BiPoly, Rat)>,
    ) -> Result<Self, TermError> {
        if c0.is_zero() {
            return Err(TermError::ZeroC0);
        }
        if b.is_zero() {
            return Err(TermError::ZeroB);
        }
        let mut fs = Vec::with_capacity(factors.len());
        for (l, (poly, exponent)) in factors.into_iter().enumerate() {
            if poly.is_zero() {
                return Err(TermError::ZeroFactor(l + 1));
            }
            if exponent.is_zero() {
                return Err(TermError::ZeroExponent(l + 1));
            }
            fs.push(Factor { poly, exponent });
        }
        Ok(HyperexpTerm {
            c0,
            a,
            b,
            factors: fs,
        })
    }

    /// `b · sqfp(b) · ∏ c_l`, the per-derivative denominator growth.
    pub fn v(&self) -> BiPoly {
        let mut v = &self.b * &squarefree_part(&self.b);
        for f in &self.factors {
            v = &v * &f.poly;
        }
        v
    }

    /// Logarithmic derivative `(D_var h)/h`, assembled from its parts.
    pub fn dlog(&self, var: Var) -> RatFun {
        let mut acc = RatFun::new(self.c0.diff(var), self.c0.clone()).expect("c0 nonzero");
        let ab = RatFun::new(self.a.clone(), self.b.clone()).expect("b nonzero");
        acc = acc.add(&ab.diff(var));
        for f in &self.factors {
            let t = RatFun::new(f.poly.diff(var).scale(&f.exponent), f.poly.clone())
                .expect("factor nonzero");
            acc = acc.add(&t);
        }
        acc
    }

    /// Short human-readable form.
    pub fn describe(&self) -> String {
        let mut s = format!("({})", self.c0);
        if !self.a.is_zero() {
            if self.b == BiPoly::one() {
                s.push_str(&format!("*exp({})", self.a));
            } else {
                s.push_str(&format!("*exp(({})/({}))", self.a, self.b));
            }
        }
        for f in &self.factors {
            s.push_str(&format!("*({})^({})", f.poly, rat_to_string(&f.exponent)));
        }
        s
    }
}

fn max_deg(p: &BiPoly, q: &BiPoly, var: Var) -> i64 {
    p.degree(var).max(q.degree(var))
}

/// Checks the hard invariants and reports sharpness warnings.
pub fn validate(term: &HyperexpTerm) -> Result<Vec<TermWarning>, TermError> {
    if term.c0.is_zero() {
        return Err(TermError::ZeroC0);
    }
    if term.b.is_zero() {
        return Err(TermError::ZeroB);
    }
    for (l, f) in term.factors.iter().enumerate() {
        if f.poly.is_zero() {
            return Err(TermError::ZeroFactor(l + 1));
        }
        if f.exponent.is_zero() {
            return Err(TermError::ZeroExponent(l + 1));
        }
    }
    for (var, err) in [
        (Var::X, TermError::TrivialInX),
        (Var::Y, TermError::TrivialInY),
    ] {
        let s: i64 = term.factors.iter().map(|f| f.poly.degree(var)).sum();
        if max_deg(&term.a, &term.b, var) + s <= 0 {
            return Err(err);
        }
    }
    let mut warnings = Vec::new();
    for (l, f) in term.factors.iter().enumerate() {
        let sf = squarefree_part(&f.poly);
        if sf.degree(Var::X) != f.poly.degree(Var::X) || sf.degree(Var::Y) != f.poly.degree(Var::Y)
        {
            warnings.push(TermWarning::FactorNotSquarefree(l + 1));
        }
    }
    for l in 0..term.factors.len() {
        for k in l + 1..term.factors.len() {
            if !gcd_poly(&term.factors[l].poly, &term.factors[k].poly).is_constant() {
                warnings.push(TermWarning::FactorsNotCoprime(l + 1, k + 1));
            }
        }
    }
    for (l, f) in term.factors.iter().enumerate() {
        if as_nat(&f.exponent).is_some() && f.exponent.is_positive() {
            warnings.push(TermWarning::NaturalExponent(l + 1));
        }
    }
    Ok(warnings)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyarith::parse_poly;
    use crate::polyarith::rat::{rat, ratio};

    fn p(s: &str) -> BiPoly {
        parse_poly(s).unwrap()
    }

    fn example2() -> HyperexpTerm {
        HyperexpTerm::new(
            p("1"),
            p("x^2*y"),
            p("1"),
            vec![(p("x - 2*y"), ratio(1, 2))],
        )
        .unwrap()
    }

    #[test]
    fn validation() {
        assert_eq!(validate(&example2()), Ok(vec![]));
        let t = HyperexpTerm::new(p("1"), p("y"), p("1"), vec![(p("x^2"), ratio(1, 2))]).unwrap();
        assert_eq!(validate(&t), Ok(vec![TermWarning::FactorNotSquarefree(1)]));
        let t = HyperexpTerm::new(p("1"), p("0"), p("1"), vec![]).unwrap();
        assert_eq!(validate(&t), Err(TermError::TrivialInX));
        let t = HyperexpTerm::new(p("1"), p("0"), p("1"), vec![(p("x+y"), rat(2))]).unwrap();
        assert_eq!(validate(&t), Ok(vec![TermWarning::NaturalExponent(1)]));
        assert_eq!(
            HyperexpTerm::new(p("0"), p("x"), p("1"), vec![]).unwrap_err(),
            TermError::ZeroC0
        );
    }

    #[test]
    fn logarithmic_derivatives() {
        let h = example2();
        assert_eq!(
            h.dlog(Var::X),
            RatFun::new(p("1 + 4*x^2*y - 8*x*y^2"), p("2*x - 4*y")).unwrap()
        );
        assert_eq!(
            h.dlog(Var::Y),
            RatFun::new(p("x^3 - 2*x^2*y - 1"), p("x - 2*y")).unwrap()
        );
        let t = HyperexpTerm::new(p("1"), p("0"), p("1"), vec![(p("x+y"), rat(1))]).unwrap();
        assert_eq!(t.dlog(Var::X), RatFun::new(p("1"), p("x+y")).unwrap());
    }
}
