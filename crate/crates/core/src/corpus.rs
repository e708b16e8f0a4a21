//! A small library of named terms used by the tests, the CLI examples and
//! the browser demo. Each entry is a `TermFile`-shaped description so it can
//! be printed as JSON verbatim.

use crate::hyperexp::HyperexpTerm;
use crate::polyarith::parse_poly;
use crate::polyarith::rat::parse_rat;

#[derive(Debug, Clone, Copy)]
pub struct NamedTerm {
    pub name: &'static str,
    pub summary: &'static str,
    pub c0: &'static str,
    pub a: &'static str,
    pub b: &'static str,
    pub factors: &'static [(&'static str, &'static str)],
}

impl NamedTerm {
    pub fn term(&self) -> HyperexpTerm {
        HyperexpTerm::new(
            parse_poly(self.c0).expect("corpus polynomial"),
            parse_poly(self.a).expect("corpus polynomial"),
            parse_poly(self.b).expect("corpus polynomial"),
            self.factors
                .iter()
                .map(|(p, e)| {
                    (
                        parse_poly(p).expect("corpus polynomial"),
                        parse_rat(e).expect("corpus exponent"),
                    )
                })
                .collect(),
        )
        .expect("corpus term is structurally valid")
    }
}

const CUBIC_U: &str = "7*x^3*y^3 + 8*x^3*y^2 + 9*x^3*y + 3*x^3 + 10*x^2*y^3 + 2*x^2*y^2 + 3*x^2*y + 9*x^2 + 7*x*y^3 + 4*x*y^2 + 5*x*y + 3*x + 9*y^3 + 6*y^2 + 6*y + 1";
const CUBIC_V: &str = "6*x^3*y^3 + 4*x^3*y^2 + x^3*y + 9*x^3 + 8*x^2*y^3 + 8*x^2*y^2 + 2*x^2*y + 8*x^2 + 3*x*y^3 + 7*x*y^2 + 4*x*y + 8*x + 5*y^3 + 2*y^2 + 7*y + 6";
const QUAD_U: &str = "4*x^2*y^2 + 7*x^2*y + 9*x^2 + 5*x*y^2 + 2*x*y + 3*x + 5*y^2 + y + 6";
const QUAD_V: &str = "6*x^2*y^2 + 10*x^2*y + 6*x^2 + 9*x*y^2 + 5*x*y + 8*x + 8*y^2 + 10*y + 8";
const QUAD_W: &str = "8*x^2*y^2 + 7*x^2*y + 4*x^2 + 5*x*y^2 + 3*x*y + 7*x + 9*y^2 + 7*y + 7";
const RAT_NUM: &str = "3*x^2*y^2 + 9*x^2*y + 9*x^2 + 10*x*y^2 + 3*x*y + 4*x + 1";
const RAT_DEN: &str = "3*x^3*y^3 + 9*x^3*y^2 + x^3*y + 3*x^3 + 7*x^2*y^3 + 8*x^2*y^2 + 5*x^2 + 8*x*y^3 + 10*x*y^2 + 10*x*y + x + 5*y^3 + 10*y^2 + 5*y + 5";
const SEXTIC: &str = "4*x^2*y^6 + 8*x^2*y^5 + 2*x^2*y^4 + 7*x^2*y^3 + 7*x^2*y^2 + 2*x^2*y + 7*x^2 + 10*x*y^6 + 7*x*y^5 + 9*x*y^4 + 4*x*y^3 + 5*x*y^2 + 5*x*y + 7*x + 4*y^6 + 3*y^5 + 2*y^4 + 8*y^3 + 3*y^2 + 7*y + 2";

/// `exp(x^2 y) · sqrt(x − 2y)`: a first-order telescoper exists.
pub const SQRT_EXP: NamedTerm = NamedTerm {
    name: "sqrt-exp",
    summary: "exp(x^2*y) * sqrt(x - 2*y)",
    c0: "1",
    a: "x^2*y",
    b: "1",
    factors: &[("x - 2*y", "1/2")],
};

/// Dense cubic times the exponential of a dense cubic.
pub const CUBIC_EXP: NamedTerm = NamedTerm {
    name: "cubic-exp",
    summary: "u * exp(v) with dense cubics u, v",
    c0: CUBIC_U,
    a: CUBIC_V,
    b: "1",
    factors: &[],
};

/// Exponential of a biquadratic divided by another biquadratic.
pub const EXP_OVER_QUADRATIC: NamedTerm = NamedTerm {
    name: "exp-over-quadratic",
    summary: "exp(u) / v with dense biquadratics u, v",
    c0: "1",
    a: QUAD_U,
    b: "1",
    factors: &[(QUAD_V, "-1")],
};

/// Rational function whose gray region is drawn in most illustrations.
pub const RATIONAL: NamedTerm = NamedTerm {
    name: "rational",
    summary: "biquadratic over bicubic rational function",
    c0: RAT_NUM,
    a: "0",
    b: "1",
    factors: &[(RAT_DEN, "-1")],
};

/// Biquadratic over a product of two biquadratics.
pub const RATIONAL_PRODUCT: NamedTerm = NamedTerm {
    name: "rational-product",
    summary: "u / (v w) with dense biquadratics",
    c0: QUAD_U,
    a: "0",
    b: "1",
    factors: &[(QUAD_V, "-1"), (QUAD_W, "-1")],
};

/// Square root of a polynomial of bidegree (2, 6).
pub const SQRT_SEXTIC: NamedTerm = NamedTerm {
    name: "sqrt-sextic",
    summary: "sqrt(u) with u of bidegree (2, 6)",
    c0: "1",
    a: "0",
    b: "1",
    factors: &[(SEXTIC, "1/2")],
};

/// Integrand whose diagonal-style integral counts a family of polyominoes.
pub const POLYOMINO: NamedTerm = NamedTerm {
    name: "polyomino",
    summary: "x(1-y)^3 / (y ((1-y)^4 - x(1 - y + x*y - y^2 + y^3)))",
    c0: "x*(1 - y)^3",
    a: "0",
    b: "1",
    factors: &[
        ("y", "-1"),
        ("(1 - y)^4 - x*(1 - y + x*y - y^2 + y^3)", "-1"),
    ],
};

/// `c0 · exp(a/b) · sqrt(c1)` with dense random data of bidegrees
/// (2,2), (1,1), (1,1), (4,6).
pub const RANDOM_SQRT_EXP: NamedTerm = NamedTerm {
    name: "random-sqrt-exp",
    summary: "c0*exp(a/b)*sqrt(c1), dense random bidegrees (2,2),(1,1),(1,1),(4,6)",
    c0: "7*x^2*y^2 + 6*x^2*y + 9*x^2 + 5*x*y^2 + 7*x*y + 7*x + 4*y^2 + y + 2",
    a: "6*x*y + 5*x + 7*y + 9",
    b: "5*x*y + 9*x + 3*y + 5",
    factors: &[(
        "9*x^4*y^6 + 2*x^4*y^5 + 4*x^4*y^4 + 7*x^4*y^3 + x^4*y^2 + 6*x^4*y + 8*x^4 + x^3*y^6 + 6*x^3*y^5 + x^3*y^4 + 6*x^3*y^3 + 7*x^3*y^2 + x^3*y + 6*x^3 + 9*x^2*y^6 + 7*x^2*y^5 + 3*x^2*y^4 + 8*x^2*y^3 + 9*x^2*y^2 + 2*x^2*y + 7*x^2 + 5*x*y^6 + 2*x*y^5 + 2*x*y^4 + 9*x*y^3 + 6*x*y^2 + 4*x*y + 9*x + 9*y^6 + 3*y^5 + 4*y^4 + 3*y^3 + y^2 + 9*y + 3",
        "1/2",
    )],
};

pub const ALL: &[NamedTerm] = &[
    SQRT_EXP,
    CUBIC_EXP,
    EXP_OVER_QUADRATIC,
    RATIONAL,
    RATIONAL_PRODUCT,
    SQRT_SEXTIC,
    POLYOMINO,
    RANDOM_SQRT_EXP,
];

pub fn by_name(name: &str) -> Option<&'static NamedTerm> {
    ALL.iter().find(|t| t.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperexp::{greek_params, validate};

    #[test]
    fn all_terms_valid() {
        for t in ALL {
            assert!(validate(&t.term()).is_ok(), "{}", t.name);
        }
    }

    #[test]
    fn printed_parameters() {
        let g = greek_params(&CUBIC_EXP.term());
        assert_eq!((g.alpha, g.beta, g.gamma), (0, 2, 3));
        assert_eq!((g.phi1, g.phi2, g.phi3), (0, 0, 0));
        assert_eq!((g.degx_c0, g.degy_c0), (3, 3));

        let g = greek_params(&RATIONAL.term());
        assert_eq!((g.alpha, g.beta, g.gamma), (3, -1, 3));
        assert_eq!((g.phi1, g.phi2, g.phi3), (1, 0, 1));
        assert_eq!((g.degx_c0, g.degy_c0, g.delta), (2, 2, 0));
        assert_eq!(g.omega, crate::polyarith::rat::rat(-1));

        let g = greek_params(&RANDOM_SQRT_EXP.term());
        assert_eq!((g.alpha, g.beta, g.gamma), (6, -1, 8));
        assert_eq!(g.omega, crate::polyarith::rat::rat(4));
        assert_eq!((g.delta, g.delta_true), (5, 5));
        assert_eq!((g.phi1, g.phi2, g.phi3), (0, 0, 0));
    }
}
