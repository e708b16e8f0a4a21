//! Helpers shared by the integration tests.
#![allow(dead_code)]

use proptest::prelude::*;
use telescoper::hyperexp::{validate, HyperexpTerm};
use telescoper::polyarith::rat::{parse_rat, rat, ratio};
use telescoper::polyarith::{gcd_poly, parse_poly, BiPoly, Rat};

pub fn poly(s: &str) -> BiPoly {
    parse_poly(s).unwrap_or_else(|e| panic!("{s}: {e}"))
}

pub fn term(c0: &str, a: &str, b: &str, factors: &[(&str, &str)]) -> HyperexpTerm {
    HyperexpTerm::new(
        poly(c0),
        poly(a),
        poly(b),
        factors
            .iter()
            .map(|(p, e)| (poly(p), parse_rat(e).unwrap()))
            .collect(),
    )
    .unwrap()
}

/// Small terms with fixed arbitrary coefficients, two per shape family:
/// exponential-dominant (`deg_x a > deg_x b`), exponential-subdominant or
/// radical, and pure power products with integral `ω`.
pub fn small_terms() -> Vec<(&'static str, HyperexpTerm)> {
    vec![
        (
            "exp-dominant-1",
            term("x + 2*y + 1", "x^2*y + y^2", "1", &[]),
        ),
        (
            "exp-dominant-2",
            term("3*x*y + 1", "x^2 + x*y", "x + y + 1", &[]),
        ),
        (
            "radical-1",
            term("x*y + 1", "0", "1", &[("x + y^2 + 2", "1/3")]),
        ),
        ("exp-subdominant", term("y^2 + x", "y", "x + 1", &[])),
        (
            "integral-omega-1",
            term("x^2 + y", "0", "1", &[("x + y^2 + 1", "-1")]),
        ),
        (
            "integral-omega-2",
            term("x^3 + x*y + 2", "0", "1", &[("x*y + x + y^2", "-1")]),
        ),
    ]
}

/// Random polynomial of bidegree at most `(dx, dy)` with small integer
/// coefficients; may be zero.
pub fn arb_poly(dx: u32, dy: u32) -> impl Strategy<Value = BiPoly> {
    proptest::collection::vec(-4i64..=4, ((dx + 1) * (dy + 1)) as usize).prop_map(move |cs| {
        BiPoly::from_terms(
            cs.into_iter()
                .enumerate()
                .map(|(k, c)| ((k as u32) / (dy + 1), (k as u32) % (dy + 1), rat(c))),
        )
    })
}

pub fn arb_nonzero_poly(dx: u32, dy: u32) -> impl Strategy<Value = BiPoly> {
    arb_poly(dx, dy).prop_filter("nonzero", |p| !p.is_zero())
}

pub fn arb_exponent() -> impl Strategy<Value = Rat> {
    prop_oneof![
        Just(ratio(1, 2)),
        Just(ratio(-1, 2)),
        Just(ratio(1, 3)),
        Just(ratio(-2, 3)),
        Just(rat(-1)),
        Just(ratio(5, 4)),
    ]
}

/// Random terms that pass validation, with at most two small factors.
pub fn arb_term() -> impl Strategy<Value = HyperexpTerm> {
    (
        arb_nonzero_poly(2, 1),
        arb_poly(2, 1),
        prop_oneof![Just(BiPoly::one()), arb_nonzero_poly(1, 1)],
        proptest::collection::vec((arb_nonzero_poly(1, 1), arb_exponent()), 0..=2),
    )
        .prop_filter_map("valid term", |(c0, a, b, fs)| {
            let fs: Vec<_> = fs.into_iter().filter(|(p, _)| !p.is_constant()).collect();
            let t = HyperexpTerm::new(c0, a, b, fs).ok()?;
            validate(&t).ok()?;
            Some(t)
        })
}

/// Random terms for which the sharp degree predictions apply: square-free,
/// pairwise coprime factors, and `a/b` in lowest terms.
pub fn arb_conforming_term() -> impl Strategy<Value = HyperexpTerm> {
    arb_term().prop_filter("conforming", |t| {
        validate(t).is_ok_and(|w| w.is_empty())
            && gcd_poly(&t.a, &t.b).is_constant()
            && t.factors
                .iter()
                .all(|f| gcd_poly(&f.poly, &t.b).is_constant())
    })
}

/// Random conforming terms spread over the shaped cases: power products
/// (`a = 0`, often with integral `ω`), and exponentials whose leading
/// x-coefficient ratio is constant (coupled exponential shapes).
pub fn arb_shaped_term() -> impl Strategy<Value = HyperexpTerm> {
    let power_product = (
        arb_nonzero_poly(2, 2),
        proptest::collection::vec(
            (
                arb_nonzero_poly(1, 2),
                prop_oneof![Just(rat(-1)), arb_exponent()],
            ),
            1..=2,
        ),
    )
        .prop_filter_map("valid power product", |(c0, fs)| {
            let fs: Vec<_> = fs.into_iter().filter(|(p, _)| !p.is_constant()).collect();
            HyperexpTerm::new(c0, BiPoly::zero(), BiPoly::one(), fs).ok()
        });
    let constant_ratio = (
        arb_nonzero_poly(1, 1),
        1i64..=3,
        1u32..=2,
        arb_poly(1, 2),
        arb_poly(0, 1),
    )
        .prop_filter_map("valid exponential", |(c0, k, m, lower, b_low)| {
            let a = &BiPoly::monomial(rat(k), m + 1, 0) + &lower;
            let b = &BiPoly::monomial(rat(1), 1, 0) + &b_low;
            HyperexpTerm::new(c0, a, b, vec![]).ok()
        });
    prop_oneof![power_product, constant_ratio].prop_filter("conforming", |t| {
        validate(t).is_ok_and(|w| w.is_empty())
            && gcd_poly(&t.a, &t.b).is_constant()
            && t.factors
                .iter()
                .all(|f| gcd_poly(&f.poly, &t.b).is_constant())
    })
}
