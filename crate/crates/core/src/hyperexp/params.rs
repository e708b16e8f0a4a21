//! The integer parameters and flags that drive the ansatz shapes and the
//! order/degree bound curve, plus predicted numerator profiles.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::polyarith::rat::{as_nat, falling_factorial, rat};
use crate::polyarith::{BiPoly, Rat, Var};

use super::numerators::{numerators, TermData};
use super::term::HyperexpTerm;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GreekParams {
    pub alpha: i64,
    /// `deg_x a − deg_x b − 1`, clamped below at −1.
    pub beta: i64,
    pub gamma: i64,
    #[serde(serialize_with = "crate::polyarith::rat::ser_rat")]
    pub omega: Rat,
    pub omega_is_nat: bool,
    /// `ω + 1` when `deg_x a ≤ deg_x b` and `ω ∈ ℕ`, else 0.
    pub delta: i64,
    /// The measured degree drop of the `(ω+1)`-st numerator, else 0.
    pub delta_true: i64,
    #[serde(serialize_with = "crate::polyarith::rat::ser_rat")]
    pub eta: Rat,
    pub phi1: u8,
    pub phi2: u8,
    pub phi3: u8,
    pub degx_c0: i64,
    pub degy_c0: i64,
    /// `deg_x a > deg_x b`.
    pub case1: bool,
    /// The constant `lc_x a / lc_x b` when `φ1 = 1`.
    #[serde(serialize_with = "crate::polyarith::rat::ser_opt_rat")]
    pub lc_ratio: Option<Rat>,
}

/// Predicted shape of `N_{r,i}`, the numerator of `(D_x^i h)/h` over `c0 v^r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumeratorProfile {
    pub deg_x_exact: i64,
    pub deg_y_bound: i64,
    pub lc_x: BiPoly,
}

fn deg(p: &BiPoly, v: Var) -> i64 {
    p.degree(v)
}

/// Constant quotient `p / q` when both are polynomials in `y` with `p = c·q`.
fn constant_ratio(p: &BiPoly, q: &BiPoly) -> Option<Rat> {
    if p.is_zero() {
        return Some(Rat::zero());
    }
    let c = p.leading_coeff_glex() / q.leading_coeff_glex();
    if q.scale(&c) == *p {
        Some(c)
    } else {
        None
    }
}

pub fn greek_params(term: &HyperexpTerm) -> GreekParams {
    let data = TermData::new(term);
    greek_params_with(term, &data)
}

pub fn greek_params_with(term: &HyperexpTerm, data: &TermData) -> GreekParams {
    let sb = &data.sqfp_b;
    let sum_cx: i64 = term.factors.iter().map(|f| deg(&f.poly, Var::X)).sum();
    let sum_cy: i64 = term.factors.iter().map(|f| deg(&f.poly, Var::Y)).sum();
    let dxa = deg(&term.a, Var::X);
    let dxb = deg(&term.b, Var::X);
    let alpha = deg(sb, Var::X) + dxb + sum_cx;
    let beta = if term.a.is_zero() {
        -1
    } else {
        (dxa - dxb - 1).max(-1)
    };
    let gamma = deg(sb, Var::Y) + deg(&term.a, Var::Y).max(deg(&term.b, Var::Y)) + sum_cy;
    let degx_c0 = deg(&term.c0, Var::X);
    let degy_c0 = deg(&term.c0, Var::Y);
    let mut omega = rat(degx_c0);
    let mut eta = Rat::zero();
    for f in &term.factors {
        omega += &f.exponent * rat(deg(&f.poly, Var::X));
        eta += &f.exponent * rat(deg(&f.poly, Var::Y));
    }
    let omega_nat = as_nat(&omega);
    let case1 = !term.a.is_zero() && dxa > dxb;

    let lc_ratio = constant_ratio(&term.a.leading_coeff(Var::X), &term.b.leading_coeff(Var::X));
    let phi1 = u8::from(lc_ratio.is_some());
    let phi2 = u8::from(phi1 == 1 && beta == 0);

    let ab_free_of_y =
        (&(&term.a.diff(Var::Y) * &term.b) - &(&term.a * &term.b.diff(Var::Y))).is_zero();
    let powers_ok = term
        .factors
        .iter()
        .all(|f| deg(&f.poly, Var::Y) == 0 || f.exponent.is_integer());
    let row_fits = rat(degy_c0) + &eta + Rat::one() >= Rat::zero();
    let phi3 = u8::from(ab_free_of_y && powers_ok && row_fits);

    let (delta, delta_true) = match omega_nat {
        Some(w) if !case1 => {
            let n = numerators(term, data, (w + 1) as usize);
            let drop = degx_c0 + (w + 1) * (alpha - 1) - n[(w + 1) as usize].degree(Var::X);
            (w + 1, drop)
        }
        _ => (0, 0),
    };

    GreekParams {
        alpha,
        beta,
        gamma,
        omega,
        omega_is_nat: omega_nat.is_some(),
        delta,
        delta_true,
        eta,
        phi1,
        phi2,
        phi3,
        degx_c0,
        degy_c0,
        case1,
        lc_ratio,
    }
}

impl GreekParams {
    pub fn omega_nat(&self) -> Option<i64> {
        if self.omega_is_nat {
            as_nat(&self.omega)
        } else {
            None
        }
    }
}

/// Predicted `deg_x`, `deg_y` bound and `lc_x` of `N_{r,i}`.
///
/// # Panics
/// Panics unless `i ≤ r`.
pub fn numerator_profile(term: &HyperexpTerm, r: usize, i: usize) -> NumeratorProfile {
    assert!(i <= r, "numerator index must not exceed the order");
    let data = TermData::new(term);
    let gp = greek_params_with(term, &data);
    let (ri, ii) = (r as i64, i as i64);
    let lcx = |p: &BiPoly| p.leading_coeff(Var::X);
    let lc_c0 = lcx(&term.c0);
    let lc_b = lcx(&term.b);
    let lc_s = lcx(&data.sqfp_b);
    let lc_prod_c = term
        .factors
        .iter()
        .fold(BiPoly::one(), |acc, f| &acc * &lcx(&f.poly));
    let deg_y_bound = gp.degy_c0 + gp.gamma * ri;
    if gp.case1 {
        let lc_a = lcx(&term.a);
        let scale = rat(gp.beta + 1).pow(ii as i32);
        let lc = &(&(&(&lc_c0 * &lc_a.pow(i as u32)) * &lc_b.pow((r - i) as u32))
            * &lc_s.pow(r as u32))
            * &lc_prod_c.pow(r as u32);
        return NumeratorProfile {
            deg_x_exact: gp.degx_c0 + gp.alpha * ri + gp.beta * ii,
            deg_y_bound,
            lc_x: lc.scale(&scale),
        };
    }
    let lc_v = &(&lc_b * &lc_s) * &lc_prod_c;
    match gp.omega_nat() {
        Some(w) if ii > w => {
            let w1 = (w + 1) as usize;
            let n = numerators(term, &data, w1);
            let lc = &lcx(&n[w1]) * &lc_v.pow((r - w1) as u32);
            let ff = falling_factorial(&rat(-gp.delta_true - 1), ii - (w + 1));
            NumeratorProfile {
                deg_x_exact: gp.degx_c0 + gp.alpha * ri - ii - gp.delta_true,
                deg_y_bound,
                lc_x: lc.scale(&ff),
            }
        }
        _ => NumeratorProfile {
            deg_x_exact: gp.degx_c0 + gp.alpha * ri - ii,
            deg_y_bound,
            lc_x: (&lc_c0 * &lc_v.pow(r as u32)).scale(&falling_factorial(&gp.omega, ii)),
        },
    }
}
