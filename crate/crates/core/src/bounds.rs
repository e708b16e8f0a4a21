//! Order/degree bound curves, extremal orders and degrees, and the
//! cost/size metrics with their integer optimizers.
//!
//! A relation of order `r` and degree `d` is guaranteed whenever
//! `r ≥ ψ + 1` and `d > (ϑ r + φ)/(r − ψ)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use serde::Serialize;
use thiserror::Error;

use crate::ansatz::CaseTag;
use crate::hyperexp::GreekParams;
use crate::polyarith::rat::{rat, ratio};
use crate::polyarith::Rat;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("order {r} is at or below the pole ψ = {psi} of the curve")]
    OrderAtPole { r: i64, psi: i64 },
    #[error("order cap {cap} is below the minimal order {min}")]
    CapTooSmall { cap: i64, min: i64 },
    #[error("parameter must be positive")]
    NonPositive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundCurve {
    pub psi: i64,
    pub vartheta: i64,
    pub varphi: i64,
    pub varphi_prime: Option<i64>,
    pub case_tag: CaseTag,
}

impl BoundCurve {
    /// The smaller of `φ` and `φ′`; both give valid guarantees, and `φ′`
    /// exceeds `φ` by one when `γ − 2 + φ₃ = ω`.
    pub fn effective_varphi(&self) -> i64 {
        self.varphi_prime
            .map_or(self.varphi, |p| p.min(self.varphi))
    }

    /// The real curve `(ϑ r + φ*)/(r − ψ)`.
    pub fn value_at(&self, r: i64) -> Result<Rat, BoundsError> {
        if r <= self.psi {
            return Err(BoundsError::OrderAtPole { r, psi: self.psi });
        }
        Ok(ratio(
            self.vartheta * r + self.effective_varphi(),
            r - self.psi,
        ))
    }
}

fn pos(x: i64) -> i64 {
    x.max(0)
}

fn exact_int(q: Rat) -> i64 {
    assert!(q.is_integer(), "bound coefficient {q} is not an integer");
    i64::try_from(q.to_integer()).expect("bound coefficient fits in i64")
}

pub fn curve(params: &GreekParams) -> BoundCurve {
    let (a, b, g) = (params.alpha, params.beta, params.gamma);
    let (p1, p2, p3) = (
        i64::from(params.phi1),
        i64::from(params.phi2),
        i64::from(params.phi3),
    );
    let (dx, dy) = (params.degx_c0, params.degy_c0);
    let k = g - 2 + p3;
    let psi = k;
    if params.case1 {
        let vartheta = (a + b) * (2 * g - 1 + p3) + g - 1;
        let tail = rat((1 - p2) * pos(k)) * (rat(p1) + ratio(b * (g - 1 + p3), 2));
        let varphi = exact_int(rat(dx + (a + b + 1) * dy + k * (dx - a - b - p2)) - tail);
        return BoundCurve {
            psi,
            vartheta,
            varphi,
            varphi_prime: None,
            case_tag: CaseTag::Case1,
        };
    }
    let vartheta = a * (2 * g - 1 + p3) - 1;
    let varphi = exact_int(rat(dx + a * dy + k * (dx + 1 - a)) - ratio(pos(k) * (g + 1 + p3), 2));
    let varphi_prime = params
        .omega_nat()
        .filter(|&w| g - 1 + p3 > w)
        .map(|w| varphi - (w + 1) * (k - w) + 1);
    BoundCurve {
        psi,
        vartheta,
        varphi,
        varphi_prime,
        case_tag: CaseTag::Case2,
    }
}

/// Least integer `d` with `d > (ϑ r + φ*)/(r − ψ)`, `φ* = min(φ, φ′)`.
pub fn degree_for_order(curve: &BoundCurve, r: i64) -> Result<i64, BoundsError> {
    let q = curve.value_at(r)?;
    Ok(i64::try_from(q.floor().to_integer()).expect("degree fits") + 1)
}

/// `(ψ + 1, ϑ + 1)`: the smallest order and the limiting degree.
pub fn extremal_corollary(params: &GreekParams) -> (i64, i64) {
    let c = curve(params);
    (c.psi + 1, c.vartheta + 1)
}

/// Certificate x-degree bound under the default choice of `w`
/// (`w = γ − 1 + φ₃`, or 0 when `φ₂ = 1`; `δ = ω + 1` when `φ′` applies).
pub fn theorem_s1(params: &GreekParams, r: i64, d: i64) -> i64 {
    let (a, b, g) = (params.alpha, params.beta, params.gamma);
    let p3 = i64::from(params.phi3);
    let base = params.degx_c0 + d;
    if params.case1 {
        let p2 = i64::from(params.phi2);
        let w = if p2 == 1 { 0 } else { g - 1 + p3 };
        return base + (a + b) * (r - 1) - b * w - p2 - 1;
    }
    let w = g - 1 + p3;
    let prime = params.omega_nat().filter(|&om| w > om);
    base + a * (r - 1) - w - prime.map_or(0, |om| om + 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Metrics {
    #[serde(serialize_with = "crate::polyarith::rat::ser_rat")]
    pub cost: Rat,
    #[serde(serialize_with = "crate::polyarith::rat::ser_rat")]
    pub size_pq: Rat,
    #[serde(serialize_with = "crate::polyarith::rat::ser_rat")]
    pub size_p: Rat,
    #[serde(serialize_with = "crate::polyarith::rat::ser_rat")]
    pub rec_order: Rat,
}

/// Cost `C`, total size `S`, telescoper size `T` and recurrence order `R`
/// at `(r, d)`. `d` may be rational (used when minimizing along the curve).
pub fn metrics_rat(params: &GreekParams, r: i64, d: &Rat) -> Metrics {
    let g = params.gamma;
    let p3 = i64::from(params.phi3);
    let s1 = rat(theorem_s1(params, r, 0)) + d;
    let cube = rat(params.degy_c0 + (g + 1) * r - g - p3 + 3).pow(3);
    let rr = rat(r);
    let t = (&rr + rat(1)) * (d + rat(1));
    Metrics {
        cost: &s1 * cube,
        size_pq: &t + (&s1 + rat(1)) * rat(params.degx_c0 + g * (r - 1) + 2),
        size_p: t,
        rec_order: rr + d,
    }
}

pub fn metrics(params: &GreekParams, r: i64, d: i64) -> Metrics {
    metrics_rat(params, r, &rat(d))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Metric {
    #[serde(rename = "ORDER")]
    Order,
    #[serde(rename = "COST")]
    Cost,
    #[serde(rename = "SIZE_PQ")]
    SizePq,
    #[serde(rename = "SIZE_P")]
    SizeP,
    #[serde(rename = "REC_ORDER")]
    RecOrder,
    #[serde(rename = "DEGREE")]
    Degree,
}

impl Metric {
    pub const ALL: [Metric; 6] = [
        Metric::Order,
        Metric::Cost,
        Metric::SizePq,
        Metric::SizeP,
        Metric::RecOrder,
        Metric::Degree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Metric::Order => "ORDER",
            Metric::Cost => "COST",
            Metric::SizePq => "SIZE_PQ",
            Metric::SizeP => "SIZE_P",
            Metric::RecOrder => "REC_ORDER",
            Metric::Degree => "DEGREE",
        }
    }

    pub fn parse(s: &str) -> Option<Metric> {
        let u = s.to_ascii_uppercase().replace('-', "_");
        Metric::ALL.into_iter().find(|m| m.name() == u)
    }

    fn pick(self, m: &Metrics, r: i64, d: &Rat) -> Rat {
        match self {
            Metric::Order => rat(r),
            Metric::Cost => m.cost.clone(),
            Metric::SizePq => m.size_pq.clone(),
            Metric::SizeP => m.size_p.clone(),
            Metric::RecOrder => m.rec_order.clone(),
            Metric::Degree => d.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MetricReport {
    pub metric: Metric,
    pub r_opt: i64,
    pub d_opt: i64,
    #[serde(serialize_with = "crate::polyarith::rat::ser_rat")]
    pub value: Rat,
}

/// `τ = max{α, γ, deg_x c0, deg_y c0}`.
pub fn tau(params: &GreekParams) -> i64 {
    params
        .alpha
        .max(params.gamma)
        .max(params.degx_c0)
        .max(params.degy_c0)
        .max(1)
}

/// `max(4ψ + 8, 2·hint)` with the asymptotic recommendation as hint.
pub fn default_r_cap(params: &GreekParams, metric: Metric) -> i64 {
    let psi = curve(params).psi;
    let hint = asymptotic_choice(tau(params), metric)
        .unwrap_or(1)
        .min(4096);
    (4 * psi + 8).max(2 * hint).max(psi + 1)
}

/// Minimizes `metric` over integer orders `r ∈ [ψ+1, r_cap]`.
///
/// Orders are compared along the curve `d(r) = (ϑr + φ*)/(r − ψ) + 1`
/// (ties go to the smaller order); the report then carries the integer
/// degree `degree_for_order(r_opt)` and the metric value there.
pub fn optimize_metric(
    params: &GreekParams,
    metric: Metric,
    r_cap: i64,
) -> Result<MetricReport, BoundsError> {
    let c = curve(params);
    let lo = c.psi + 1;
    if r_cap < lo {
        return Err(BoundsError::CapTooSmall {
            cap: r_cap,
            min: lo,
        });
    }
    let mut best: Option<(Rat, i64)> = None;
    for r in lo..=r_cap {
        let d = c.value_at(r)? + rat(1);
        let v = metric.pick(&metrics_rat(params, r, &d), r, &d);
        if best.as_ref().is_none_or(|(bv, _)| v < *bv) {
            best = Some((v, r));
        }
        if metric == Metric::Order {
            break;
        }
    }
    let r_opt = best.expect("nonempty scan").1;
    let d_opt = degree_for_order(&c, r_opt)?;
    let value = metric.pick(&metrics(params, r_opt, d_opt), r_opt, &rat(d_opt));
    Ok(MetricReport {
        metric,
        r_opt,
        d_opt,
        value,
    })
}

/// Nearest integer to `(a + √b)/c` for `b ≥ 0`, `c > 0`, computed as
/// `⌊(2a + ⌊√(4b)⌋ + c)/(2c)⌋`.
fn round_quadratic(a: i64, b: i64, c: i64) -> i64 {
    let num = BigInt::from(2 * a) + BigInt::from(4 * b).sqrt() + BigInt::from(c);
    i64::try_from(num.div_floor(&BigInt::from(2 * c))).expect("fits")
}

/// Recommended order for large `τ` (nearest integer to the leading term).
pub fn asymptotic_choice(tau: i64, metric: Metric) -> Result<i64, BoundsError> {
    if tau < 1 {
        return Err(BoundsError::NonPositive);
    }
    Ok(match metric {
        Metric::Order => tau,
        // ¼(1+√17)τ = (τ + √(17τ²))/4
        Metric::Cost => round_quadratic(tau, 17 * tau * tau, 4),
        // ½(1+√5)τ
        Metric::SizePq => round_quadratic(tau, 5 * tau * tau, 2),
        Metric::SizeP => 2 * tau,
        // √2·τ^{3/2} = √(2τ³)
        Metric::RecOrder => round_quadratic(0, 2 * tau * tau * tau, 1),
        Metric::Degree => 2 * tau * tau * tau,
    })
}

/// Least integer `≥ √n` for `n ≥ 0`.
fn ceil_sqrt(n: &BigInt) -> BigInt {
    let s = n.sqrt();
    if &s * &s == *n {
        s
    } else {
        s + 1
    }
}

/// Order/degree pairs for algebraic functions with `deg_x m = τ_x`,
/// `deg_y m = τ_y`: a differential equation of minimal order, one of
/// order `2τ_y`, and the recurrence `(order, degree)` of least total size.
pub fn algebraic_size_formulas(tau_x: i64, tau_y: i64) -> Result<[(i64, i64); 3], BoundsError> {
    if tau_x < 1 || tau_y < 1 {
        return Err(BoundsError::NonPositive);
    }
    let (tx, ty) = (tau_x, tau_y);
    // 2τxτy² − ½τy² + τxτy − (3/2)τy + τx + 3
    let d1 = exact_int(rat(2 * tx * ty * ty + tx * ty + tx + 3) - ratio(ty * ty + 3 * ty, 2));
    // 4τxτy − ½τy − 3τx − 1 + ⌈4(τx+1)/(τy+1)⌉, rounded up when half-integral
    let d2q = rat(4 * tx * ty - 3 * tx - 1) - ratio(ty, 2) + rat(ceil_div(4 * (tx + 1), ty + 1));
    let d2 = i64::try_from(d2q.ceil().to_integer()).expect("fits");
    let disc = BigInt::from((8 * ty * ty - 4 * ty + 4) * tx - 2 * ty * ty - 6 * ty + 12);
    assert!(
        !disc.is_negative(),
        "discriminant is nonnegative for positive τ"
    );
    let r3 = BigInt::from(2 * tx * ty + ty - 1) + ceil_sqrt(&disc);
    // ⌈τy − 1 + ½√D⌉ = τy − 1 + least k with 4k² ≥ D
    let mut k = disc.sqrt() / 2u32;
    while BigInt::from(4u32) * &k * &k < disc {
        k += 1;
    }
    let d3 = BigInt::from(ty - 1) + k;
    Ok([
        (ty, d1),
        (2 * ty, d2),
        (
            i64::try_from(r3).expect("fits"),
            i64::try_from(d3).expect("fits"),
        ),
    ])
}

fn ceil_div(a: i64, b: i64) -> i64 {
    Integer::div_ceil(&a, &b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::hyperexp::greek_params;

    fn curve_of(t: &corpus::NamedTerm) -> BoundCurve {
        curve(&greek_params(&t.term()))
    }

    #[test]
    fn corpus_curves() {
        let c = curve_of(&corpus::CUBIC_EXP);
        assert_eq!(
            (c.psi, c.vartheta, c.varphi, c.varphi_prime),
            (1, 12, 11, None)
        );
        let c = curve_of(&corpus::EXP_OVER_QUADRATIC);
        assert_eq!((c.psi, c.vartheta, c.effective_varphi()), (2, 24, -9));
        let c = curve_of(&corpus::RATIONAL);
        assert_eq!((c.psi, c.vartheta, c.effective_varphi()), (2, 17, 3));
        let c = curve_of(&corpus::SQRT_SEXTIC);
        assert_eq!(
            (c.psi, c.vartheta, c.varphi, c.varphi_prime),
            (4, 21, -18, Some(-23))
        );
        let c = curve_of(&corpus::RANDOM_SQRT_EXP);
        assert_eq!((c.psi, c.vartheta, c.varphi_prime), (6, 89, Some(-40)));
    }

    #[test]
    fn degrees_along_curve() {
        let c = curve_of(&corpus::RANDOM_SQRT_EXP);
        assert_eq!(degree_for_order(&c, 7), Ok(584));
        assert!(degree_for_order(&c, 6).is_err());
        let c = curve_of(&corpus::RATIONAL);
        assert_eq!(degree_for_order(&c, 3), Ok(55));
        let gp = greek_params(&corpus::CUBIC_EXP.term());
        assert_eq!(extremal_corollary(&gp), (2, 13));
        let gp = greek_params(&corpus::RANDOM_SQRT_EXP.term());
        assert_eq!(extremal_corollary(&gp), (7, 90));
    }

    #[test]
    fn cost_specialization() {
        let gp = greek_params(&corpus::RANDOM_SQRT_EXP.term());
        for (r, d) in [(7, 584), (8, 300), (12, 100)] {
            let m = metrics(&gp, r, d);
            assert_eq!(m.cost, rat((6 * r + d - 16) * (9 * r - 3).pow(3)));
            assert_eq!(m.rec_order, rat(r + d));
        }
        assert_eq!(metrics(&gp, 1, 0).size_p, rat(2));
    }

    #[test]
    fn optimizers() {
        let gp = greek_params(&corpus::RANDOM_SQRT_EXP.term());
        let r = |m| {
            optimize_metric(&gp, m, default_r_cap(&gp, m))
                .unwrap()
                .r_opt
        };
        assert_eq!(r(Metric::Cost), 8);
        assert_eq!(r(Metric::SizePq), 10);
        assert_eq!(r(Metric::SizeP), 12);
        assert_eq!(r(Metric::RecOrder), 28);
        assert_eq!(r(Metric::Order), 7);
    }

    #[test]
    fn asymptotic_orders() {
        assert_eq!(asymptotic_choice(8, Metric::Cost), Ok(10));
        assert_eq!(asymptotic_choice(1, Metric::Order), Ok(1));
        assert_eq!(asymptotic_choice(4, Metric::RecOrder), Ok(11));
        assert_eq!(asymptotic_choice(10, Metric::SizePq), Ok(16));
    }

    #[test]
    fn algebraic_pairs() {
        assert_eq!(algebraic_size_formulas(1, 2), Ok([(2, 9), (4, 6), (10, 4)]));
    }
}
