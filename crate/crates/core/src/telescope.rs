//! Finding, verifying and scanning creative telescoping relations
//! `p_0 h + p_1 D_x h + ⋯ + p_r D_x^r h = D_y Q`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::ansatz::{
    build_expanded_system, build_system_with, certificate_shape, optimal_w, shaped_case,
    telescoper_shape, AnsatzError, AnsatzShape, CaseTag, CertificateShape, LinearSystem, Unknown,
};
use crate::bounds::{curve, degree_for_order};
use crate::exactsolve::{first_free_column, first_free_kernel_vector, SolveError};
use crate::hyperexp::{
    derivative_quotients, greek_params_with, GreekParams, HyperexpTerm, TermData,
};
use crate::polyarith::{BiPoly, Rat, RatFun, Var};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Mode {
    /// The case-specific shape with trimmed degree caps and coupled unknowns.
    #[serde(rename = "SHAPED")]
    Shaped,
    /// Every order gets the same degree cap.
    #[serde(rename = "NAIVE")]
    Naive,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TelescopeError {
    #[error(transparent)]
    Ansatz(#[from] AnsatzError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error("order must be at least 1")]
    ZeroOrder,
    #[error("a computed relation failed exact verification")]
    VerificationFailed,
}

/// `Σ p_i D_x^i h = D_y Q` with `Q = q_num·h / (c0·v^{q_denom_power})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TelescopingRelation {
    /// Realized order: `p_r ≠ 0`.
    pub r: usize,
    /// Realized degree: `max_i deg_x p_i`.
    pub d: i64,
    /// `p_0 … p_r`, polynomials in `x` only.
    pub p: Vec<BiPoly>,
    pub q_num: BiPoly,
    pub q_denom_power: usize,
}

impl TelescopingRelation {
    /// Builds a relation, trimming zero trailing coefficients. `None` if
    /// every `p_i` is zero or some `p_i` involves `y`.
    pub fn new(p: Vec<BiPoly>, q_num: BiPoly, q_denom_power: usize) -> Option<Self> {
        let mut p = p;
        while p.last().is_some_and(BiPoly::is_zero) {
            p.pop();
        }
        if p.is_empty() || p.iter().any(|pi| pi.degree(Var::Y) > 0) {
            return None;
        }
        let d = p
            .iter()
            .map(|pi| pi.degree(Var::X))
            .max()
            .unwrap_or(0)
            .max(0);
        Some(TelescopingRelation {
            r: p.len() - 1,
            d,
            p,
            q_num,
            q_denom_power,
        })
    }

    /// Telescoper as text, e.g. `(3*x^3 - 6) + (-2*x)*Dx`.
    pub fn telescoper_string(&self) -> String {
        let parts: Vec<String> = self
            .p
            .iter()
            .enumerate()
            .filter(|(_, pi)| !pi.is_zero())
            .map(|(i, pi)| match i {
                0 => format!("({pi})"),
                1 => format!("({pi})*Dx"),
                _ => format!("({pi})*Dx^{i}"),
            })
            .collect();
        parts.join(" + ")
    }
}

/// Shapes used by `telescope_at` and the feasibility tests.
pub fn shapes_for(
    params: &GreekParams,
    r: usize,
    d: i64,
    mode: Mode,
    w_override: Option<i64>,
) -> Result<(AnsatzShape, CertificateShape), TelescopeError> {
    if r == 0 {
        return Err(TelescopeError::ZeroOrder);
    }
    let case = match mode {
        Mode::Naive => CaseTag::Naive,
        Mode::Shaped => shaped_case(params, r, d, true),
    };
    let w = match w_override {
        Some(w) => w,
        None => optimal_w(params, r, d, case)?,
    };
    let shape = telescoper_shape(params, r, d, w, case)?;
    let cert = certificate_shape(params, r, d, w, case)?;
    Ok((shape, cert))
}

/// Column order: certificate unknowns first, then telescoper unknowns
/// sorted by `key`.
fn order_q_then_p<K: Ord>(sys: &LinearSystem, key: impl Fn(usize, i64) -> Option<K>) -> Vec<usize> {
    let mut q = Vec::new();
    let mut p = Vec::new();
    for (c, u) in sys.col_index.iter().enumerate() {
        match *u {
            Unknown::Q { .. } => q.push(c),
            Unknown::P { i, j } => {
                if let Some(k) = key(i, j) {
                    p.push((k, c));
                }
            }
            Unknown::PCoupled(_) => unreachable!("expanded systems have no coupled columns"),
        }
    }
    p.sort();
    q.extend(p.into_iter().map(|(_, c)| c));
    q
}

/// Whether a relation with a nonzero telescoper exists in the given shape
/// (decided modulo a prime; see the crate documentation).
pub fn is_feasible(
    term: &HyperexpTerm,
    data: &TermData,
    params: &GreekParams,
    r: usize,
    d: i64,
    mode: Mode,
) -> Result<bool, TelescopeError> {
    let (shape, cert) = match shapes_for(params, r, d, mode, None) {
        Ok(s) => s,
        Err(TelescopeError::Ansatz(
            AnsatzError::NegativeS1(_) | AnsatzError::EmptyWRange { .. },
        )) => return Ok(false),
        Err(e) => return Err(e),
    };
    let sys = build_system_with(term, data, &shape, &cert);
    let mut order: Vec<usize> = (0..sys.ncols()).filter(|&c| !sys.is_p_column(c)).collect();
    order.extend(sys.p_column_set.iter().copied());
    let int = sys.int_system();
    Ok(first_free_column(&int, &order, |c| sys.is_p_column(c)).is_some())
}

/// A verified relation within the shapes at `(r, d)`, or `None` when the
/// shapes admit no nonzero telescoper. Among all solutions, the one of
/// least order, then least degree, is returned, scaled so that its first
/// nonzero telescoper coefficient is 1.
pub fn telescope_at(
    term: &HyperexpTerm,
    r: usize,
    d: i64,
    mode: Mode,
    w_override: Option<i64>,
) -> Result<Option<TelescopingRelation>, TelescopeError> {
    let data = TermData::new(term);
    let params = greek_params_with(term, &data);
    let (shape, cert) = shapes_for(&params, r, d, mode, w_override)?;
    let sys = build_expanded_system(term, &data, &shape, &cert);
    let int = sys.int_system();
    let is_p = |c: usize| sys.is_p_column(c);

    let by_order = order_q_then_p(&sys, |i, j| Some((i, j)));
    let Some(f) = first_free_column(&int, &by_order, is_p) else {
        return Ok(None);
    };
    let Unknown::P { i: min_order, .. } = sys.col_index[f] else {
        unreachable!()
    };
    let by_degree = order_q_then_p(&sys, |i, j| (i <= min_order).then_some((j, i)));
    let Some((_, v)) = first_free_kernel_vector(&int, &by_degree, is_p)? else {
        // The two eliminations disagree only for an unlucky prime.
        return Err(TelescopeError::Solve(SolveError::LiftingFailed(0)));
    };
    let rel = assemble_relation(&sys, &v, shape.r, cert.denom_power);
    match rel {
        Some(rel) if verify_relation(term, &rel) => Ok(Some(rel)),
        _ => Err(TelescopeError::VerificationFailed),
    }
}

fn assemble_relation(
    sys: &LinearSystem,
    v: &[Rat],
    r: usize,
    denom_power: usize,
) -> Option<TelescopingRelation> {
    let mut p = vec![BiPoly::zero(); r + 1];
    let mut q = BiPoly::zero();
    let mut lead: Option<((usize, i64), Rat)> = None;
    for (c, val) in v.iter().enumerate() {
        if val.is_zero() {
            continue;
        }
        match sys.col_index[c] {
            Unknown::P { i, j } => {
                p[i] = &p[i] + &BiPoly::monomial(val.clone(), j as u32, 0);
                if lead.as_ref().is_none_or(|(k, _)| (i, j) < *k) {
                    lead = Some(((i, j), val.clone()));
                }
            }
            Unknown::Q { i, j } => q = &q + &BiPoly::monomial(val.clone(), i as u32, j as u32),
            Unknown::PCoupled(_) => unreachable!(),
        }
    }
    let s = Rat::one() / lead?.1;
    let p = p.iter().map(|pi| pi.scale(&s)).collect();
    TelescopingRelation::new(p, q.scale(&s), denom_power)
}

/// Exact check of `Σ p_i (D_x^i h)/h = (D_y Q)/h`. The derivative quotients
/// come from the rational-function recurrence and the y-logarithmic
/// derivative from the term's components, both independent of the
/// numerators used to build the linear systems.
pub fn verify_relation(term: &HyperexpTerm, rel: &TelescopingRelation) -> bool {
    if rel.p.iter().all(BiPoly::is_zero) {
        return false;
    }
    let v = term.v();
    let k = rel.q_denom_power;
    let big_k = rel.r.max(k + 1) as u32;
    let denom = &term.c0.pow(2) * &v.pow(2 * big_k);
    let over =
        |num: &BiPoly, den: &BiPoly| -> Option<BiPoly> { Some(num * &denom.div_exact(den)?) };

    let quotients = derivative_quotients(term, rel.r);
    let mut total = BiPoly::zero();
    for (pi, ri) in rel.p.iter().zip(&quotients) {
        if pi.is_zero() {
            continue;
        }
        match over(&(pi * ri.num()), ri.den()) {
            Some(t) => total = &total + &t,
            None => return false,
        }
    }
    let g = &term.c0 * &v.pow(k as u32);
    let q = &rel.q_num;
    // D_y(q/g) = (q_y g − q g_y)/g²
    let dq = &(&q.diff(Var::Y) * &g) - &(q * &g.diff(Var::Y));
    let Some(t1) = over(&dq, &g.pow(2)) else {
        return false;
    };
    let dl: RatFun = term.dlog(Var::Y);
    let Some(t2) = over(&(q * dl.num()), &(&g * dl.den())) else {
        return false;
    };
    (&(&total - &t1) - &t2).is_zero()
}

/// Least `d ∈ [lo, hi]` with `feasible(d)`, assuming monotonicity, or `None`.
fn least_feasible(
    lo: i64,
    hi: i64,
    mut feasible: impl FnMut(i64) -> Result<bool, TelescopeError>,
) -> Result<Option<i64>, TelescopeError> {
    if hi < lo || !feasible(hi)? {
        return Ok(None);
    }
    let (mut a, mut b) = (lo, hi);
    while a < b {
        let m = a + (b - a) / 2;
        if feasible(m)? {
            b = m;
        } else {
            a = m + 1;
        }
    }
    Ok(Some(a))
}

/// Searches orders `1..=r_max` for the first with a NAIVE relation, trying
/// the guaranteed degree where the bound curve applies and `d_cap`
/// otherwise; then finds the least degree at that order.
pub fn minimal_order_relation(
    term: &HyperexpTerm,
    r_max: usize,
    d_cap: i64,
) -> Result<Option<TelescopingRelation>, TelescopeError> {
    let data = TermData::new(term);
    let params = greek_params_with(term, &data);
    let c = curve(&params);
    for r in 1..=r_max {
        let top = degree_for_order(&c, r as i64).unwrap_or(d_cap);
        let feasible = |d| is_feasible(term, &data, &params, r, d, Mode::Naive);
        if let Some(d) = least_feasible(0, top, feasible)? {
            return telescope_at(term, r, d, Mode::Naive, None);
        }
    }
    Ok(None)
}

/// Empirical feasibility region of the NAIVE ansatz.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegionReport {
    pub r_range: (usize, usize),
    pub d_range: (i64, i64),
    /// Least feasible degree per order (absent: none up to `d_range.1`).
    pub boundary: BTreeMap<usize, Option<i64>>,
}

impl RegionReport {
    pub fn is_feasible(&self, r: usize, d: i64) -> bool {
        self.boundary
            .get(&r)
            .copied()
            .flatten()
            .is_some_and(|b| d >= b)
    }

    /// All feasible points in the window.
    pub fn feasible(&self) -> Vec<(usize, i64)> {
        self.boundary
            .iter()
            .filter_map(|(&r, b)| b.map(|b| (r, b)))
            .flat_map(|(r, b)| (b..=self.d_range.1).map(move |d| (r, d)))
            .collect()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("r,d_min\n");
        for (r, b) in &self.boundary {
            match b {
                Some(d) => out.push_str(&format!("{r},{d}\n")),
                None => out.push_str(&format!("{r},\n")),
            }
        }
        out
    }
}

/// Worker threads for scans: `TELESCOPER_THREADS`, else the available
/// parallelism.
pub fn scan_threads() -> usize {
    if cfg!(target_arch = "wasm32") {
        return 1;
    }
    std::env::var("TELESCOPER_THREADS")
        .ok()
        .and_then(|s| s.parse().ok())
        .filter(|&n: &usize| n > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

/// Least feasible NAIVE degree in `[0, d_max]` for each order in `r_range`.
pub fn region_scan(
    term: &HyperexpTerm,
    r_range: (usize, usize),
    d_max: i64,
) -> Result<RegionReport, TelescopeError> {
    let (r_lo, r_hi) = r_range;
    if r_lo == 0 {
        return Err(TelescopeError::ZeroOrder);
    }
    let data = TermData::new(term);
    let params = greek_params_with(term, &data);
    let column = |r: usize| {
        least_feasible(0, d_max, |d| {
            is_feasible(term, &data, &params, r, d, Mode::Naive)
        })
    };
    let orders: Vec<usize> = (r_lo..=r_hi).collect();
    let threads = scan_threads().min(orders.len()).max(1);
    let results: Vec<(usize, Result<Option<i64>, TelescopeError>)> = if threads == 1 {
        orders.iter().map(|&r| (r, column(r))).collect()
    } else {
        let next = std::sync::atomic::AtomicUsize::new(0);
        let out = std::sync::Mutex::new(Vec::new());
        std::thread::scope(|s| {
            for _ in 0..threads {
                s.spawn(|| loop {
                    let k = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                    let Some(&r) = orders.get(k) else { break };
                    let res = column(r);
                    out.lock().expect("scan results lock").push((r, res));
                });
            }
        });
        out.into_inner().expect("scan results lock")
    };
    let mut boundary = BTreeMap::new();
    for (r, res) in results {
        boundary.insert(r, res?);
    }
    Ok(RegionReport {
        r_range,
        d_range: (0, d_max),
        boundary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::polyarith::parse_poly;

    #[test]
    fn sqrt_exp_relation() {
        let t = corpus::SQRT_EXP.term();
        let rel = telescope_at(&t, 1, 3, Mode::Naive, None).unwrap().unwrap();
        assert_eq!(rel.r, 1);
        // (3x³ − 6) − 2x·D_x, scaled so that the constant term of p_0 is 1.
        let s = Rat::new((-1).into(), 6.into());
        assert_eq!(rel.p[0], parse_poly("3*x^3 - 6").unwrap().scale(&s));
        assert_eq!(rel.p[1], parse_poly("-2*x").unwrap().scale(&s));
        assert!(verify_relation(&t, &rel));
        let mut bad = rel.clone();
        bad.p[0] = &bad.p[0] + &BiPoly::one();
        assert!(!verify_relation(&t, &bad));
    }

    #[test]
    fn no_relation_far_below_curve() {
        let t = corpus::RATIONAL.term();
        assert_eq!(telescope_at(&t, 3, 10, Mode::Naive, None).unwrap(), None);
        assert_eq!(telescope_at(&t, 1, 10, Mode::Naive, None).unwrap(), None);
    }

    #[test]
    fn all_zero_telescoper_rejected() {
        assert!(TelescopingRelation::new(vec![BiPoly::zero(); 3], BiPoly::one(), 0).is_none());
    }
}
