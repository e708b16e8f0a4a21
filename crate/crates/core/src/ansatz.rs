//! Shaped telescoper and certificate ansätze, their variable counts, and the
//! linear system obtained by coefficient comparison.
//!
//! The telescoper `P = Σ p_{i,j} x^j D_x^i` keeps, for each order `i`, the
//! degrees `0..=d_i`. Some shapes add *coupled* unknowns: a single unknown
//! multiplying `c_self·x^{j}D_x^{i} − c_partner·x^{j'}D_x^{i'}`, chosen so
//! that the leading x-coefficients of the two contributions cancel.
//!
//! All contributions are written over the common denominator `c0·v^r` with
//! `v = b·sqfp(b)·∏c`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::exactsolve::{IntSystem, QMatrix};
use crate::hyperexp::{lifted_numerators, GreekParams, HyperexpTerm, TermData};
use crate::polyarith::rat::{falling_factorial, rat};
use crate::polyarith::{BiPoly, Rat, Var};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CaseTag {
    #[serde(rename = "CASE1")]
    Case1,
    #[serde(rename = "CASE2")]
    Case2,
    #[serde(rename = "CASE2P")]
    Case2Prime,
    #[serde(rename = "NAIVE")]
    Naive,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseTag::Case1 => "CASE1",
            CaseTag::Case2 => "CASE2",
            CaseTag::Case2Prime => "CASE2P",
            CaseTag::Naive => "NAIVE",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnsatzError {
    #[error("the order must be at least 1")]
    ZeroOrder,
    #[error("w = {w} is outside the legal range [{lo}, {hi}] for {case}")]
    IllegalW {
        w: i64,
        lo: i64,
        hi: i64,
        case: CaseTag,
    },
    #[error("no legal w for {case} at order {r} and degree {d}")]
    EmptyWRange { case: CaseTag, r: usize, d: i64 },
    #[error("{0} does not apply to this term")]
    CaseMismatch(CaseTag),
    #[error("the certificate x-degree bound is {0}; the degree is too small for this shape")]
    NegativeS1(i64),
}

/// One combined unknown: `self_coeff·x^j D_x^i − partner_coeff·x^{partner_j} D_x^{partner_i}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoupledTerm {
    pub i: usize,
    pub j: i64,
    pub partner_i: usize,
    pub partner_j: i64,
    #[serde(serialize_with = "crate::polyarith::rat::ser_rat")]
    pub self_coeff: Rat,
    #[serde(serialize_with = "crate::polyarith::rat::ser_rat")]
    pub partner_coeff: Rat,
}

impl CoupledTerm {
    /// `partner_coeff / self_coeff`: the partner's coefficient per unit of
    /// the self monomial's coefficient.
    pub fn coupling_coeff(&self) -> Rat {
        &self.partner_coeff / &self.self_coeff
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnsatzShape {
    pub case_tag: CaseTag,
    pub r: usize,
    pub d: i64,
    pub w: i64,
    /// Degree cap per order; −1 means the order is absent.
    pub di: Vec<i64>,
    pub coupled_terms: Vec<CoupledTerm>,
}

impl AnsatzShape {
    pub fn naive(r: usize, d: i64) -> Self {
        AnsatzShape {
            case_tag: CaseTag::Naive,
            r,
            d,
            w: 0,
            di: vec![d; r + 1],
            coupled_terms: Vec::new(),
        }
    }

    /// The plain unknowns `(i, j)`, ordered by `i` then `j`.
    pub fn plain_monomials(&self) -> Vec<(usize, i64)> {
        self.di
            .iter()
            .enumerate()
            .flat_map(|(i, &di)| (0..=di).map(move |j| (i, j)))
            .collect()
    }

    pub fn vars(&self) -> usize {
        self.di.iter().map(|&d| (d + 1) as usize).sum::<usize>() + self.coupled_terms.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateShape {
    pub s1: i64,
    pub s2: i64,
    pub removed_row: Option<i64>,
    pub denom_power: usize,
}

impl CertificateShape {
    /// The y-exponents in use.
    pub fn y_rows(&self) -> Vec<i64> {
        (0..=self.s2)
            .filter(|&j| Some(j) != self.removed_row)
            .collect()
    }

    pub fn vars(&self) -> usize {
        (self.s1 + 1) as usize * self.y_rows().len()
    }
}

fn check_case(params: &GreekParams, case: CaseTag) -> Result<(), AnsatzError> {
    let ok = match case {
        CaseTag::Case1 => params.case1,
        CaseTag::Case2 => !params.case1,
        CaseTag::Case2Prime => !params.case1 && params.omega_nat().is_some(),
        CaseTag::Naive => true,
    };
    if ok {
        Ok(())
    } else {
        Err(AnsatzError::CaseMismatch(case))
    }
}

/// The shaped case for a term: case 1 iff `deg_x a > deg_x b`; otherwise
/// case 2′ when requested, `ω ∈ ℕ`, and its w-range is nonempty at `(r, d)`.
pub fn shaped_case(params: &GreekParams, r: usize, d: i64, prefer_prime: bool) -> CaseTag {
    if params.case1 {
        CaseTag::Case1
    } else if prefer_prime && w_range(params, r, d, CaseTag::Case2Prime).is_ok() {
        CaseTag::Case2Prime
    } else {
        CaseTag::Case2
    }
}

/// Inclusive legal range of `w`.
pub fn w_range(
    params: &GreekParams,
    r: usize,
    d: i64,
    case: CaseTag,
) -> Result<(i64, i64), AnsatzError> {
    if r == 0 {
        return Err(AnsatzError::ZeroOrder);
    }
    check_case(params, case)?;
    let ri = r as i64;
    let (lo, hi) = match case {
        CaseTag::Case1 if params.beta == 0 || params.phi2 == 1 => (0, 0),
        CaseTag::Case1 => (0, ri.min(d.div_euclid(params.beta))),
        CaseTag::Case2 => (0, (d + 1).min(ri + 1)),
        CaseTag::Case2Prime => {
            let w = params.omega_nat().unwrap_or(0);
            (w, (d - params.delta_true + 1).min(ri + 1))
        }
        CaseTag::Naive => (0, 0),
    };
    if lo > hi || d < 0 {
        return Err(AnsatzError::EmptyWRange { case, r, d });
    }
    Ok((lo, hi))
}

/// The preferred `w = γ − 1 + φ₃`, clamped into the legal range.
pub fn optimal_w(
    params: &GreekParams,
    r: usize,
    d: i64,
    case: CaseTag,
) -> Result<i64, AnsatzError> {
    let (lo, hi) = w_range(params, r, d, case)?;
    Ok((params.gamma - 1 + i64::from(params.phi3)).clamp(lo, hi))
}

pub fn telescoper_shape(
    params: &GreekParams,
    r: usize,
    d: i64,
    w: i64,
    case: CaseTag,
) -> Result<AnsatzShape, AnsatzError> {
    let (lo, hi) = w_range(params, r, d, case)?;
    if w < lo || w > hi {
        return Err(AnsatzError::IllegalW { w, lo, hi, case });
    }
    if case == CaseTag::Naive {
        return Ok(AnsatzShape::naive(r, d));
    }
    let ri = r as i64;
    let pos = |x: i64| x.max(0);
    let omega = params.omega_nat().unwrap_or(-1);
    let di: Vec<i64> = (0..=ri)
        .map(|i| {
            let cap = match case {
                CaseTag::Case1 => d - params.beta * pos(w + i - ri) - i64::from(params.phi2),
                CaseTag::Case2 => d - pos(w - i),
                _ => d - pos(w - i) - if i <= omega { params.delta_true } else { 0 },
            };
            cap.max(-1)
        })
        .collect();
    let mut coupled = Vec::new();
    let mut couple = |i: usize, pi: usize, self_coeff: Rat, partner_coeff: Rat| {
        coupled.push(CoupledTerm {
            i,
            j: di[i] + 1,
            partner_i: pi,
            partner_j: di[pi] + 1,
            self_coeff,
            partner_coeff,
        });
    };
    match case {
        CaseTag::Case1 => {
            let ratio = params.lc_ratio.clone();
            if params.phi2 == 1 {
                let c = ratio.expect("φ₂ = 1 implies a constant leading ratio");
                for i in 0..r {
                    couple(i, r, c.pow((r - i) as i32), Rat::one());
                }
            } else if params.beta != 0 {
                if let Some(c) = ratio {
                    let c = c * rat(params.beta + 1);
                    for i in (r as i64 - w + 1).max(0)..ri {
                        let i = i as usize;
                        couple(i, r, c.pow((r - i) as i32), Rat::one());
                    }
                }
            }
        }
        CaseTag::Case2 => {
            for i in 1..w.min(ri + 1) {
                couple(
                    i as usize,
                    0,
                    Rat::one(),
                    falling_factorial(&params.omega, i),
                );
            }
        }
        CaseTag::Case2Prime => {
            for i in 1..=omega.min(ri) {
                couple(
                    i as usize,
                    0,
                    Rat::one(),
                    falling_factorial(&params.omega, i),
                );
            }
            for i in (omega + 2)..w.min(ri + 1) {
                let ff = falling_factorial(&rat(-params.delta_true - 1), i - omega - 1);
                couple(i as usize, (omega + 1) as usize, Rat::one(), ff);
            }
        }
        CaseTag::Naive => unreachable!(),
    }
    Ok(AnsatzShape {
        case_tag: case,
        r,
        d,
        w,
        di,
        coupled_terms: coupled,
    })
}

pub fn certificate_shape(
    params: &GreekParams,
    r: usize,
    d: i64,
    w: i64,
    case: CaseTag,
) -> Result<CertificateShape, AnsatzError> {
    if r == 0 {
        return Err(AnsatzError::ZeroOrder);
    }
    check_case(params, case)?;
    let r1 = r as i64 - 1;
    let base = params.degx_c0 + d;
    let s1 = match case {
        CaseTag::Case1 => {
            base + (params.alpha + params.beta) * r1 - params.beta * w - i64::from(params.phi2) - 1
        }
        CaseTag::Case2 => base + params.alpha * r1 - w,
        CaseTag::Case2Prime => base + params.alpha * r1 - w - params.delta_true,
        CaseTag::Naive if params.case1 => base + (params.alpha + params.beta) * r1 - 1,
        CaseTag::Naive => base + params.alpha * r1,
    };
    if s1 < 0 {
        return Err(AnsatzError::NegativeS1(s1));
    }
    let s2 = params.degy_c0 + params.gamma * r1 + 1;
    let removed_row = if params.phi3 == 1 {
        let row = rat(params.gamma * r1) - &params.eta;
        Some(row)
            .filter(|q| q.is_integer())
            .map(|q| q.to_integer().try_into().unwrap_or(-1i64))
            .filter(|&j| (0..=s2).contains(&j))
    } else {
        None
    };
    Ok(CertificateShape {
        s1,
        s2,
        removed_row,
        denom_power: r - 1,
    })
}

/// Predicted bounds `(deg_x, deg_y)` of the stacked numerator.
pub fn numerator_degree_bounds(params: &GreekParams, shape: &AnsatzShape) -> (i64, i64) {
    let r = shape.r as i64;
    let d = shape.d;
    let w = shape.w;
    let dx = params.degx_c0
        + d
        + match shape.case_tag {
            CaseTag::Case1 => {
                (params.alpha + params.beta) * r - params.beta * w - i64::from(params.phi2)
            }
            CaseTag::Case2 => params.alpha * r - w,
            CaseTag::Case2Prime => params.alpha * r - w - params.delta_true,
            CaseTag::Naive if params.case1 => (params.alpha + params.beta) * r,
            CaseTag::Naive => params.alpha * r,
        };
    (dx, params.degy_c0 + params.gamma * r)
}

/// Telescoper variables as predicted by the closed-form count of each case.
pub fn predicted_telescoper_vars(params: &GreekParams, shape: &AnsatzShape) -> i64 {
    let (r, d, w) = (shape.r as i64, shape.d, shape.w);
    let full = (r + 1) * (d + 1);
    let pos = |x: i64| x.max(0);
    match shape.case_tag {
        CaseTag::Case1 => {
            full - params.beta * w * (w + 1) / 2 + i64::from(params.phi1) * pos(w - 1)
                - i64::from(params.phi2)
        }
        CaseTag::Case2 => full - w * (w + 1) / 2 + pos(w - 1),
        CaseTag::Case2Prime => {
            let om = params.omega_nat().unwrap_or(0);
            full - w * (w + 1) / 2 - params.delta_true * (om + 1) + om + pos(w - om - 2)
        }
        CaseTag::Naive => full,
    }
}

/// `(vars, eqns_bound)`.
pub fn count(shape: &AnsatzShape, cert: &CertificateShape, params: &GreekParams) -> (usize, usize) {
    let vars = shape.vars() + cert.vars();
    let (dx, dy) = numerator_degree_bounds(params, shape);
    (vars, ((dx + 1).max(0) * (dy + 1).max(0)) as usize)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Unknown {
    P { i: usize, j: i64 },
    PCoupled(usize),
    Q { i: i64, j: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RowTag {
    /// Coefficient of `x^x y^y` in the stacked numerator.
    Monomial { x: u32, y: u32 },
    /// Ties a coupling partner monomial to its coupled monomials.
    Coupling { i: usize, j: i64 },
}

/// Sparse column-major system; `matrix()` gives the dense form.
#[derive(Debug, Clone)]
pub struct LinearSystem {
    pub columns: Vec<Vec<(usize, Rat)>>,
    pub col_index: Vec<Unknown>,
    pub row_index: Vec<RowTag>,
    pub p_column_set: Vec<usize>,
}

impl LinearSystem {
    pub fn nrows(&self) -> usize {
        self.row_index.len()
    }

    pub fn ncols(&self) -> usize {
        self.columns.len()
    }

    pub fn matrix(&self) -> QMatrix {
        let mut m = QMatrix::zeros(self.nrows(), self.ncols());
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col {
                m.set(*r, c, v.clone());
            }
        }
        m
    }

    pub fn int_system(&self) -> IntSystem {
        IntSystem::from_columns(self.nrows(), &self.columns)
    }

    pub fn is_p_column(&self, c: usize) -> bool {
        !matches!(self.col_index[c], Unknown::Q { .. })
    }
}

/// `B_j` with `x^i B_j / (c0 v^r) = D_y(x^i y^j h / (c0 v^{r−1})) / h`.
pub fn certificate_numerators(
    data: &TermData,
    r: usize,
    cert: &CertificateShape,
) -> Vec<(i64, BiPoly)> {
    let dyv = data.v.diff(Var::Y);
    let base = &data.t_y - &dyv.scale(&rat(r as i64 - 1));
    cert.y_rows()
        .into_iter()
        .map(|j| {
            let mut b = base.shift(0, j as u32);
            if j > 0 {
                b = &b + &data.v.mul_term(&rat(j), 0, (j - 1) as u32);
            }
            (j, b)
        })
        .collect()
}

struct Columns {
    polys: Vec<BiPoly>,
    tags: Vec<Unknown>,
}

fn q_columns(data: &TermData, r: usize, cert: &CertificateShape, out: &mut Columns) {
    for (j, b) in certificate_numerators(data, r, cert) {
        for i in 0..=cert.s1 {
            out.polys.push(-b.shift(i as u32, 0));
            out.tags.push(Unknown::Q { i, j });
        }
    }
}

fn assemble(cols: Columns, extra_rows: Vec<(RowTag, Vec<(usize, Rat)>)>) -> LinearSystem {
    let mut rows: BTreeMap<(u32, u32), usize> = BTreeMap::new();
    for p in &cols.polys {
        for (m, _) in p.terms() {
            rows.insert((m.x, m.y), 0);
        }
    }
    for (k, v) in rows.values_mut().enumerate() {
        *v = k;
    }
    let mut row_index: Vec<RowTag> = rows
        .keys()
        .map(|&(x, y)| RowTag::Monomial { x, y })
        .collect();
    let mut columns: Vec<Vec<(usize, Rat)>> = cols
        .polys
        .iter()
        .map(|p| {
            p.terms()
                .map(|(m, c)| (rows[&(m.x, m.y)], c.clone()))
                .collect()
        })
        .collect();
    for (tag, entries) in extra_rows {
        let r = row_index.len();
        row_index.push(tag);
        for (c, v) in entries {
            columns[c].push((r, v));
        }
    }
    let p_column_set = cols
        .tags
        .iter()
        .enumerate()
        .filter(|(_, t)| !matches!(t, Unknown::Q { .. }))
        .map(|(c, _)| c)
        .collect();
    LinearSystem {
        columns,
        col_index: cols.tags,
        row_index,
        p_column_set,
    }
}

/// The system with one column per unknown of the shapes (coupled unknowns
/// are single columns).
pub fn build_system(
    term: &HyperexpTerm,
    shape: &AnsatzShape,
    cert: &CertificateShape,
) -> LinearSystem {
    let data = TermData::new(term);
    build_system_with(term, &data, shape, cert)
}

pub fn build_system_with(
    term: &HyperexpTerm,
    data: &TermData,
    shape: &AnsatzShape,
    cert: &CertificateShape,
) -> LinearSystem {
    let n = lifted_numerators(term, data, shape.r);
    let mut cols = Columns {
        polys: Vec::new(),
        tags: Vec::new(),
    };
    for (i, j) in shape.plain_monomials() {
        cols.polys.push(n[i].shift(j as u32, 0));
        cols.tags.push(Unknown::P { i, j });
    }
    for (k, ct) in shape.coupled_terms.iter().enumerate() {
        let a = n[ct.i].mul_term(&ct.self_coeff, ct.j as u32, 0);
        let b = n[ct.partner_i].mul_term(&ct.partner_coeff, ct.partner_j as u32, 0);
        cols.polys.push(&a - &b);
        cols.tags.push(Unknown::PCoupled(k));
    }
    q_columns(data, shape.r, cert, &mut cols);
    assemble(cols, Vec::new())
}

/// Equivalent system with one column per telescoper monomial. Each coupling
/// partner monomial gets a constraint row
/// `p(partner) + Σ coupling_coeff·p(coupled) = 0`; the kernel corresponds
/// one-to-one to that of [`build_system`].
pub fn build_expanded_system(
    term: &HyperexpTerm,
    data: &TermData,
    shape: &AnsatzShape,
    cert: &CertificateShape,
) -> LinearSystem {
    let n = lifted_numerators(term, data, shape.r);
    let mut monos = shape.plain_monomials();
    let mut partners: BTreeMap<(usize, i64), Vec<(usize, i64, Rat)>> = BTreeMap::new();
    for ct in &shape.coupled_terms {
        monos.push((ct.i, ct.j));
        partners
            .entry((ct.partner_i, ct.partner_j))
            .or_default()
            .push((ct.i, ct.j, ct.coupling_coeff()));
    }
    monos.extend(partners.keys().copied());
    monos.sort_unstable();
    monos.dedup();
    let col_of: BTreeMap<(usize, i64), usize> =
        monos.iter().enumerate().map(|(c, &m)| (m, c)).collect();
    let mut cols = Columns {
        polys: Vec::new(),
        tags: Vec::new(),
    };
    for &(i, j) in &monos {
        cols.polys.push(n[i].shift(j as u32, 0));
        cols.tags.push(Unknown::P { i, j });
    }
    q_columns(data, shape.r, cert, &mut cols);
    let extra = partners
        .into_iter()
        .map(|((pi, pj), members)| {
            let mut entries = vec![(col_of[&(pi, pj)], Rat::one())];
            entries.extend(members.into_iter().map(|(i, j, c)| (col_of[&(i, j)], c)));
            entries.retain(|(_, v)| !v.is_zero());
            (RowTag::Coupling { i: pi, j: pj }, entries)
        })
        .collect();
    assemble(cols, extra)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::hyperexp::greek_params;

    #[test]
    fn coupled_shape_with_three_removed_diagonals() {
        let mut gp = greek_params(&corpus::CUBIC_EXP.term());
        gp.beta = 1;
        gp.phi1 = 1;
        gp.phi2 = 0;
        gp.lc_ratio = Some(rat(1));
        let s = telescoper_shape(&gp, 5, 7, 3, CaseTag::Case1).unwrap();
        assert_eq!(s.di, vec![7, 7, 7, 6, 5, 4]);
        let pairs: Vec<_> = s
            .coupled_terms
            .iter()
            .map(|c| (c.i, c.j, c.partner_i, c.partner_j))
            .collect();
        assert_eq!(pairs, vec![(3, 7, 5, 5), (4, 6, 5, 5)]);
        assert_eq!(s.vars(), 44);
        assert_eq!(predicted_telescoper_vars(&gp, &s), 44);
    }

    #[test]
    fn second_family_shape() {
        let mut gp = greek_params(&corpus::RATIONAL.term());
        gp.omega = rat(2);
        gp.omega_is_nat = true;
        gp.delta_true = 3;
        let s = telescoper_shape(&gp, 11, 10, 5, CaseTag::Case2Prime).unwrap();
        assert_eq!(s.di, vec![2, 3, 4, 8, 9, 10, 10, 10, 10, 10, 10, 10]);
        let whites: Vec<_> = s.coupled_terms.iter().map(|c| (c.i, c.j)).collect();
        assert_eq!(whites, vec![(1, 4), (2, 5), (4, 10)]);
        assert_eq!(s.vars() as i64, predicted_telescoper_vars(&gp, &s));
    }

    #[test]
    fn preferred_w() {
        let gp = greek_params(&corpus::CUBIC_EXP.term());
        assert_eq!(optimal_w(&gp, 2, 35, CaseTag::Case1), Ok(2));
        let mut g2 = gp.clone();
        g2.phi2 = 1;
        assert_eq!(optimal_w(&g2, 2, 35, CaseTag::Case1), Ok(0));
        assert!(matches!(
            telescoper_shape(&gp, 2, 35, 5, CaseTag::Case1),
            Err(AnsatzError::IllegalW { .. })
        ));
    }

    #[test]
    fn certificate_table() {
        let gp = greek_params(&corpus::CUBIC_EXP.term());
        let c = certificate_shape(&gp, 2, 35, 2, CaseTag::Case1).unwrap();
        assert_eq!((c.s1, c.s2, c.removed_row), (35, 7, None));
        // The certificate columns reach exactly the telescoper's x-degree bound.
        let t = corpus::CUBIC_EXP.term();
        let s = telescoper_shape(&gp, 2, 35, 2, CaseTag::Case1).unwrap();
        let data = TermData::new(&t);
        let q_top = certificate_numerators(&data, 2, &c)
            .iter()
            .map(|(_, b)| b.degree(Var::X))
            .max()
            .unwrap();
        assert_eq!(c.s1 + q_top, numerator_degree_bounds(&gp, &s).0);
        let gp = greek_params(&corpus::RATIONAL.term());
        let c = certificate_shape(&gp, 3, 54, 0, CaseTag::Naive).unwrap();
        assert_eq!(
            (c.s1, c.s2, c.removed_row, c.denom_power),
            (62, 9, Some(9), 2)
        );
    }

    #[test]
    fn trivial_count() {
        let gp = greek_params(&corpus::RATIONAL.term());
        let s = telescoper_shape(&gp, 1, 0, 0, CaseTag::Case2).unwrap();
        assert_eq!(s.vars(), 2);
    }
}

#[cfg(test)]
mod system_tests {
    use super::*;
    use crate::corpus;
    use crate::hyperexp::greek_params;

    #[test]
    fn naive_rational_system_dimensions() {
        let t = corpus::RATIONAL.term();
        let gp = greek_params(&t);
        let s = telescoper_shape(&gp, 3, 54, 0, CaseTag::Naive).unwrap();
        let c = certificate_shape(&gp, 3, 54, 0, CaseTag::Naive).unwrap();
        let sys = build_system(&t, &s, &c);
        assert_eq!(sys.ncols(), 787);
        assert_eq!(sys.nrows(), 792);
        assert_eq!(count(&s, &c, &gp), (787, 792));
    }
}
