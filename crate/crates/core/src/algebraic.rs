//! Differential equations for algebraic functions: a root `a(x)` of
//! `m(x, y)` is the residue sum of `y·D_y m / m`, so every telescoper of
//! that rational term annihilates `a`.

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::hyperexp::{HyperexpTerm, TermError};
use crate::polyarith::upoly::{series_inverse, series_mul};
use crate::polyarith::{BiPoly, Rat, Var};
use crate::telescope::{telescope_at, Mode, TelescopeError, TelescopingRelation};

/// Guard band of trailing coefficients ignored by [`annihilates`].
pub const GUARD: usize = 5;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraicError {
    #[error("the polynomial does not involve y")]
    ConstantInY,
    #[error("m(0, a0) = {0}, so a0 is not a root")]
    NotARoot(String),
    #[error("∂m/∂y vanishes at (0, a0): the branch is ramified")]
    RamifiedRoot,
    #[error("series of order {have} is too short; need more than {need}")]
    SeriesTooShort { need: usize, have: usize },
    #[error(transparent)]
    Term(#[from] TermError),
    #[error(transparent)]
    Telescope(#[from] TelescopeError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraicInput {
    pub m: BiPoly,
    pub a0: Rat,
}

impl AlgebraicInput {
    /// Checks `m(0, a0) = 0` and `∂m/∂y(0, a0) ≠ 0`.
    pub fn new(m: BiPoly, a0: Rat) -> Result<Self, AlgebraicError> {
        if m.degree(Var::Y) < 1 {
            return Err(AlgebraicError::ConstantInY);
        }
        let at = |p: &BiPoly| {
            p.eval(Var::X, &Rat::zero())
                .eval(Var::Y, &a0)
                .constant_term()
        };
        let v = at(&m);
        if !v.is_zero() {
            return Err(AlgebraicError::NotARoot(
                crate::polyarith::rat::rat_to_string(&v),
            ));
        }
        if at(&m.diff(Var::Y)).is_zero() {
            return Err(AlgebraicError::RamifiedRoot);
        }
        Ok(AlgebraicInput { m, a0 })
    }

    /// `(deg_x m, deg_y m)`.
    pub fn taus(&self) -> (i64, i64) {
        (self.m.degree(Var::X).max(1), self.m.degree(Var::Y))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TruncatedSeries {
    /// `a_0 … a_N`.
    #[serde(serialize_with = "ser_rats")]
    pub coeffs: Vec<Rat>,
    pub order: usize,
}

fn ser_rats<S: serde::Serializer>(v: &[Rat], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for q in v {
        seq.serialize_element(&crate::polyarith::rat::rat_to_string(q))?;
    }
    seq.end()
}

/// `y·D_y m / m`, i.e. `c0 = y·D_y m`, `a = 0`, `b = 1`, factor `m^{-1}`.
pub fn to_hyperexp(input: &AlgebraicInput) -> Result<HyperexpTerm, AlgebraicError> {
    let dm = input.m.diff(Var::Y);
    if dm.is_zero() {
        return Err(AlgebraicError::ConstantInY);
    }
    let c0 = &BiPoly::y() * &dm;
    Ok(HyperexpTerm::new(
        c0,
        BiPoly::zero(),
        BiPoly::one(),
        vec![(input.m.clone(), -Rat::one())],
    )?)
}

/// The series root `a(x) = a_0 + a_1 x + ⋯ + a_N x^N` with `a(0) = a0`,
/// by Newton iteration with doubling precision.
pub fn series_solve(input: &AlgebraicInput, n: usize) -> TruncatedSeries {
    let my = input.m.diff(Var::Y);
    let mut a = vec![input.a0.clone()];
    let mut prec = 1;
    while prec < n + 1 {
        prec = (2 * prec).min(n + 1);
        a.resize(prec, Rat::zero());
        let f = input.m.compose_y_series(&a, prec);
        let g = my.compose_y_series(&a, prec);
        let step = series_mul(&f, &series_inverse(&g, prec), prec);
        for (ak, sk) in a.iter_mut().zip(step) {
            *ak -= sk;
        }
    }
    a.truncate(n + 1);
    TruncatedSeries {
        coeffs: a,
        order: n,
    }
}

/// The same root by the linearly convergent iteration
/// `a ← a − m(x, a)/m_y(0, a0)`, one coefficient per step.
pub fn series_solve_linear(input: &AlgebraicInput, n: usize) -> TruncatedSeries {
    let my0 = input
        .m
        .diff(Var::Y)
        .eval(Var::X, &Rat::zero())
        .eval(Var::Y, &input.a0)
        .constant_term();
    let mut a = vec![Rat::zero(); n + 1];
    a[0] = input.a0.clone();
    for _ in 0..=n {
        let f = input.m.compose_y_series(&a, n + 1);
        for (ak, fk) in a.iter_mut().zip(f) {
            *ak -= fk / &my0;
        }
    }
    TruncatedSeries {
        coeffs: a,
        order: n,
    }
}

/// Whether `Σ p_i D_x^i` kills the series, judged on the coefficients of
/// index `≤ N − r − GUARD` (the ones the truncation determines exactly,
/// minus the guard band).
pub fn annihilates(p: &[BiPoly], series: &TruncatedSeries) -> Result<bool, AlgebraicError> {
    let r = p.len().saturating_sub(1);
    let d = p
        .iter()
        .map(|pi| pi.degree(Var::X).max(0) as usize)
        .max()
        .unwrap_or(0);
    let need = r + d + GUARD;
    if series.order <= need {
        return Err(AlgebraicError::SeriesTooShort {
            need,
            have: series.order,
        });
    }
    let n = series.order;
    let top = n - r - GUARD;
    let mut out = vec![Rat::zero(); top + 1];
    // D^i a has exact coefficients up to index N − i.
    let mut deriv = series.coeffs.clone();
    for (i, pi) in p.iter().enumerate() {
        if i > 0 {
            deriv = deriv
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rat::from_integer(k.into()))
                .collect();
        }
        for (m, c) in pi.terms() {
            let sh = m.x as usize;
            for (k, o) in out.iter_mut().enumerate().skip(sh) {
                if let Some(v) = deriv.get(k - sh) {
                    *o += c * v;
                }
            }
        }
    }
    Ok(out.iter().all(Zero::is_zero))
}

/// A telescoper of `y·D_y m / m` within the NAIVE ansatz at `(r, d)`.
pub fn algebraic_telescoper(
    input: &AlgebraicInput,
    r: usize,
    d: i64,
) -> Result<Option<TelescopingRelation>, AlgebraicError> {
    let term = to_hyperexp(input)?;
    Ok(telescope_at(&term, r, d, Mode::Naive, None)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyarith::parse_poly;
    use crate::polyarith::rat::{rat, ratio};

    fn input(m: &str, a0: i64) -> AlgebraicInput {
        AlgebraicInput::new(parse_poly(m).unwrap(), rat(a0)).unwrap()
    }

    #[test]
    fn square_root_series() {
        let s = series_solve(&input("y^2 - x - 1", 1), 4);
        assert_eq!(
            s.coeffs,
            vec![
                rat(1),
                ratio(1, 2),
                ratio(-1, 8),
                ratio(1, 16),
                ratio(-5, 128)
            ]
        );
        let g = series_solve(&input("(1 - x)*y - x", 0), 3);
        assert_eq!(g.coeffs, vec![rat(0), rat(1), rat(1), rat(1)]);
    }

    #[test]
    fn newton_matches_linear_iteration() {
        let i = input("y^3 + x*y - 1 - x^2", 1);
        assert_eq!(series_solve(&i, 15), series_solve_linear(&i, 15));
    }

    #[test]
    fn conversion() {
        let t = to_hyperexp(&input("y^2 - x - 1", 1)).unwrap();
        assert_eq!(t.c0, parse_poly("2*y^2").unwrap());
        assert_eq!(t.factors[0].exponent, rat(-1));
        let t = to_hyperexp(&input("y - x", 0)).unwrap();
        assert_eq!(t.c0, parse_poly("y").unwrap());
    }

    #[test]
    fn classical_operator() {
        let s = series_solve(&input("y^2 - x - 1", 1), 20);
        let p = vec![parse_poly("-1").unwrap(), parse_poly("2 + 2*x").unwrap()];
        assert_eq!(annihilates(&p, &s), Ok(true));
        let dx = vec![BiPoly::zero(), BiPoly::one()];
        assert_eq!(annihilates(&dx, &s), Ok(false));
        assert!(matches!(
            annihilates(&p, &series_solve(&input("y^2 - x - 1", 1), 4)),
            Err(_)
        ));
    }

    #[test]
    fn bad_inputs() {
        assert!(matches!(
            AlgebraicInput::new(parse_poly("y^2 - x - 1").unwrap(), rat(2)),
            Err(AlgebraicError::NotARoot(_))
        ));
        assert_eq!(
            AlgebraicInput::new(parse_poly("y^2 - x").unwrap(), rat(0)),
            Err(AlgebraicError::RamifiedRoot)
        );
    }
}
