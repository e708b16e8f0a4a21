//! Sparse bivariate polynomials in `x` and `y` over the rationals.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rat::{rat, Rat};

/// Sentinel degree of the zero polynomial. Chosen far from `i64::MIN` so
/// that adding a handful of degrees never overflows.
pub const MINUS_INFINITY: i64 = i64::MIN / 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Y,
}

/// Exponent pair `x^x y^y`, ordered graded-lexicographically
/// (total degree first, then the power of `x`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, y: 0 };

    pub fn new(x: u32, y: u32) -> Self {
        Monomial { x, y }
    }

    pub fn total(&self) -> u32 {
        self.x + self.y
    }

    pub fn exp(&self, var: Var) -> u32 {
        match var {
            Var::X => self.x,
            Var::Y => self.y,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.x <= other.x && self.y <= other.y
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total().cmp(&other.total()).then(self.x.cmp(&other.x))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in `Q[x, y]` stored as a map from monomials to nonzero
/// coefficients. Equality is structural, which is mathematical equality
/// because zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<Monomial, Rat>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        BiPoly::monomial(c, 0, 0)
    }

    pub fn from_int(c: i64) -> Self {
        BiPoly::constant(rat(c))
    }

    pub fn x() -> Self {
        BiPoly::monomial(Rat::one(), 1, 0)
    }

    pub fn y() -> Self {
        BiPoly::monomial(Rat::one(), 0, 1)
    }

    pub fn var(v: Var) -> Self {
        match v {
            Var::X => BiPoly::x(),
            Var::Y => BiPoly::y(),
        }
    }

    pub fn monomial(c: Rat, x: u32, y: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::new(x, y), c);
        }
        BiPoly { terms }
    }

    /// Builds a polynomial from arbitrary `(x, y, coeff)` triples, summing
    /// duplicates and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (u32, u32, Rat)>>(items: I) -> Self {
        let mut p = BiPoly::zero();
        for (x, y, c) in items {
            p.add_term(Monomial::new(x, y), c);
        }
        p
    }

    /// Univariate polynomial in `var` from ascending coefficients.
    pub fn from_univariate(coeffs: &[Rat], var: Var) -> Self {
        BiPoly::from_terms(coeffs.iter().enumerate().map(|(k, c)| match var {
            Var::X => (k as u32, 0, c.clone()),
            Var::Y => (0, k as u32, c.clone()),
        }))
    }

    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| *m == Monomial::ONE)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, x: u32, y: u32) -> Rat {
        self.terms
            .get(&Monomial::new(x, y))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    /// Constant term value, zero if absent.
    pub fn constant_term(&self) -> Rat {
        self.coeff(0, 0)
    }

    /// Largest exponent of `var`, or [`MINUS_INFINITY`] for zero.
    pub fn degree(&self, var: Var) -> i64 {
        self.terms
            .keys()
            .map(|m| m.exp(var) as i64)
            .max()
            .unwrap_or(MINUS_INFINITY)
    }

    pub fn total_degree(&self) -> i64 {
        self.terms
            .keys()
            .next_back()
            .map(|m| m.total() as i64)
            .unwrap_or(MINUS_INFINITY)
    }

    /// Leading term under graded-lex order.
    pub fn leading_term(&self) -> Option<(Monomial, &Rat)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    pub fn leading_coeff_glex(&self) -> Rat {
        self.leading_term()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rat::zero)
    }

    /// Coefficient of `var^k` as a polynomial in the other variable.
    pub fn coeff_of(&self, var: Var, k: u32) -> BiPoly {
        let mut out = BiPoly::zero();
        for (m, c) in &self.terms {
            if m.exp(var) == k {
                let rest = match var {
                    Var::X => Monomial::new(0, m.y),
                    Var::Y => Monomial::new(m.x, 0),
                };
                out.terms.insert(rest, c.clone());
            }
        }
        out
    }

    /// Coefficient of the top power of `var`; zero for the zero polynomial.
    pub fn leading_coeff(&self, var: Var) -> BiPoly {
        let d = self.degree(var);
        if d < 0 {
            return BiPoly::zero();
        }
        self.coeff_of(var, d as u32)
    }

    pub fn scale(&self, c: &Rat) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn shift(&self, dx: u32, dy: u32) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (Monomial::new(m.x + dx, m.y + dy), v.clone()))
                .collect(),
        }
    }

    pub fn mul_term(&self, c: &Rat, dx: u32, dy: u32) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (Monomial::new(m.x + dx, m.y + dy), v * c))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> BiPoly {
        let mut acc = BiPoly::one();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative.
    pub fn diff(&self, var: Var) -> BiPoly {
        let mut out = BiPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exp(var);
            if e == 0 {
                continue;
            }
            let nm = match var {
                Var::X => Monomial::new(m.x - 1, m.y),
                Var::Y => Monomial::new(m.x, m.y - 1),
            };
            out.terms.insert(nm, c * rat(e as i64));
        }
        out
    }

    /// Exact division; `None` when `d` does not divide `self` or `d = 0`.
    pub fn div_exact(&self, d: &BiPoly) -> Option<BiPoly> {
        let (dm, dc) = d.leading_term()?;
        if self.is_zero() {
            return Some(BiPoly::zero());
        }
        if d.terms.len() == 1 {
            let inv = Rat::one() / dc;
            let mut out = BiPoly::zero();
            for (m, c) in &self.terms {
                if !dm.divides(m) {
                    return None;
                }
                out.terms
                    .insert(Monomial::new(m.x - dm.x, m.y - dm.y), c * &inv);
            }
            return Some(out);
        }
        let inv = Rat::one() / dc;
        let mut rem = self.clone();
        let mut quot = BiPoly::zero();
        while let Some((rm, rc)) = rem.leading_term() {
            if !dm.divides(&rm) {
                return None;
            }
            let qm = Monomial::new(rm.x - dm.x, rm.y - dm.y);
            let qc = rc * &inv;
            for (m, c) in &d.terms {
                rem.add_term(Monomial::new(m.x + qm.x, m.y + qm.y), -(c * &qc));
            }
            quot.terms.insert(qm, qc);
        }
        Some(quot)
    }

    /// Evaluates `var := value`, leaving a polynomial in the other variable.
    pub fn eval(&self, var: Var, value: &Rat) -> BiPoly {
        let mut out = BiPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exp(var);
            let v = c * num_traits::pow::pow(value.clone(), e as usize);
            let rest = match var {
                Var::X => Monomial::new(0, m.y),
                Var::Y => Monomial::new(m.x, 0),
            };
            out.add_term(rest, v);
        }
        out
    }

    /// Scales so that the graded-lex leading coefficient is 1.
    pub fn monic(&self) -> BiPoly {
        match self.leading_term() {
            None => BiPoly::zero(),
            Some((_, c)) => self.scale(&(Rat::one() / c)),
        }
    }

    /// Scalar multiple with coprime integer coefficients and positive
    /// graded-lex leading coefficient, together with the factor used.
    pub fn integer_primitive(&self) -> (BiPoly, Rat) {
        if self.is_zero() {
            return (BiPoly::zero(), Rat::one());
        }
        let lcm = super::rat::denominator_lcm(self.terms.values());
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            let n = c.numer() * (&lcm / c.denom());
            g = num_integer::Integer::gcd(&g, &n);
        }
        let mut f = Rat::new(lcm, g);
        if self.leading_coeff_glex().is_negative() {
            f = -f;
        }
        (self.scale(&f), f)
    }

    /// Substitutes `y := s(x)` truncated: returns the polynomial in `x`
    /// as a dense coefficient vector of length `n` (coefficients of x^0..x^{n-1}).
    pub fn compose_y_series(&self, s: &[Rat], n: usize) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); n];
        let ymax = self.degree(Var::Y).max(0) as usize;
        let mut powers: Vec<Vec<Rat>> = Vec::with_capacity(ymax + 1);
        let mut cur = vec![Rat::zero(); n];
        if n > 0 {
            cur[0] = Rat::one();
        }
        for _ in 0..=ymax {
            powers.push(cur.clone());
            cur = super::upoly::series_mul(&cur, s, n);
        }
        for (m, c) in &self.terms {
            let p = &powers[m.y as usize];
            for k in 0..n {
                let idx = k + m.x as usize;
                if idx >= n {
                    break;
                }
                if !p[k].is_zero() {
                    out[idx] += c * &p[k];
                }
            }
        }
        out
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let (mut big, small) = if self.terms.len() >= rhs.terms.len() {
            (self.clone(), rhs)
        } else {
            (rhs.clone(), self)
        };
        for (m, c) in &small.terms {
            big.add_term(*m, c.clone());
        }
        big
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        // Multiply the integer numerators on a dense grid, then divide by the
        // product of the common denominators once per output term.
        let (an, ad) = integer_numerator(self);
        let (bn, bd) = integer_numerator(rhs);
        let w = (self.degree(Var::Y) + rhs.degree(Var::Y) + 1) as usize;
        let h = (self.degree(Var::X) + rhs.degree(Var::X) + 1) as usize;
        let at = |m: &Monomial| m.x as usize * w + m.y as usize;
        let den = ad * bd;
        let abits = an.iter().map(|(_, c)| c.bits()).max().unwrap_or(0);
        let bbits = bn.iter().map(|(_, c)| c.bits()).max().unwrap_or(0);
        let lbits = 64 - (an.len().min(bn.len()) as u64).leading_zeros() as u64;
        let cells: Vec<BigInt> = if abits + bbits + lbits < 126 {
            let a: Vec<(usize, i128)> = an
                .iter()
                .map(|(m, c)| (at(m), c.to_i128().unwrap()))
                .collect();
            let b: Vec<(usize, i128)> = bn
                .iter()
                .map(|(m, c)| (at(m), c.to_i128().unwrap()))
                .collect();
            let mut grid = vec![0i128; w * h];
            for (ia, ca) in &a {
                for (ib, cb) in &b {
                    grid[ia + ib] += ca * cb;
                }
            }
            grid.into_iter().map(BigInt::from).collect()
        } else {
            let mut grid = vec![BigInt::zero(); w * h];
            for (ma, ca) in &an {
                for (mb, cb) in &bn {
                    grid[at(ma) + at(mb)] += ca * cb;
                }
            }
            grid
        };
        let mut out = BiPoly::zero();
        for (k, c) in cells.into_iter().enumerate() {
            if !c.is_zero() {
                let m = Monomial::new((k / w) as u32, (k % w) as u32);
                out.terms.insert(m, Rat::new(c, den.clone()));
            }
        }
        out
    }
}

/// Integer coefficients and the common denominator `l` with `p = (Σ c·m)/l`.
fn integer_numerator(p: &BiPoly) -> (Vec<(Monomial, BigInt)>, BigInt) {
    let l = crate::polyarith::rat::denominator_lcm(p.terms.values());
    let terms = p
        .terms
        .iter()
        .map(|(m, c)| (*m, c.numer() * (&l / c.denom())))
        .collect();
    (terms, l)
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for BiPoly {
            type Output = BiPoly;
            fn $f(self, rhs: BiPoly) -> BiPoly {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $f(self, rhs: &BiPoly) -> BiPoly {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

fn write_coeff_term(f: &mut fmt::Formatter<'_>, c: &Rat, m: &Monomial, first: bool) -> fmt::Result {
    let neg = c.is_negative();
    let a = c.abs();
    if first {
        if neg {
            write!(f, "-")?;
        }
    } else if neg {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    let mut factors: Vec<String> = Vec::new();
    let is_unit = a.is_one();
    if !is_unit || *m == Monomial::ONE {
        factors.push(super::rat::rat_to_string(&a));
    }
    for (name, e) in [("x", m.x), ("y", m.y)] {
        match e {
            0 => {}
            1 => factors.push(name.to_string()),
            _ => factors.push(format!("{name}^{e}")),
        }
    }
    write!(f, "{}", factors.join("*"))
}

/// Prints in the input grammar with terms in descending graded-lex order.
impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            write_coeff_term(f, c, m, k == 0)?;
        }
        Ok(())
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
    fn degrees_and_leading_coefficients() {
        assert_eq!(p("3*x^3 - 4*x + 8").degree(Var::X), 3);
        assert_eq!(BiPoly::zero().degree(Var::X), MINUS_INFINITY);
        assert_eq!(p("x^2 + 1").degree(Var::Y), 0);
        assert_eq!(p("x*y + y^2").leading_coeff(Var::X), p("y"));
        assert_eq!(BiPoly::zero().leading_coeff(Var::X), BiPoly::zero());
        assert_eq!(p("2*x^5 - 3*x^4 + 5").leading_coeff(Var::X), p("2"));
    }

    #[test]
    fn derivative() {
        assert_eq!(p("x^2*y").diff(Var::X), p("2*x*y"));
        assert_eq!(p("x^2*y + y^3").diff(Var::Y), p("x^2 + 3*y^2"));
    }

    #[test]
    fn exact_division() {
        let a = p("x^2 - y^2");
        assert_eq!(a.div_exact(&p("x - y")), Some(p("x + y")));
        assert_eq!(p("x^2 + 1").div_exact(&p("x + 1")), None);
        assert_eq!(a.div_exact(&BiPoly::zero()), None);
    }

    #[test]
    fn display_round_trip() {
        let a = p("-3/2*x^2*y + x - 7 + y^3");
        assert_eq!(a.to_string(), "-3/2*x^2*y + y^3 + x - 7");
        assert_eq!(p(&a.to_string()), a);
        assert_eq!(BiPoly::zero().to_string(), "0");
        assert_eq!(p("-x").to_string(), "-x");
    }

    #[test]
    fn powers_and_evaluation() {
        assert_eq!(p("x + y").pow(2), p("x^2 + 2*x*y + y^2"));
        assert_eq!(p("x^2*y + y").eval(Var::X, &rat(2)), p("5*y"));
    }

    #[test]
    fn integer_primitive_form() {
        let (q, f) = p("-1/2*x + 1/3").integer_primitive();
        assert_eq!(q, p("3*x - 2"));
        assert_eq!(f, rat(-6));
    }
}
