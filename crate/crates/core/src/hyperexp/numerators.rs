//! Derivative quotients `(D_x^i h)/h` and their numerators over the common
//! denominator `c0 · v^i`, where `v = b · sqfp(b) · ∏ c_l`.

use crate::polyarith::rat::{binomial, rat};
use crate::polyarith::{squarefree_part, BiPoly, Rat, RatFun, Var};

use super::term::HyperexpTerm;

/// Polynomial data derived once per term.
#[derive(Debug, Clone)]
pub struct TermData {
    pub sqfp_b: BiPoly,
    /// `b · sqfp(b) · ∏ c_l`.
    pub v: BiPoly,
    /// `v · (D_x(a/b) + Σ e_l D_x c_l / c_l)`, a polynomial.
    pub t_x: BiPoly,
    /// Same with `D_y`.
    pub t_y: BiPoly,
}

impl TermData {
    pub fn new(term: &HyperexpTerm) -> Self {
        let sqfp_b = squarefree_part(&term.b);
        let v = term.v();
        let t_x = log_part_numerator(term, &sqfp_b, Var::X);
        let t_y = log_part_numerator(term, &sqfp_b, Var::Y);
        TermData {
            sqfp_b,
            v,
            t_x,
            t_y,
        }
    }

    pub fn t(&self, var: Var) -> &BiPoly {
        match var {
            Var::X => &self.t_x,
            Var::Y => &self.t_y,
        }
    }
}

/// `v · (D(a/b) + Σ e_l D c_l / c_l)` computed without fractions.
fn log_part_numerator(term: &HyperexpTerm, sqfp_b: &BiPoly, var: Var) -> BiPoly {
    let prod_c = term
        .factors
        .iter()
        .fold(BiPoly::one(), |acc, f| &acc * &f.poly);
    // sqfp(b) · D b / b is a polynomial because every repeated factor of b
    // loses exactly one multiplicity under differentiation.
    let sb_db_over_b = (sqfp_b * &term.b.diff(var))
        .div_exact(&term.b)
        .expect("sqfp(b) * b' is divisible by b");
    let exp_part = &prod_c * &(&(sqfp_b * &term.a.diff(var)) - &(&term.a * &sb_db_over_b));
    let bs = &term.b * sqfp_b;
    let mut acc = exp_part;
    for (l, f) in term.factors.iter().enumerate() {
        let mut others = bs.clone();
        for (k, g) in term.factors.iter().enumerate() {
            if k != l {
                others = &others * &g.poly;
            }
        }
        acc = &acc + &(&f.poly.diff(var) * &others).scale(&f.exponent);
    }
    acc
}

/// `N_0 … N_n` with `(D_x^i h)/h = N_i / (c0 v^i)`, by the recurrence
/// `N_{i+1} = D_x N_i · v − i N_i D_x v + N_i T_x`, `N_0 = c0`.
pub fn numerators(term: &HyperexpTerm, data: &TermData, n: usize) -> Vec<BiPoly> {
    let dv = data.v.diff(Var::X);
    let mut out = Vec::with_capacity(n + 1);
    out.push(term.c0.clone());
    for i in 0..n {
        let ni = &out[i];
        let next = &(&(&ni.diff(Var::X) * &data.v) - &(ni * &dv).scale(&rat(i as i64)))
            + &(ni * &data.t_x);
        out.push(next);
    }
    out
}

/// Same numerators by a Leibniz expansion over `c0 · g`, where `g` is the
/// exponential-and-powers part: `N_i = Σ_k C(i,k) D_x^{i-k}(c0) G_k v^{i-k}`
/// with `D_x^k g / g = G_k / v^k`. Used as an independent cross-check.
pub fn numerators_leibniz(term: &HyperexpTerm, data: &TermData, n: usize) -> Vec<BiPoly> {
    let dv = data.v.diff(Var::X);
    let mut g = vec![BiPoly::one()];
    for k in 0..n {
        let gk = &g[k];
        let next = &(&(&gk.diff(Var::X) * &data.v) - &(gk * &dv).scale(&rat(k as i64)))
            + &(gk * &data.t_x);
        g.push(next);
    }
    let mut dc0 = vec![term.c0.clone()];
    for k in 0..n {
        let d = dc0[k].diff(Var::X);
        dc0.push(d);
    }
    let vpow: Vec<BiPoly> = (0..=n).map(|k| data.v.pow(k as u32)).collect();
    (0..=n)
        .map(|i| {
            let mut acc = BiPoly::zero();
            for k in 0..=i {
                let c = Rat::from_integer(binomial(i as u32, k as u32));
                acc = &acc + &(&(&dc0[i - k] * &g[k]) * &vpow[i - k]).scale(&c);
            }
            acc
        })
        .collect()
}

/// `N_{r,i} = N_i · v^{r-i}`: numerators over the shared denominator `c0 v^r`.
pub fn lifted_numerators(term: &HyperexpTerm, data: &TermData, r: usize) -> Vec<BiPoly> {
    let ns = numerators(term, data, r);
    ns.into_iter()
        .enumerate()
        .map(|(i, n)| &n * &data.v.pow((r - i) as u32))
        .collect()
}

/// The normalized rational function `(D_x^i h)/h`, via
/// `R_{i+1} = D_x R_i + R_i R_1` starting from `R_0 = 1`.
pub fn derivative_quotient(term: &HyperexpTerm, i: usize) -> RatFun {
    derivative_quotients(term, i).pop().expect("nonempty")
}

/// `R_0 … R_n` by the same recurrence.
pub fn derivative_quotients(term: &HyperexpTerm, n: usize) -> Vec<RatFun> {
    let r1 = term.dlog(Var::X);
    let mut out = vec![RatFun::one()];
    for i in 0..n {
        let next = out[i].diff(Var::X).add(&out[i].mul(&r1));
        out.push(next);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyarith::parse_poly;
    use crate::polyarith::rat::ratio;

    fn p(s: &str) -> BiPoly {
        parse_poly(s).unwrap()
    }

    fn rational_example() -> HyperexpTerm {
        HyperexpTerm::new(
            p("2*x^5 - 3*x^4 + 5"),
            p("0"),
            p("1"),
            vec![(p("3*x^3 - 4*x + 8"), rat(-1))],
        )
        .unwrap()
    }

    #[test]
    fn derivative_quotient_table() {
        let h = rational_example();
        let data = TermData::new(&h);
        let ns = numerators(&h, &data, 6);
        let degs: Vec<i64> = ns.iter().map(|n| n.degree(Var::X)).collect();
        assert_eq!(degs, vec![5, 7, 9, 8, 10, 12, 14]);
        let lcs: Vec<Rat> = ns
            .iter()
            .map(|n| n.leading_coeff(Var::X).constant_term())
            .collect();
        let expected: Vec<Rat> = [2, 12, 36, 1512, -18144, 272160, -4898880]
            .iter()
            .map(|&c| rat(c))
            .collect();
        assert_eq!(lcs, expected);
    }

    #[test]
    fn routes_agree() {
        let h = HyperexpTerm::new(
            p("x*y + 1"),
            p("x^2*y + y"),
            p("x^2 + y"),
            vec![(p("x - 2*y"), ratio(1, 2))],
        )
        .unwrap();
        let data = TermData::new(&h);
        let a = numerators(&h, &data, 4);
        let b = numerators_leibniz(&h, &data, 4);
        assert_eq!(a, b);
        let rs = derivative_quotients(&h, 4);
        let v = &data.v;
        for i in 0..=4 {
            let den = &h.c0 * &v.pow(i as u32);
            assert_eq!(rs[i], RatFun::new(a[i].clone(), den).unwrap(), "i = {i}");
        }
    }

    #[test]
    fn quotient_endpoints() {
        let h = rational_example();
        assert_eq!(derivative_quotient(&h, 0), RatFun::one());
        assert_eq!(derivative_quotient(&h, 1), h.dlog(Var::X));
    }
}
