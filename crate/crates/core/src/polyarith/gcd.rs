//! Bivariate gcd and square-free part.
//!
//! Polynomials are viewed in `Q[y][x]`. The content with respect to `x` is a
//! univariate gcd in `Q[y]`; primitive parts are handled with a primitive
//! pseudo-remainder sequence.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::{BiPoly, Monomial, Var};
use super::rat::Rat;
use super::upoly;

fn to_upoly_y(p: &BiPoly) -> Vec<Rat> {
    let d = p.degree(Var::Y).max(-1);
    let mut out = vec![num_traits::Zero::zero(); (d + 1) as usize];
    for (m, c) in p.terms() {
        debug_assert_eq!(m.x, 0);
        out[m.y as usize] = c.clone();
    }
    out
}

fn from_upoly_y(c: &[Rat]) -> BiPoly {
    BiPoly::from_univariate(c, Var::Y)
}

/// Monic gcd (in `Q[y]`) of all coefficients of powers of `x`.
pub fn content_x(p: &BiPoly) -> BiPoly {
    if p.is_zero() {
        return BiPoly::zero();
    }
    let dx = p.degree(Var::X);
    let mut g: Vec<Rat> = Vec::new();
    for k in 0..=dx as u32 {
        let c = p.coeff_of(Var::X, k);
        if c.is_zero() {
            continue;
        }
        g = upoly::gcd(&g, &to_upoly_y(&c));
        if g.len() == 1 {
            break;
        }
    }
    from_upoly_y(&g)
}

fn primitive_x(p: &BiPoly) -> BiPoly {
    let c = content_x(p);
    if c.is_constant() {
        return p.monic();
    }
    p.div_exact(&c).expect("content divides").monic()
}

/// Pseudo-remainder of `a` by `b` viewed as polynomials in `x`.
fn prem_x(a: &BiPoly, b: &BiPoly) -> BiPoly {
    let db = b.degree(Var::X);
    let lb = b.leading_coeff(Var::X);
    let mut r = a.clone();
    while !r.is_zero() && r.degree(Var::X) >= db {
        let dr = r.degree(Var::X);
        let lr = r.leading_coeff(Var::X);
        let shifted = (&lr * b).shift((dr - db) as u32, 0);
        r = &(&lb * &r) - &shifted;
    }
    r
}

/// Canonical gcd: monic under graded-lex; `gcd(p, 0)` is `p` made monic.
///
/// Tries the heuristic evaluation gcd first (evaluate at large integers,
/// take an integer gcd, reconstruct by balanced radix expansion, confirm by
/// trial division); falls back to the primitive pseudo-remainder sequence.
pub fn gcd_poly(p: &BiPoly, q: &BiPoly) -> BiPoly {
    if p.is_zero() {
        return q.monic();
    }
    if q.is_zero() {
        return p.monic();
    }
    if p.is_constant() || q.is_constant() {
        return BiPoly::one();
    }
    let (pi, _) = p.integer_primitive();
    let (qi, _) = q.integer_primitive();
    if let Some(g) = heuristic_gcd(&pi, &qi, &[Var::Y, Var::X]) {
        return g.monic();
    }
    gcd_prs(p, q)
}

/// Gcd via the primitive pseudo-remainder sequence in `Q[y][x]`.
pub fn gcd_prs(p: &BiPoly, q: &BiPoly) -> BiPoly {
    if p.is_zero() {
        return q.monic();
    }
    if q.is_zero() {
        return p.monic();
    }
    if p.is_constant() || q.is_constant() {
        return BiPoly::one();
    }
    let cont = from_upoly_y(&upoly::gcd(
        &to_upoly_y(&content_x(p)),
        &to_upoly_y(&content_x(q)),
    ));
    let mut a = primitive_x(p);
    let mut b = primitive_x(q);
    if a.degree(Var::X) < b.degree(Var::X) {
        std::mem::swap(&mut a, &mut b);
    }
    let g = loop {
        if b.degree(Var::X) <= 0 {
            // b is primitive and free of x, hence a nonzero constant.
            break if b.degree(Var::X) == 0 && !b.is_zero() {
                BiPoly::one()
            } else {
                a
            };
        }
        let r = prem_x(&a, &b);
        if r.is_zero() {
            break b;
        }
        a = b;
        b = primitive_x(&r);
    };
    (&primitive_x(&g) * &cont).monic()
}

fn max_norm(p: &BiPoly) -> BigInt {
    p.terms()
        .map(|(_, c)| c.numer().abs())
        .max()
        .unwrap_or_else(BigInt::zero)
}

fn integer_content(p: &BiPoly) -> BigInt {
    p.terms().fold(BigInt::zero(), |g, (_, c)| g.gcd(c.numer()))
}

/// Balanced radix-`xi` expansion of the integer coefficients of `g` into a
/// polynomial in `var`.
fn radix_lift(g: &BiPoly, xi: &BigInt, var: Var) -> BiPoly {
    let half = xi / 2;
    let mut out = BiPoly::zero();
    for (m, c) in g.terms() {
        let mut n = c.numer().clone();
        let mut k = 0u32;
        while !n.is_zero() {
            let mut digit = n.mod_floor(xi);
            if digit > half {
                digit -= xi;
            }
            if !digit.is_zero() {
                let (dx, dy) = match var {
                    Var::X => (m.x + k, m.y),
                    Var::Y => (m.x, m.y + k),
                };
                out.add_term(Monomial::new(dx, dy), Rat::from_integer(digit.clone()));
            }
            n = (n - digit) / xi;
            k += 1;
        }
    }
    out
}

/// Heuristic gcd of integer polynomials over the variables in `vars`
/// (the remaining variables must not occur). Returns the full gcd
/// including the integer content, with positive leading coefficient.
fn heuristic_gcd(a: &BiPoly, b: &BiPoly, vars: &[Var]) -> Option<BiPoly> {
    let ca = integer_content(a);
    let cb = integer_content(b);
    let cg = Rat::from_integer(ca.gcd(&cb));
    let Some((&v, rest)) = vars.split_first() else {
        return Some(BiPoly::constant(cg));
    };
    let a = a.scale(&Rat::new(BigInt::one(), ca));
    let b = b.scale(&Rat::new(BigInt::one(), cb));
    if a.degree(v) == 0 && b.degree(v) == 0 {
        return heuristic_gcd(&a, &b, rest).map(|g| g.scale(&cg));
    }
    let mut xi = BigInt::from(2) * max_norm(&a).min(max_norm(&b)) + BigInt::from(29);
    for _ in 0..6 {
        let xr = Rat::from_integer(xi.clone());
        let av = a.eval(v, &xr);
        let bv = b.eval(v, &xr);
        if av.is_zero() || bv.is_zero() {
            return None;
        }
        let gv = heuristic_gcd(&av, &bv, rest)?;
        let lifted = radix_lift(&gv, &xi, v);
        if !lifted.is_zero() {
            let (g, _) = lifted.integer_primitive();
            if a.div_exact(&g).is_some() && b.div_exact(&g).is_some() {
                return Some(g.scale(&cg));
            }
        }
        xi = xi * BigInt::from(73794) / BigInt::from(27011);
    }
    None
}

/// Product of the distinct irreducible factors of `p`, made monic.
///
/// # Panics
/// Panics on the zero polynomial.
pub fn squarefree_part(p: &BiPoly) -> BiPoly {
    assert!(!p.is_zero(), "square-free part of zero is undefined");
    if p.is_constant() {
        return BiPoly::one();
    }
    let cont = content_x(p);
    let cu = to_upoly_y(&cont);
    let du: Vec<Rat> = cu
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * super::rat::rat(k as i64))
        .collect();
    let cont_sf = if cu.len() <= 1 {
        BiPoly::one()
    } else {
        let g = gcd_poly(&cont, &from_upoly_y(&du));
        cont.div_exact(&g).expect("gcd divides")
    };
    let pp = if cont.is_constant() {
        p.clone()
    } else {
        p.div_exact(&cont).expect("content divides")
    };
    let pp_sf = if pp.degree(Var::X) <= 0 {
        BiPoly::one()
    } else {
        let g = gcd_poly(&pp, &pp.diff(Var::X));
        pp.div_exact(&g).expect("gcd divides")
    };
    (&cont_sf * &pp_sf).monic()
}
