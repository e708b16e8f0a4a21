//! Exact arithmetic substrate: rationals, bivariate polynomials in `x`, `y`,
//! gcd / square-free part, and normalized rational functions.

pub mod gcd;
pub mod parse;
pub mod poly;
pub mod rat;
pub mod ratfun;
pub mod upoly;

pub use gcd::{gcd_poly, squarefree_part};
pub use parse::parse_poly;
pub use poly::{BiPoly, Monomial, Var, MINUS_INFINITY};
pub use rat::Rat;
pub use ratfun::{rf_diff, rf_normalize, RatFun};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable '{name}' at byte {pos} (only x and y are allowed)")]
    UnknownVariable { pos: usize, name: String },
    #[error("zero denominator")]
    ZeroDenominator,
}
