//! Creative telescoping for bivariate hyperexponential terms.
//!
//! Given `h = c0 · exp(a/b) · ∏ c_l^{e_l}` with polynomial data in `x`, `y`,
//! the crate finds operators `P = Σ p_i(x) D_x^i` and certificates `Q` with
//! `P(h) = D_y Q`, predicts the order/degree trade-off curve on which such
//! relations are guaranteed to exist, and optimizes cost models along it.
//!
//! All arithmetic is exact. Feasibility questions (does an ansatz admit a
//! nonzero telescoper?) are answered from an elimination modulo a 31-bit
//! prime, which can only err if the prime divides certain minors; every
//! relation the crate returns is recomputed exactly and verified
//! symbolically before it is handed out.

pub mod algebraic;
pub mod ansatz;
pub mod bounds;
#[cfg(feature = "cli")]
pub mod cli;
pub mod corpus;
pub mod exactsolve;
pub mod hyperexp;
pub mod polyarith;
pub mod telescope;
