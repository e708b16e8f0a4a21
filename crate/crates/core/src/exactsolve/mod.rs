//! Exact linear algebra over the rationals.
//!
//! Small systems are reduced by fraction-free Gauss–Jordan elimination.
//! Larger ones find their pivot structure modulo a word-sized prime and
//! recover the exact kernel vector by p-adic lifting, followed by an exact
//! check against every row; a failed check retries with the next prime.

pub mod dixon;
pub mod matrix;
pub mod modular;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::polyarith::rat::denominator_lcm;
use crate::polyarith::Rat;
pub use matrix::{
    fraction_free_rref, nullspace, rank_rational, solution_with_nonzero_block, FractionFreeRref,
    NullspaceBasis, QMatrix,
};
use modular::{mod_echelon, Modulus, PRIMES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("exact kernel vector could not be recovered with any of the {0} primes")]
    LiftingFailed(usize),
}

/// Systems with at most this many columns use fraction-free elimination.
pub const FRACTION_FREE_MAX_COLS: usize = 120;

/// Integer system with dense rows; each row is a rational row scaled by
/// the lcm of its denominators, which leaves the kernel unchanged.
#[derive(Debug, Clone)]
pub struct IntSystem {
    pub rows: Vec<Vec<BigInt>>,
    pub cols: usize,
}

impl IntSystem {
    pub fn from_qmatrix(m: &QMatrix) -> Self {
        IntSystem {
            rows: m.integer_rows(),
            cols: m.cols,
        }
    }

    /// Builds rows from sparse rational columns.
    pub fn from_columns(nrows: usize, columns: &[Vec<(usize, Rat)>]) -> Self {
        let mut q: Vec<Vec<Rat>> = vec![vec![Rat::zero(); columns.len()]; nrows];
        for (c, col) in columns.iter().enumerate() {
            for (r, v) in col {
                q[*r][c] = v.clone();
            }
        }
        let rows = q
            .into_iter()
            .map(|row| {
                let l = denominator_lcm(row.iter());
                row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
            })
            .collect();
        IntSystem {
            rows,
            cols: columns.len(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    /// Exact check that `v` lies in the kernel.
    pub fn annihilates(&self, v: &[Rat]) -> bool {
        let l = denominator_lcm(v.iter());
        let vn: Vec<BigInt> = v.iter().map(|q| q.numer() * (&l / q.denom())).collect();
        self.rows.iter().all(|row| {
            row.iter()
                .zip(&vn)
                .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                .map(|(a, b)| a * b)
                .sum::<BigInt>()
                .is_zero()
        })
    }
}

/// First column in `order` that is not a pivot and satisfies `is_target`,
/// decided modulo a prime. Used for feasibility questions only.
pub fn first_free_column(
    sys: &IntSystem,
    order: &[usize],
    is_target: impl Fn(usize) -> bool,
) -> Option<usize> {
    mod_echelon(&sys.rows, Modulus::new(PRIMES[0]), order, is_target).stopped_at
}

/// Kernel vector attached to the first non-pivot target column `f` in
/// `order`: value 1 at `f`, zero at every other non-pivot column and every
/// column after `f`. `None` when every target column is a pivot.
pub fn first_free_kernel_vector(
    sys: &IntSystem,
    order: &[usize],
    is_target: impl Fn(usize) -> bool,
) -> Result<Option<(usize, Vec<Rat>)>, SolveError> {
    if sys.cols <= FRACTION_FREE_MAX_COLS {
        let rref = fraction_free_rref(sys.rows.clone(), order);
        let piv: std::collections::BTreeSet<usize> = rref.pivot_columns().into_iter().collect();
        let Some(&f) = order.iter().find(|&&c| !piv.contains(&c) && is_target(c)) else {
            return Ok(None);
        };
        let det = Rat::from_integer(rref.det.clone());
        let v = rref
            .kernel_vector(f, sys.cols)
            .into_iter()
            .map(|x| Rat::from_integer(x) / &det)
            .collect();
        return Ok(Some((f, v)));
    }
    for &p in &PRIMES {
        let md = Modulus::new(p);
        let ech = mod_echelon(&sys.rows, md, order, &is_target);
        let Some(f) = ech.stopped_at else {
            return Ok(None);
        };
        let prow: Vec<usize> = ech.pivots.iter().map(|&(r, _)| r).collect();
        let pcol: Vec<usize> = ech.pivots.iter().map(|&(_, c)| c).collect();
        let a: Vec<Vec<BigInt>> = prow
            .iter()
            .map(|&r| pcol.iter().map(|&c| sys.rows[r][c].clone()).collect())
            .collect();
        let b: Vec<BigInt> = prow.iter().map(|&r| -sys.rows[r][f].clone()).collect();
        let Some(x) = dixon::dixon_solve(&a, &b, md) else {
            continue;
        };
        let mut v = vec![Rat::zero(); sys.cols];
        v[f] = Rat::from_integer(1.into());
        for (c, val) in pcol.iter().zip(x) {
            v[*c] = val;
        }
        if sys.annihilates(&v) {
            return Ok(Some((f, v)));
        }
    }
    Err(SolveError::LiftingFailed(PRIMES.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pseudo_random_system(rows: usize, cols: usize, seed: u64) -> IntSystem {
        let mut s = seed;
        let mut next = || {
            s = s
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((s >> 33) % 19) as i64 - 9
        };
        let rows = (0..rows)
            .map(|_| (0..cols).map(|_| BigInt::from(next())).collect())
            .collect();
        IntSystem { rows, cols }
    }

    #[test]
    fn modular_and_fraction_free_paths_agree() {
        // 150 columns and 140 rows: the kernel is at least 10-dimensional.
        let sys = pseudo_random_system(140, 150, 7);
        let order: Vec<usize> = (0..150).rev().collect();
        let (f, v) = first_free_kernel_vector(&sys, &order, |c| c < 60)
            .unwrap()
            .unwrap();
        assert!(sys.annihilates(&v));
        let rref = fraction_free_rref(sys.rows.clone(), &order);
        let piv: std::collections::BTreeSet<usize> = rref.pivot_columns().into_iter().collect();
        let f2 = *order
            .iter()
            .find(|&&c| !piv.contains(&c) && c < 60)
            .unwrap();
        assert_eq!(f, f2);
        let det = Rat::from_integer(rref.det.clone());
        let w: Vec<Rat> = rref
            .kernel_vector(f, 150)
            .into_iter()
            .map(|x| Rat::from_integer(x) / &det)
            .collect();
        assert_eq!(v, w);
    }

    #[test]
    fn full_rank_has_no_target_free_column() {
        let sys = pseudo_random_system(10, 8, 3);
        let order: Vec<usize> = (0..8).collect();
        assert_eq!(
            first_free_kernel_vector(&sys, &order, |_| true).unwrap(),
            None
        );
        assert_eq!(first_free_column(&sys, &order, |_| true), None);
    }
}
