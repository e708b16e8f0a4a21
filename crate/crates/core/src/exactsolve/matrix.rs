//! Dense rational matrices, fraction-free elimination, and kernels.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::polyarith::rat::denominator_lcm;
use crate::polyarith::Rat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    pub rows: usize,
    pub cols: usize,
    /// Row-major entries, `rows * cols` of them.
    pub entries: Vec<Rat>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NullspaceBasis {
    pub vectors: Vec<Vec<Rat>>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<Rat>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        QMatrix {
            rows: rows.len(),
            cols,
            entries: rows.iter().flatten().cloned().collect(),
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let rs: Vec<Vec<Rat>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| Rat::from_integer(v.into())).collect())
            .collect();
        QMatrix::from_rows(&rs)
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    /// `M · v`.
    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Rows scaled by the lcm of their denominators: same kernel, integer entries.
    pub fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|r| {
                let row = self.row(r);
                let l = denominator_lcm(row.iter());
                row.iter().map(|q| q.numer() * (&l / q.denom())).collect()
            })
            .collect()
    }
}

/// Result of fraction-free Gauss–Jordan elimination: every pivot row has
/// the common pivot value `det` in its pivot column and zeros in all other
/// pivot columns.
#[derive(Debug, Clone)]
pub struct FractionFreeRref {
    pub rows: Vec<Vec<BigInt>>,
    /// `(row, column)` per pivot, in elimination order.
    pub pivots: Vec<(usize, usize)>,
    pub det: BigInt,
}

impl FractionFreeRref {
    /// Integer kernel vector attached to the non-pivot column `f`:
    /// `det` at `f`, `−row_i[f]` at each pivot column, zero elsewhere.
    pub fn kernel_vector(&self, f: usize, cols: usize) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); cols];
        v[f] = self.det.clone();
        for &(r, c) in &self.pivots {
            v[c] = -self.rows[r][f].clone();
        }
        v
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.pivots.iter().map(|&(_, c)| c).collect()
    }
}

/// Fraction-free Gauss–Jordan elimination visiting columns in `order`
/// (first nonzero entry among unused rows, ascending, is the pivot).
/// All divisions are exact.
pub fn fraction_free_rref(int_rows: Vec<Vec<BigInt>>, order: &[usize]) -> FractionFreeRref {
    let mut rows = int_rows;
    let nrows = rows.len();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut used = vec![false; nrows];
    for &c in order {
        let Some(pr) = (0..nrows).find(|&r| !used[r] && !rows[r][c].is_zero()) else {
            continue;
        };
        used[pr] = true;
        let pivot_row = rows[pr].clone();
        let pv = pivot_row[c].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == pr {
                continue;
            }
            let f = row[c].clone();
            for j in 0..row.len() {
                let t = &pv * &row[j] - &f * &pivot_row[j];
                row[j] = if prev.is_one() {
                    t
                } else {
                    let (q, rem) = t.div_rem(&prev);
                    debug_assert!(rem.is_zero(), "inexact fraction-free division");
                    q
                };
            }
        }
        // Earlier pivot rows were rescaled by pv / prev together with the
        // others, so every pivot entry is now `pv`.
        prev = pv;
        pivots.push((pr, c));
    }
    FractionFreeRref {
        rows,
        pivots,
        det: prev,
    }
}

fn primitive(v: Vec<BigInt>) -> Vec<Rat> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    let sign_neg = v
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.is_negative());
    v.into_iter()
        .map(|x| {
            let q = if g.is_zero() { x } else { x / &g };
            Rat::from_integer(if sign_neg { -q } else { q })
        })
        .collect()
}

/// Basis of the exact kernel, one vector per non-pivot column (in column
/// order), each scaled to coprime integers with positive first entry.
pub fn nullspace(m: &QMatrix) -> NullspaceBasis {
    let order: Vec<usize> = (0..m.cols).collect();
    let rref = fraction_free_rref(m.integer_rows(), &order);
    let piv: std::collections::BTreeSet<usize> = rref.pivot_columns().into_iter().collect();
    let vectors = (0..m.cols)
        .filter(|c| !piv.contains(c))
        .map(|f| primitive(rref.kernel_vector(f, m.cols)))
        .collect();
    NullspaceBasis { vectors }
}

/// Some kernel vector that is nonzero on `block`, if one exists.
pub fn solution_with_nonzero_block(basis: &NullspaceBasis, block: &[usize]) -> Option<Vec<Rat>> {
    basis
        .vectors
        .iter()
        .find(|v| block.iter().any(|&c| !v[c].is_zero()))
        .cloned()
}

/// Rank by plain rational Gaussian elimination with the last nonzero row as
/// pivot, used as an independent cross-check of the fraction-free path.
pub fn rank_rational(m: &QMatrix) -> usize {
    let mut rows: Vec<Vec<Rat>> = (0..m.rows).map(|r| m.row(r).to_vec()).collect();
    let mut rank = 0;
    for c in (0..m.cols).rev() {
        let Some(pr) = (rank..rows.len()).rev().find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, pr);
        let inv = Rat::one() / &rows[rank][c];
        let pivot: Vec<Rat> = rows[rank].iter().map(|x| x * &inv).collect();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        rows[rank] = pivot;
        rank += 1;
    }
    rank
}
