//! Dense square matrices and fraction-free determinants.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ring::Ring;

/// Below this many cells an elimination step runs sequentially.
const PARALLEL_CELLS: usize = 16;

#[derive(Clone, PartialEq)]
pub struct SquareMatrix<R> {
    dim: usize,
    rows: Vec<Vec<R>>,
}

impl<R: Ring> SquareMatrix<R> {
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let rows = (0..dim)
            .map(|i| (0..dim).map(|j| f(i, j)).collect())
            .collect();
        SquareMatrix { dim, rows }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let dim = rows.len();
        if let Some((row, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != dim) {
            return Err(Error::NotSquare {
                row,
                len: r.len(),
                expected: dim,
            });
        }
        Ok(SquareMatrix { dim, rows })
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| if i == j { R::one() } else { R::zero() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<R>] {
        &self.rows
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> SquareMatrix<S> {
        SquareMatrix {
            dim: self.dim,
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(&f).collect())
                .collect(),
        }
    }

    /// Determinant by Bareiss fraction-free elimination.
    ///
    /// Every intermediate entry is a minor of the input, so each division is
    /// exact over an integral domain. Pivots are chosen over the whole
    /// trailing block, preferring the cheapest nonzero entry; row and column
    /// swaps only flip the sign.
    ///
    /// Panics if an exact division fails, which means the coefficient ring
    /// violated its contract.
    pub fn det(&self) -> R {
        let n = self.dim;
        if n == 0 {
            return R::one();
        }
        let mut m = self.rows.clone();
        let mut negate = false;
        let mut prev = R::one();
        for k in 0..n {
            let pivot = (k..n)
                .flat_map(|i| (k..n).map(move |j| (i, j)))
                .filter(|&(i, j)| !m[i][j].is_zero())
                .min_by_key(|&(i, j)| m[i][j].size_hint());
            let Some((pi, pj)) = pivot else {
                return R::zero();
            };
            if pi != k {
                m.swap(pi, k);
                negate = !negate;
            }
            if pj != k {
                for row in m.iter_mut() {
                    row.swap(pj, k);
                }
                negate = !negate;
            }
            if k + 1 == n {
                break;
            }
            let (head, tail) = m.split_at_mut(k + 1);
            let pivot_row = &head[k];
            let step = |row: &mut Vec<R>| {
                let lead = std::mem::replace(&mut row[k], R::zero());
                for j in k + 1..n {
                    let num = row[j].clone() * &pivot_row[k] - lead.clone() * &pivot_row[j];
                    row[j] = num
                        .exact_div(&prev)
                        .unwrap_or_else(|| panic!("Bareiss: inexact division of {num} by {prev}"));
                }
            };
            if (n - k) * (n - k) >= PARALLEL_CELLS {
                tail.par_iter_mut().for_each(step);
            } else {
                tail.iter_mut().for_each(step);
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        if negate {
            -d
        } else {
            d
        }
    }
}

impl<R: fmt::Display> fmt::Display for SquareMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{e}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl<R: fmt::Display> fmt::Debug for SquareMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
