//! Hankel matrices and transforms, invariance under the Invert transform,
//! and exploratory reports on shifted Hankel determinants of `I^x(a)` and of
//! the `Q_n` polynomials.

use std::fmt;

use rayon::prelude::*;

use crate::check::{compare, Verdict};
use crate::error::{Error, Result};
use crate::invert::{continuous_invert, invert_transform, Sequence};
use crate::matrix::SquareMatrix;
use crate::poly::{MPoly, Var};
use crate::pq::PqContext;
use crate::ring::Ring;

/// The `n×n` matrix `(s_{i+j+shift})`.
pub fn hankel_matrix<R: Ring>(s: &[R], n: usize, shift: usize) -> Result<SquareMatrix<R>> {
    let needed = if n == 0 { 0 } else { 2 * (n - 1) + shift + 1 };
    if s.len() < needed {
        return Err(Error::InsufficientLength {
            needed,
            got: s.len(),
        });
    }
    Ok(SquareMatrix::from_fn(n, |i, j| s[i + j + shift].clone()))
}

/// `[det H_shift(1), …, det H_shift(count)]`.
pub fn hankel_transform<R: Ring>(s: &[R], count: usize, shift: usize) -> Result<Vec<R>> {
    hankel_matrix(s, count, shift)?;
    Ok((1..=count)
        .into_par_iter()
        .map(|n| hankel_matrix(s, n, shift).expect("length checked").det())
        .collect())
}

/// `a` and `I(a)` have the same Hankel transform (sizes `1..=count`).
pub fn layman_check<R: Ring>(a: &Sequence<R>, count: usize) -> Result<Verdict> {
    let b = invert_transform(a);
    let ha = hankel_transform(a.coeffs(), count, 0)?;
    let hb = hankel_transform(b.coeffs(), count, 0)?;
    for (n, (l, r)) in ha.iter().zip(&hb).enumerate() {
        if let Err(m) = compare(format!("det H({})", n + 1), &l.to_poly(), &r.to_poly()) {
            return Ok(Err(m));
        }
    }
    Ok(Ok(()))
}

/// `det((I_{i+j+shift}(x)))` for `n = 1..=count`, with `x` symbolic.
pub fn continuous_hankel_dets<R: Ring>(
    a: &Sequence<R>,
    count: usize,
    shift: usize,
) -> Result<Vec<MPoly>> {
    let cont = continuous_invert(a);
    hankel_transform(cont.entries(), count, shift)
}

/// The Hankel transform of `I^x(a)` does not involve `x`.
pub fn continuous_layman_check<R: Ring>(a: &Sequence<R>, count: usize) -> Result<Verdict> {
    let x = Var::named("x");
    for (i, d) in continuous_hankel_dets(a, count, 0)?.iter().enumerate() {
        if d.degree_in(x) > 0 {
            let free = d.eval(&[(x, num_traits::Zero::zero())]);
            return Ok(compare(format!("det H({}) in x", i + 1), d, &free));
        }
    }
    Ok(Ok(()))
}

/// Caps on determinant sizes for the exploratory reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub symbolic: usize,
    pub numeric: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            symbolic: 5,
            numeric: 8,
        }
    }
}

impl Budget {
    fn admit(&self, nmax: usize, symbolic: bool) -> Result<()> {
        let (cap, what) = if symbolic {
            (self.symbolic, "symbolic determinant size")
        } else {
            (self.numeric, "numeric determinant size")
        };
        if nmax > cap {
            return Err(Error::Budget {
                what,
                requested: nmax,
                cap,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Conjecture {
    /// `deg_x det((I_{i+j+k}(x))) ≤ k`.
    ShiftedDegree,
    /// `det((Q_{i+j}(x)))` is free of `s_1`.
    FreeOfS1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowVerdict {
    /// Observed bound holds for this cell.
    Ok,
    /// Counterexample to the conjectured bound.
    Exceeds,
}

impl RowVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            RowVerdict::Ok => "ok",
            RowVerdict::Exceeds => "exceeds",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct HankelRow {
    pub n: usize,
    pub det: MPoly,
    /// Degree in `x` for the shifted-degree report, in `s1` for the other.
    pub degree: i64,
    pub verdict: RowVerdict,
}

/// Per-size observations; never a proof.
#[derive(Debug, Clone, PartialEq)]
pub struct HankelReport {
    pub conjecture: Conjecture,
    pub shift: usize,
    pub rows: Vec<HankelRow>,
}

impl HankelReport {
    pub fn all_ok(&self) -> bool {
        self.rows.iter().all(|r| r.verdict == RowVerdict::Ok)
    }
}

impl fmt::Display for HankelReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.conjecture {
            Conjecture::ShiftedDegree => {
                writeln!(f, "shift k={}: deg_x det((I_(i+j+k)(x))) <= k?", self.shift)?;
                for r in &self.rows {
                    writeln!(
                        f,
                        "  n={}: deg_x={} {} (det = {})",
                        r.n,
                        r.degree,
                        r.verdict.as_str(),
                        r.det
                    )?;
                }
            }
            Conjecture::FreeOfS1 => {
                for r in &self.rows {
                    let what = match r.verdict {
                        RowVerdict::Ok => "s1-free",
                        RowVerdict::Exceeds => "depends on s1",
                    };
                    writeln!(f, "n={}: {what} (det = {})", r.n, r.det)?;
                }
            }
        }
        Ok(())
    }
}

/// For each shift `k ≤ kmax` and size `n ≤ nmax`, the `x`-degree of
/// `det((I_{i+j+k}(x)))` and whether it stays `≤ k`.
pub fn conjecture_i_report<R: Ring>(
    a: &Sequence<R>,
    kmax: usize,
    nmax: usize,
    budget: &Budget,
) -> Result<Vec<HankelReport>> {
    budget.admit(nmax, a.is_symbolic())?;
    let x = Var::named("x");
    let cont = continuous_invert(a);
    hankel_matrix(cont.entries(), nmax, kmax)?;
    (0..=kmax)
        .map(|k| {
            let dets = hankel_transform(cont.entries(), nmax, k)?;
            let rows = dets
                .into_iter()
                .enumerate()
                .map(|(i, det)| {
                    let degree = det.degree_in(x);
                    let verdict = if degree <= k as i64 {
                        RowVerdict::Ok
                    } else {
                        RowVerdict::Exceeds
                    };
                    HankelRow {
                        n: i + 1,
                        det,
                        degree,
                        verdict,
                    }
                })
                .collect();
            Ok(HankelReport {
                conjecture: Conjecture::ShiftedDegree,
                shift: k,
                rows,
            })
        })
        .collect()
}

/// For `n ≤ nmax`, `det((Q_{i+j}(x)))` and whether `s1` occurs in it.
pub fn conjecture_ii_report(ctx: &PqContext, nmax: usize, budget: &Budget) -> Result<HankelReport> {
    budget.admit(nmax, ctx.is_symbolic())?;
    let top = if nmax == 0 { 0 } else { 2 * (nmax - 1) };
    let qs = (0..=top)
        .map(|n| ctx.q(n).cloned())
        .collect::<Result<Vec<_>>>()?;
    let s1 = Var::named("s1");
    let rows = hankel_transform(&qs, nmax, 0)?
        .into_iter()
        .enumerate()
        .map(|(i, det)| {
            let degree = det.degree_in(s1).max(0);
            HankelRow {
                n: i + 1,
                verdict: if degree == 0 {
                    RowVerdict::Ok
                } else {
                    RowVerdict::Exceeds
                },
                degree,
                det,
            }
        })
        .collect();
    Ok(HankelReport {
        conjecture: Conjecture::FreeOfS1,
        shift: 0,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{int, Rational};

    fn ints(cs: &[i64]) -> Vec<Rational> {
        cs.iter().map(|&c| int(c)).collect()
    }

    fn p(s: &str) -> MPoly {
        MPoly::parse(s).unwrap()
    }

    #[test]
    fn matrices() {
        let s = ints(&[1, 1, 2, 5]);
        assert_eq!(hankel_matrix(&s, 1, 0).unwrap().get(0, 0), &int(1));
        assert_eq!(hankel_matrix(&s[..3], 2, 0).unwrap().det(), int(1));
        let m = hankel_matrix(&s, 2, 1).unwrap();
        assert_eq!(m.rows(), &[ints(&[1, 2]), ints(&[2, 5])]);
        assert_eq!(m.det(), int(1));
        assert!(matches!(
            hankel_matrix(&s, 3, 0),
            Err(Error::InsufficientLength { needed: 5, got: 4 })
        ));
    }

    #[test]
    fn transforms() {
        let catalan = ints(&[1, 1, 2, 5, 14, 42]);
        assert_eq!(hankel_transform(&catalan, 3, 0).unwrap(), ints(&[1, 1, 1]));
        assert_eq!(hankel_transform(&catalan, 1, 0).unwrap(), ints(&[1]));
        let sym: Vec<MPoly> = ["s0", "s1", "s2"].iter().map(|n| p(n)).collect();
        assert_eq!(
            hankel_transform(&sym, 2, 0).unwrap(),
            vec![p("s0"), p("s0*s2 - s1^2")]
        );
    }

    #[test]
    fn layman_small() {
        let a = Sequence::new(ints(&[1, 1, 1, 1, 1])).unwrap();
        assert_eq!(layman_check(&a, 2).unwrap(), Ok(()));
        assert_eq!(layman_check(&a, 1).unwrap(), Ok(()));
        assert_eq!(
            continuous_layman_check(&Sequence::symbolic("a", 4), 3).unwrap(),
            Ok(())
        );
    }

    #[test]
    fn budget_enforced() {
        let a = Sequence::symbolic("a", 20);
        let e = conjecture_i_report(&a, 0, 6, &Budget::default()).unwrap_err();
        assert!(matches!(
            e,
            Error::Budget {
                requested: 6,
                cap: 5,
                ..
            }
        ));
    }

    #[test]
    fn free_of_s1_small() {
        let ctx = PqContext::symbolic(2);
        let r = conjecture_ii_report(&ctx, 2, &Budget::default()).unwrap();
        assert_eq!(r.rows[0].det, p("1"));
        assert_eq!(r.rows[1].det, p("s2"));
        assert!(r.all_ok());
        assert_eq!(
            r.to_string(),
            "n=1: s1-free (det = 1)\nn=2: s1-free (det = s2)\n"
        );
    }
}
