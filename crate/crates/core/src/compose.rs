//! Continuous iteration of composition for `f(t) = t + a_2 t^2 + …`.
//!
//! The `t^n` coefficient of the `k`-fold composite `f^{∘k}` is a polynomial
//! `C_n(k)` of degree at most `n-1`, so `C_n` is recovered by interpolating
//! at `k = 0, …, n-1`. The finite-difference recurrence and the flow law
//! `f^{∘x} ∘ f^{∘y} = f^{∘(x+y)}` are then independent checks.

use num_traits::{One, Zero};

use crate::check::{compare, Verdict};
use crate::error::{Error, Result};
use crate::interp::lagrange_interpolate;
use crate::invert::PolySequence;
use crate::poly::{MPoly, Var};
use crate::ring::{int, Ring};
use crate::series::TruncatedSeries;

fn t() -> Var {
    Var::named("t")
}

fn x() -> Var {
    Var::named("x")
}

/// A series `f(t) = t + O(t^2)`.
#[derive(Clone, PartialEq)]
pub struct IterableSeries<R> {
    f: TruncatedSeries<R>,
}

impl<R: Ring> IterableSeries<R> {
    pub fn new(f: TruncatedSeries<R>) -> Result<Self> {
        let c = f.coeffs();
        let c1_ok = c.len() < 2 || c[1].is_one();
        if !c[0].is_zero() || !c1_ok || f.order() < 1 {
            return Err(Error::NotIterable(f.to_string()));
        }
        Ok(IterableSeries { f })
    }

    /// `t + Σ_{i=2}^{order} tail[i-2] t^i`.
    pub fn from_tail(tail: Vec<R>, order: usize) -> Result<Self> {
        let f = TruncatedSeries::from_fn(t(), order, |i| match i {
            0 => R::zero(),
            1 => R::one(),
            _ => tail.get(i - 2).cloned().unwrap_or_else(R::zero),
        });
        Self::new(f)
    }

    pub fn series(&self) -> &TruncatedSeries<R> {
        &self.f
    }

    pub fn order(&self) -> usize {
        self.f.order()
    }

    /// `f^{∘k}`; `f^{∘0} = t`.
    pub fn iterate(&self, k: usize) -> TruncatedSeries<R> {
        let mut acc = TruncatedSeries::identity(t(), self.order());
        for _ in 0..k {
            acc = self.f.compose(&acc).expect("zero constant term");
        }
        acc
    }

    /// `C_1 … C_order`, each by interpolation at `k = 0 … n-1`.
    pub fn c_polynomials(&self, order: usize) -> Result<PolySequence> {
        if order > self.order() {
            return Err(Error::InsufficientPrecision {
                requested: order,
                available: self.order(),
            });
        }
        let iterates: Vec<TruncatedSeries<R>> = {
            let mut out = vec![TruncatedSeries::identity(t(), self.order())];
            for _ in 1..order.max(1) {
                let next = self
                    .f
                    .compose(out.last().unwrap())
                    .expect("zero constant term");
                out.push(next);
            }
            out
        };
        let entries = (1..=order)
            .map(|n| {
                let points: Vec<_> = (0..n)
                    .map(|k| (int(k as i64), iterates[k].coeffs()[n].to_poly()))
                    .collect();
                lagrange_interpolate(&points, x())
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PolySequence::new(x(), 1, entries))
    }

    /// `C_n(x+1) - C_n(x) = [t^n] Σ_{i≥2} a_i (Σ_j C_j(x) t^j)^i` for
    /// every `n ≤ order`, symbolically in `x`.
    pub fn difference_check(&self, order: usize) -> Result<Verdict> {
        let c = self.c_polynomials(order)?;
        let g = c_series(&c, order);
        let f = self.f.truncate(order)?.to_poly_series();
        let rhs = f.compose(&g)?.sub(&g)?;
        let shift = [(x(), MPoly::var(x()) + &MPoly::one())];
        for n in 1..=order {
            let cn = c.get(n).expect("in range");
            let lhs = cn.substitute(&shift) - cn;
            if let Err(m) = compare(format!("C_{n}(x+1) - C_{n}(x)"), &lhs, &rhs.coeffs()[n]) {
                return Ok(Err(m));
            }
        }
        Ok(Ok(()))
    }

    /// `C_n(k)` equals the `t^n` coefficient of `f^{∘k}` for every
    /// `k = 0 … order`, including nodes never used for interpolation.
    pub fn extrapolation_check(&self, order: usize) -> Result<Verdict> {
        let c = self.c_polynomials(order)?;
        let mut it: TruncatedSeries<R> = TruncatedSeries::identity(t(), self.order());
        for k in 0..=order {
            for n in 1..=order {
                let at = c.get(n).unwrap().eval(&[(x(), int(k as i64))]);
                if let Err(m) = compare(format!("C_{n}({k})"), &at, &it.coeffs()[n].to_poly()) {
                    return Ok(Err(m));
                }
            }
            it = self.f.compose(&it)?;
        }
        Ok(Ok(()))
    }

    /// `Σ C_i(x) t^i ∘ Σ C_i(y) t^i = Σ C_i(x+y) t^i` modulo `t^{order+1}`.
    pub fn group_law_check(&self, order: usize) -> Result<Verdict> {
        let y = Var::named("y");
        let c = self.c_polynomials(order)?;
        let cx = c_series(&c, order);
        let cy = cx.substitute_coeffs(&[(x(), MPoly::var(y))]);
        let cxy = cx.substitute_coeffs(&[(x(), MPoly::var(x()) + &MPoly::var(y))]);
        let lhs = cx.compose(&cy)?;
        for n in 0..=order {
            if let Err(m) = compare(format!("t^{n}"), &lhs.coeffs()[n], &cxy.coeffs()[n]) {
                return Ok(Err(m));
            }
        }
        Ok(Ok(()))
    }
}

impl<R: Ring> std::fmt::Debug for IterableSeries<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "IterableSeries({})", self.f)
    }
}

impl IterableSeries<MPoly> {
    /// `t + a2 t^2 + … + aN t^N` with symbolic `a_i`.
    pub fn symbolic(order: usize) -> Self {
        let tail = (2..=order)
            .map(|i| MPoly::var(Var::indexed("a", i)))
            .collect();
        Self::from_tail(tail, order).expect("t + O(t^2)")
    }
}

/// `Σ_{n=1}^{order} C_n t^n`.
fn c_series(c: &PolySequence, order: usize) -> TruncatedSeries<MPoly> {
    TruncatedSeries::from_fn(t(), order, |n| {
        if n == 0 {
            MPoly::zero()
        } else {
            c.get(n).cloned().expect("in range")
        }
    })
}
