//! Limited-expansion polynomials `P_n`, their reversals `Q_n`, the closed
//! form for `P_n`, and the generating-series identity they satisfy.
//!
//! Given `s(x) = 1 + s_1 x + s_2 x^2 + …`, set `P_0 = 1` and
//! `P_k = ⌊P_{k-1} · s⌋_k`; then `Q_n(x) = x^n P_n(1/x)`. With
//! `G_0(t) = Σ Q_n(0) t^n` one has `Σ Q_n(x) t^n = G_0 / (1 - t x G_0)`,
//! i.e. `I^x(Q(0)) = Q(-x)`.

use std::sync::OnceLock;

use num_traits::{One, Zero};

use crate::check::{compare, Verdict};
use crate::error::{Error, Result};
use crate::invert::{continuous_invert, Sequence};
use crate::partition::{multinomial_ext, partitions};
use crate::poly::{MPoly, Var};
use crate::ring::{int, Rational};
use crate::series::TruncatedSeries;

fn x() -> Var {
    Var::named("x")
}

/// Source series `s` up to order `N`, with the `P` and `Q` polynomials
/// computed on first use and shared between threads afterwards.
#[derive(Debug)]
pub struct PqContext {
    s: Vec<MPoly>,
    p: OnceLock<Vec<MPoly>>,
    q: OnceLock<Vec<MPoly>>,
}

impl Clone for PqContext {
    fn clone(&self) -> Self {
        PqContext::from_coeffs(self.s.clone()).expect("already validated")
    }
}

impl PqContext {
    /// `s = 1 + s1 x + … + sN x^N` with every `s_j` an indeterminate.
    pub fn symbolic(order: usize) -> Self {
        let mut s = vec![MPoly::one()];
        s.extend((1..=order).map(|j| MPoly::var(Var::indexed("s", j))));
        PqContext::from_coeffs(s).expect("s_0 = 1")
    }

    /// Numeric `s`; `coeffs` starts at `s_0`, which must be 1. Coefficients
    /// past the end of `coeffs` are zero (the series is a polynomial).
    pub fn numeric(coeffs: &[Rational], order: usize) -> Result<Self> {
        let s = (0..=order)
            .map(|j| MPoly::constant(coeffs.get(j).cloned().unwrap_or_else(Rational::zero)))
            .collect();
        Self::from_coeffs(s)
    }

    /// `s_0 … s_N` as arbitrary polynomials; `s_0` must be 1.
    pub fn from_coeffs(s: Vec<MPoly>) -> Result<Self> {
        match s.first() {
            Some(c) if c.is_one() => {}
            Some(c) => {
                return Err(Error::Invalid(format!(
                    "source series must have constant term 1, got {c}"
                )))
            }
            None => return Err(Error::Invalid("empty source series".into())),
        }
        if s.iter().any(|c| c.contains_var(x())) {
            return Err(Error::Invalid(
                "source coefficients may not involve the main variable x".into(),
            ));
        }
        Ok(PqContext {
            s,
            p: OnceLock::new(),
            q: OnceLock::new(),
        })
    }

    pub fn order(&self) -> usize {
        self.s.len() - 1
    }

    pub fn source(&self) -> &[MPoly] {
        &self.s
    }

    pub fn is_symbolic(&self) -> bool {
        self.s.iter().any(|c| c.as_constant().is_none())
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.order() {
            return Err(Error::InsufficientPrecision {
                requested: n,
                available: self.order(),
            });
        }
        Ok(())
    }

    fn p_all(&self) -> &[MPoly] {
        self.p.get_or_init(|| {
            let n = self.order();
            let s = TruncatedSeries::new(x(), self.s.clone()).expect("nonempty");
            let mut cur = TruncatedSeries::one(x(), n);
            let mut out = vec![MPoly::one()];
            for k in 1..=n {
                let next = cur.mul(&s).expect("same variable");
                let kept = next.truncate(k).expect("k <= order");
                out.push(MPoly::from_coefficients(x(), kept.coeffs()));
                cur = TruncatedSeries::from_poly_coeffs(x(), n, kept.coeffs());
            }
            out
        })
    }

    fn q_all(&self) -> &[MPoly] {
        self.q.get_or_init(|| {
            self.p_all()
                .iter()
                .enumerate()
                .map(|(n, p)| {
                    let mut cs = p.coefficients_in(x());
                    cs.resize(n + 1, MPoly::zero());
                    cs.reverse();
                    MPoly::from_coefficients(x(), &cs)
                })
                .collect()
        })
    }

    /// `P_n`.
    pub fn p(&self, n: usize) -> Result<&MPoly> {
        self.check(n)?;
        Ok(&self.p_all()[n])
    }

    /// `Q_n(x) = x^n P_n(1/x)`.
    pub fn q(&self, n: usize) -> Result<&MPoly> {
        self.check(n)?;
        Ok(&self.q_all()[n])
    }

    /// `Q_n(0)`, the leading coefficient of `P_n`.
    pub fn q_at_zero(&self, n: usize) -> Result<MPoly> {
        Ok(self.q(n)?.eval(&[(x(), Rational::zero())]))
    }

    /// `s^ν = Π s_j^{ν_j}` from this context's coefficients.
    fn s_power(&self, nu: &crate::partition::Partition) -> MPoly {
        nu.monomial(|j| self.s[j].clone())
    }

    /// `Σ_{k=0}^{n} x^k Σ_{ν ∈ P_k} ((n+1-k)/(n+1-Σν_j)) (n choose ν) s^ν`.
    pub fn formula_p_closed(&self, n: usize) -> Result<MPoly> {
        self.check(n)?;
        let mut out = MPoly::zero();
        for k in 0..=n {
            let mut coeff = MPoly::zero();
            for nu in partitions(k as u32) {
                let c = i64::from(nu.part_count());
                let ratio = int((n + 1 - k) as i64) / int(n as i64 + 1 - c);
                let w = ratio * multinomial_ext(&int(n as i64), &nu);
                if !w.is_zero() {
                    coeff += &self.s_power(&nu).scale_by(&w);
                }
            }
            out += &(coeff * &MPoly::var(x()).pow(k as u32));
        }
        Ok(out)
    }

    /// Both generating series in `t` up to order `n`: `Σ Q_j(x) t^j` and
    /// `Σ Q_j(0) t^j`.
    fn q_series(&self, n: usize) -> Result<(TruncatedSeries<MPoly>, TruncatedSeries<MPoly>)> {
        self.check(n)?;
        let t = Var::named("t");
        let qx = TruncatedSeries::from_fn(t, n, |j| self.q_all()[j].clone());
        let q0 = qx.map(|c| c.eval(&[(x(), Rational::zero())]));
        Ok((qx, q0))
    }

    /// Verifies `(Σ Q_j(x) t^j)(1 - t x Σ Q_j(0) t^j) = Σ Q_j(0) t^j`
    /// modulo `t^{n+1}` by direct expansion.
    pub fn verify_generating_identity(&self, n: usize) -> Result<Verdict> {
        let (qx, q0) = self.q_series(n)?;
        let t = qx.var();
        let factor = TruncatedSeries::one(t, n)
            .sub(&q0.shift(1).scale(&MPoly::var(x())))
            .expect("same variable");
        let lhs = qx.mul(&factor).expect("same variable");
        for j in 0..=n {
            if let Err(m) = compare(format!("t^{j}"), &lhs.coeffs()[j], &q0.coeffs()[j]) {
                return Ok(Err(m));
            }
        }
        Ok(Ok(()))
    }

    /// Verifies `I^x(Q(0)) = Q(-x)` entrywise up to index `n`.
    pub fn verify_invert_link(&self, n: usize) -> Result<Verdict> {
        let (_, q0) = self.q_series(n)?;
        let cont = continuous_invert(&Sequence::from_series(q0));
        let minus_x = [(x(), -MPoly::var(x()))];
        for j in 0..=n {
            let lhs = cont.entries()[j].substitute(&minus_x);
            if let Err(m) = compare(format!("Q_{j}"), &lhs, &self.q_all()[j]) {
                return Ok(Err(m));
            }
        }
        Ok(Ok(()))
    }

    /// Verifies the closed form against the recursion for every `n ≤ max`.
    pub fn verify_closed_form(&self, max: usize) -> Result<Verdict> {
        for n in 0..=max {
            let closed = self.formula_p_closed(n)?;
            if let Err(m) = compare(format!("P_{n}"), &closed, self.p(n)?) {
                return Ok(Err(m));
            }
        }
        Ok(Ok(()))
    }

    /// A context of the same order with every `s_j` replaced by a rational.
    pub fn specialize(&self, values: &[(Var, Rational)]) -> PqContext {
        let s = self.s.iter().map(|c| c.eval(values)).collect();
        PqContext::from_coeffs(s).expect("s_0 stays 1")
    }
}
