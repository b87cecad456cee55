//! Truncated formal power series `c_0 + c_1 v + … + c_N v^N + O(v^{N+1})`.
//!
//! The order `N` is part of the value: every result is exact modulo
//! `v^{N+1}`, binary operations truncate to the smaller order, and asking
//! for coefficients beyond `N` is an error rather than a silent zero.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{MPoly, Var};
use crate::ring::{Rational, Ring};

#[derive(Clone, PartialEq)]
pub struct TruncatedSeries<R> {
    var: Var,
    coeffs: Vec<R>,
}

impl<R: Ring> TruncatedSeries<R> {
    /// Series with the given coefficients; the order is `coeffs.len() - 1`.
    pub fn new(var: Var, coeffs: Vec<R>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Invalid(
                "a series needs at least one coefficient".into(),
            ));
        }
        Ok(TruncatedSeries { var, coeffs })
    }

    pub fn from_fn(var: Var, order: usize, f: impl FnMut(usize) -> R) -> Self {
        TruncatedSeries {
            var,
            coeffs: (0..=order).map(f).collect(),
        }
    }

    /// Coefficients of a polynomial, zero-extended up to `order`. Unlike
    /// [`truncate`](Self::truncate) this is not padding: the tail of a
    /// polynomial genuinely vanishes.
    pub fn from_poly_coeffs(var: Var, order: usize, coeffs: &[R]) -> Self {
        Self::from_fn(var, order, |i| {
            coeffs.get(i).cloned().unwrap_or_else(R::zero)
        })
    }

    pub fn zero(var: Var, order: usize) -> Self {
        Self::from_fn(var, order, |_| R::zero())
    }

    pub fn one(var: Var, order: usize) -> Self {
        Self::constant(var, order, R::one())
    }

    pub fn constant(var: Var, order: usize, c: R) -> Self {
        let mut s = Self::zero(var, order);
        s.coeffs[0] = c;
        s
    }

    /// The series `v` itself (order must be at least 1 to be faithful).
    pub fn identity(var: Var, order: usize) -> Self {
        Self::from_fn(var, order, |i| if i == 1 { R::one() } else { R::zero() })
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Result<&R> {
        self.coeffs.get(i).ok_or(Error::InsufficientPrecision {
            requested: i,
            available: self.order(),
        })
    }

    /// `⌊f⌋_k`: keep coefficients `0..=k`.
    pub fn truncate(&self, k: usize) -> Result<Self> {
        if k > self.order() {
            return Err(Error::InsufficientPrecision {
                requested: k,
                available: self.order(),
            });
        }
        Ok(TruncatedSeries {
            var: self.var,
            coeffs: self.coeffs[..=k].to_vec(),
        })
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> TruncatedSeries<S> {
        TruncatedSeries {
            var: self.var,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    fn check_var(&self, other: &Self) -> Result<()> {
        if self.var != other.var {
            return Err(Error::VariableMismatch {
                left: self.var.name(),
                right: other.var.name(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        let n = self.order().min(other.order());
        Ok(Self::from_fn(self.var, n, |i| {
            self.coeffs[i].clone() + &other.coeffs[i]
        }))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        let n = self.order().min(other.order());
        Ok(Self::from_fn(self.var, n, |i| {
            self.coeffs[i].clone() - &other.coeffs[i]
        }))
    }

    pub fn neg(&self) -> Self {
        self.map(|c| -c.clone())
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|x| x.clone() * c)
    }

    /// `v^k · self`, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        Self::from_fn(self.var, self.order(), |i| {
            if i >= k {
                self.coeffs[i - k].clone()
            } else {
                R::zero()
            }
        })
    }

    /// Cauchy product, truncated at the smaller order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = Self::zero(self.var, n);
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] += &(a.clone() * b);
                }
            }
        }
        out
    }

    /// Multiplicative inverse via `g_n = -(1/c_0) Σ_{i=1}^{n} c_i g_{n-i}`.
    pub fn inverse(&self) -> Result<Self> {
        let inv0 = self.coeffs[0]
            .unit_inverse()
            .ok_or_else(|| Error::NotInvertible(self.coeffs[0].to_string()))?;
        let n = self.order();
        let mut g: Vec<R> = Vec::with_capacity(n + 1);
        g.push(inv0.clone());
        for k in 1..=n {
            let mut acc = R::zero();
            for i in 1..=k {
                if !self.coeffs[i].is_zero() {
                    acc += &(self.coeffs[i].clone() * &g[k - i]);
                }
            }
            g.push(-(acc * &inv0));
        }
        Ok(TruncatedSeries {
            var: self.var,
            coeffs: g,
        })
    }

    /// `self / den` as `self · den⁻¹`.
    pub fn div(&self, den: &Self) -> Result<Self> {
        self.mul(&den.inverse()?)
    }

    /// `f(g(v))` by Horner's rule in the truncated ring; `g` must have zero
    /// constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        self.check_var(inner)?;
        if !inner.coeffs[0].is_zero() {
            return Err(Error::CompositionDomain(inner.coeffs[0].to_string()));
        }
        let n = self.order().min(inner.order());
        let g = inner.truncate(n)?;
        let mut acc = Self::constant(self.var, n, self.coeffs[n].clone());
        for c in self.coeffs[..n].iter().rev() {
            acc = acc.mul_unchecked(&g);
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// `self^e` by repeated squaring; `self^0 = 1`.
    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.var, self.order());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    pub fn to_poly_series(&self) -> TruncatedSeries<MPoly> {
        self.map(|c| c.to_poly())
    }
}

impl TruncatedSeries<MPoly> {
    /// Substitutes a rational value for an indeterminate in every coefficient.
    pub fn eval_coeffs(&self, values: &[(Var, Rational)]) -> Self {
        self.map(|c| c.eval(values))
    }

    pub fn substitute_coeffs(&self, values: &[(Var, MPoly)]) -> Self {
        self.map(|c| c.substitute(values))
    }
}

impl<R: Ring> fmt::Display for TruncatedSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.var;
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let compound = text.contains(" + ") || text.contains(" - ");
            let (neg, body) = match text.strip_prefix('-') {
                Some(rest) if !compound => (true, rest.to_string()),
                _ => (false, text),
            };
            let coef = if compound { format!("({body})") } else { body };
            let term = match (i, coef.as_str()) {
                (0, _) => coef,
                (_, "1") if i == 1 => v.to_string(),
                (_, "1") => format!("{v}^{i}"),
                (1, _) => format!("{coef}*{v}"),
                _ => format!("{coef}*{v}^{i}"),
            };
            if first {
                if neg {
                    f.write_str("-")?;
                }
                f.write_str(&term)?;
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
                f.write_str(&term)?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O({v}^{})", self.order() + 1)
    }
}

impl<R: Ring> fmt::Debug for TruncatedSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
