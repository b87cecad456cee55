//! Sparse multivariate polynomials over the rationals.

mod monomial;
mod parse;
mod var;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

pub use monomial::Monomial;
pub use var::Var;

use crate::error::{Error, Result};
use crate::ring::{Rational, Ring};

/// A polynomial in named indeterminates with exact rational coefficients.
///
/// Terms live in a map keyed by [`Monomial`], so iteration follows the
/// canonical term order and no zero coefficient is ever stored. Two
/// polynomials are equal iff their canonical forms are identical.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MPoly {
    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        MPoly { terms }
    }

    pub fn int(n: i64) -> Self {
        Self::constant(crate::ring::int(n))
    }

    pub fn var(v: Var) -> Self {
        Self::term(Monomial::var(v), Rational::one())
    }

    /// The indeterminate called `name`; panics on a malformed name.
    pub fn named(name: &str) -> Self {
        Self::var(Var::named(name))
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut out = MPoly::zero();
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    pub fn parse(src: &str) -> Result<Self> {
        parse::parse(src)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Terms in ascending canonical order.
    pub fn terms(
        &self,
    ) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The greatest term in the canonical order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.last_key_value()
    }

    /// `Some(c)` if the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    /// Degree in `v`; the zero polynomial has degree -1.
    pub fn degree_in(&self, v: Var) -> i64 {
        self.terms
            .keys()
            .map(|m| i64::from(m.degree_in(v)))
            .max()
            .unwrap_or(-1)
    }

    /// Total degree; the zero polynomial has degree -1.
    pub fn total_degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|m| i64::from(m.total_degree()))
            .max()
            .unwrap_or(-1)
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms.keys().flat_map(|m| m.vars()).collect()
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.degree_in(v) > 0)
    }

    pub fn pow(&self, e: u32) -> MPoly {
        Ring::pow(self, e)
    }

    pub fn scale_by(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * r)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    /// Replaces each listed indeterminate by a polynomial value.
    pub fn substitute(&self, values: &[(Var, MPoly)]) -> MPoly {
        if values.is_empty() {
            return self.clone();
        }
        let mut powers: HashMap<(Var, u32), MPoly> = HashMap::new();
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut factor = MPoly::constant(c.clone());
            for &(v, e) in m.pairs() {
                match values.iter().find(|p| p.0 == v) {
                    Some((_, val)) => {
                        let p = powers.entry((v, e)).or_insert_with(|| val.pow(e));
                        factor *= &*p;
                    }
                    None => kept.push((v, e)),
                }
            }
            out += &factor.mul_monomial(&Monomial::from_pairs(kept));
        }
        out
    }

    /// Replaces each listed indeterminate by a rational value.
    pub fn eval(&self, values: &[(Var, Rational)]) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut kept = Vec::new();
            for &(v, e) in m.pairs() {
                match values.iter().find(|p| p.0 == v) {
                    Some((_, val)) => coeff *= Ring::pow(val, e),
                    None => kept.push((v, e)),
                }
            }
            out.add_term(Monomial::from_pairs(kept), coeff);
        }
        out
    }

    /// Substitution addressed by name; a name that is not a valid
    /// indeterminate is rejected.
    pub fn substitute_named(&self, name: &str, value: &MPoly) -> Result<MPoly> {
        let v = Var::new(name).map_err(|_| Error::UnknownVariable(name.to_string()))?;
        Ok(self.substitute(&[(v, value.clone())]))
    }

    /// Coefficients with respect to `v`: entry `i` is the coefficient of `v^i`.
    pub fn coefficients_in(&self, v: Var) -> Vec<MPoly> {
        let deg = self.degree_in(v);
        let mut out = vec![MPoly::zero(); (deg + 1) as usize];
        for (m, c) in &self.terms {
            let (rest, e) = m.split_off(v);
            out[e as usize].add_term(rest, c.clone());
        }
        out
    }

    /// `sum_i coeffs[i] * v^i`.
    pub fn from_coefficients(v: Var, coeffs: &[MPoly]) -> MPoly {
        let mut out = MPoly::zero();
        for (i, c) in coeffs.iter().enumerate() {
            for (m, k) in &c.terms {
                out.add_term(m.mul(&Monomial::var_pow(v, i as u32)), k.clone());
            }
        }
        out
    }

    /// First monomial, in canonical order, where the two polynomials disagree,
    /// with the coefficient on each side.
    pub fn first_difference(&self, other: &MPoly) -> Option<(Monomial, Rational, Rational)> {
        let diff = self.clone() - other;
        diff.terms
            .keys()
            .next()
            .map(|m| (m.clone(), self.coeff(m), other.coeff(m)))
    }

    /// Exact quotient by `divisor`, or `None` when it does not divide.
    pub fn div_exact(&self, divisor: &MPoly) -> Option<MPoly> {
        if divisor.is_zero() {
            return None;
        }
        if let Some(c) = divisor.as_constant() {
            return Some(self.scale_by(&c.recip()));
        }
        let (lead_m, lead_c) = divisor.leading_term().expect("nonzero");
        let (lead_m, lead_c) = (lead_m.clone(), lead_c.clone());
        let mut rem = self.terms.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            let qm = m.div(&lead_m)?;
            let qc = c / &lead_c;
            for (dm, dc) in divisor.terms.iter().rev().skip(1) {
                let key = dm.mul(&qm);
                let delta = &qc * dc;
                match rem.entry(key) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(-delta);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() -= delta;
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                }
            }
            quot.push((qm, qc));
        }
        Some(MPoly {
            terms: quot.into_iter().collect(),
        })
    }

    fn mul_ref(&self, other: &MPoly) -> MPoly {
        if self.is_zero() || other.is_zero() {
            return MPoly::zero();
        }
        let (small, big) = if self.nterms() <= other.nterms() {
            (self, other)
        } else {
            (other, self)
        };
        if small.nterms() == 1 {
            let (m, c) = small.terms.iter().next().unwrap();
            return MPoly {
                terms: big.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
            };
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(small.nterms() * big.nterms() / 2 + 1);
        for (ma, ca) in &small.terms {
            for (mb, cb) in &big.terms {
                let c = ca * cb;
                match acc.entry(ma.mul(mb)) {
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        *e.get_mut() += c;
                    }
                }
            }
        }
        MPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    fn add_ref(&self, other: &MPoly, negate: bool) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), if negate { -c } else { c.clone() });
        }
        out
    }
}

impl FromStr for MPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        MPoly::parse(s)
    }
}

impl From<Rational> for MPoly {
    fn from(c: Rational) -> Self {
        MPoly::constant(c)
    }
}

impl From<Var> for MPoly {
    fn from(v: Var) -> Self {
        MPoly::var(v)
    }
}

impl Zero for MPoly {
    fn zero() -> Self {
        MPoly {
            terms: BTreeMap::new(),
        }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MPoly {
    fn one() -> Self {
        MPoly::constant(Rational::one())
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(mut self) -> MPoly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -self.clone()
    }
}

macro_rules! binop {
    ($tr:ident, $f:ident, $body:expr) => {
        impl $tr<&MPoly> for &MPoly {
            type Output = MPoly;
            fn $f(self, rhs: &MPoly) -> MPoly {
                $body(self, rhs)
            }
        }
        impl $tr<MPoly> for MPoly {
            type Output = MPoly;
            fn $f(self, rhs: MPoly) -> MPoly {
                $body(&self, &rhs)
            }
        }
        impl $tr<&MPoly> for MPoly {
            type Output = MPoly;
            fn $f(self, rhs: &MPoly) -> MPoly {
                $body(&self, rhs)
            }
        }
        impl $tr<MPoly> for &MPoly {
            type Output = MPoly;
            fn $f(self, rhs: MPoly) -> MPoly {
                $body(self, &rhs)
            }
        }
    };
}

binop!(Add, add, |a: &MPoly, b: &MPoly| a.add_ref(b, false));
binop!(Sub, sub, |a: &MPoly, b: &MPoly| a.add_ref(b, true));
binop!(Mul, mul, |a: &MPoly, b: &MPoly| a.mul_ref(b));

impl AddAssign<&MPoly> for MPoly {
    fn add_assign(&mut self, rhs: &MPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&MPoly> for MPoly {
    fn sub_assign(&mut self, rhs: &MPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl MulAssign<&MPoly> for MPoly {
    fn mul_assign(&mut self, rhs: &MPoly) {
        *self = self.mul_ref(rhs);
    }
}

impl Ring for MPoly {
    fn from_rational(r: &Rational) -> Self {
        MPoly::constant(r.clone())
    }

    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        self.div_exact(divisor)
    }

    fn unit_inverse(&self) -> Option<Self> {
        match self.as_constant() {
            Some(c) if !c.is_zero() => Some(MPoly::constant(c.recip())),
            _ => None,
        }
    }

    fn size_hint(&self) -> usize {
        self.nterms()
    }

    fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    fn to_poly(&self) -> MPoly {
        self.clone()
    }

    fn scale(&self, r: &Rational) -> Self {
        self.scale_by(r)
    }
}

/// Writes a signed term body (`2*x`, `-1/2*a0^2`, `x`, `-x`, `3`).
fn write_term(f: &mut fmt::Formatter<'_>, m: &Monomial, c: &Rational) -> fmt::Result {
    if m.is_one() {
        return write!(f, "{c}");
    }
    if c.is_one() {
        write!(f, "{m}")
    } else if (-c).is_one() {
        write!(f, "-{m}")
    } else {
        write!(f, "{c}*{m}")
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i == 0 {
                write_term(f, m, c)?;
            } else if c.is_negative() {
                f.write_str(" - ")?;
                write_term(f, m, &-c)?;
            } else {
                f.write_str(" + ")?;
                write_term(f, m, c)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}
