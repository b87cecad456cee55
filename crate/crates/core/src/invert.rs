//! The Invert transform, its integer iterates, and its continuous
//! interpolation `I^x`.
//!
//! `b = I(a)` is defined by `(1 + t A(t)) (1 - t B(t)) = 1` with
//! `A = Σ a_n t^n`, `B = Σ b_n t^n`. The `k`-fold iterate has the closed form
//! `A / (1 + k t A)` for every integer `k`, and replacing `k` by an
//! indeterminate gives polynomial entries `I_n(x)` of degree at most `n`.

use std::fmt;

use num_traits::Zero;

use crate::check::{compare, compare_all, Verdict};
use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::partition::{multinomial_ext, partitions};
use crate::poly::{MPoly, Var};
use crate::ring::{int, Rational, Ring};
use crate::series::TruncatedSeries;

/// A finite prefix `a_0 … a_N` of a sequence over one coefficient ring.
#[derive(Clone, PartialEq)]
pub struct Sequence<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Sequence<R> {
    pub fn new(coeffs: Vec<R>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Invalid("a sequence needs at least one entry".into()));
        }
        Ok(Sequence { coeffs })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn get(&self, n: usize) -> Option<&R> {
        self.coeffs.get(n)
    }

    /// `Σ a_n t^n` truncated at the sequence's order.
    pub fn series(&self, var: Var) -> TruncatedSeries<R> {
        TruncatedSeries::new(var, self.coeffs.clone()).expect("nonempty")
    }

    pub fn from_series(s: TruncatedSeries<R>) -> Self {
        Sequence {
            coeffs: s.into_coeffs(),
        }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Sequence<S> {
        Sequence {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn to_poly(&self) -> Sequence<MPoly> {
        self.map(Ring::to_poly)
    }

    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::InsufficientPrecision {
                requested: order,
                available: self.order(),
            });
        }
        Ok(Sequence {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    /// True when some entry involves an indeterminate.
    pub fn is_symbolic(&self) -> bool {
        self.coeffs.iter().any(|c| !c.is_constant())
    }
}

impl Sequence<MPoly> {
    /// `(a0, a1, …, a{order})` as indeterminates.
    pub fn symbolic(prefix: &str, order: usize) -> Self {
        Sequence {
            coeffs: (0..=order)
                .map(|i| MPoly::var(Var::indexed(prefix, i)))
                .collect(),
        }
    }

    pub fn substitute(&self, values: &[(Var, MPoly)]) -> Self {
        self.map(|c| c.substitute(values))
    }
}

impl Sequence<Rational> {
    /// Reads `1,2,5/3`.
    pub fn parse(src: &str) -> Result<Self> {
        Sequence::new(parse_rationals(src)?)
    }
}

/// Comma-separated `p` or `p/q` literals.
pub fn parse_rationals(src: &str) -> Result<Vec<Rational>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for item in src.split(',') {
        let lit = item.trim();
        let r: Rational = lit.parse().map_err(|_| Error::Parse {
            pos: offset,
            msg: format!("`{lit}` is not a rational literal"),
        })?;
        out.push(r);
        offset += item.len() + 1;
    }
    Ok(out)
}

impl<R: Ring> fmt::Display for Sequence<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.is_symbolic() { ", " } else { "," };
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl<R: Ring> fmt::Debug for Sequence<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sequence({self})")
    }
}

/// Polynomials in one main indeterminate, indexed from `first_index`.
#[derive(Clone, PartialEq)]
pub struct PolySequence {
    var: Var,
    first_index: usize,
    entries: Vec<MPoly>,
}

impl PolySequence {
    pub fn new(var: Var, first_index: usize, entries: Vec<MPoly>) -> Self {
        PolySequence {
            var,
            first_index,
            entries,
        }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn first_index(&self) -> usize {
        self.first_index
    }

    /// Index of the last entry.
    pub fn order(&self) -> usize {
        self.first_index + self.entries.len() - 1
    }

    pub fn entries(&self) -> &[MPoly] {
        &self.entries
    }

    /// Entry with index `n` (so `get(self.first_index())` is the first one).
    pub fn get(&self, n: usize) -> Option<&MPoly> {
        n.checked_sub(self.first_index)
            .and_then(|i| self.entries.get(i))
    }

    pub fn substitute(&self, values: &[(Var, MPoly)]) -> Self {
        PolySequence {
            var: self.var,
            first_index: self.first_index,
            entries: self.entries.iter().map(|e| e.substitute(values)).collect(),
        }
    }

    /// Specializes the main indeterminate to a rational value.
    pub fn at(&self, value: &Rational) -> Sequence<MPoly> {
        Sequence {
            coeffs: self
                .entries
                .iter()
                .map(|e| e.eval(&[(self.var, value.clone())]))
                .collect(),
        }
    }

    pub fn to_sequence(&self) -> Sequence<MPoly> {
        Sequence {
            coeffs: self.entries.clone(),
        }
    }
}

impl fmt::Display for PolySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PolySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolySequence({self})")
    }
}

fn t() -> Var {
    Var::named("t")
}

/// `A / (1 + k t A)` truncated at the order of `a`.
fn iterate_with<R: Ring>(a: &Sequence<R>, k: &R) -> Sequence<R> {
    let series = a.series(t());
    let den = TruncatedSeries::from_fn(t(), a.order(), |i| {
        if i == 0 {
            R::one()
        } else {
            a.coeffs[i - 1].clone() * k
        }
    });
    Sequence::from_series(series.div(&den).expect("constant term 1 is a unit"))
}

/// `b = I(a)`: `Σ b_n t^n = A / (1 + t A)`.
pub fn invert_transform<R: Ring>(a: &Sequence<R>) -> Sequence<R> {
    iterate_with(a, &R::one())
}

/// `I⁻¹(b)`: `A = B / (1 - t B)`.
pub fn invert_inverse<R: Ring>(b: &Sequence<R>) -> Sequence<R> {
    iterate_with(b, &-R::one())
}

/// `I^k(a)` for any integer `k`, from the closed form `A / (1 + k t A)`.
pub fn iterate_invert<R: Ring>(a: &Sequence<R>, k: i64) -> Sequence<R> {
    if k == 0 {
        return a.clone();
    }
    iterate_with(a, &R::from_int(k))
}

/// `I^x(a)`: the entries `I_n(x)` as polynomials in `x`.
pub fn continuous_invert<R: Ring>(a: &Sequence<R>) -> PolySequence {
    continuous_invert_in(a, Var::named("x"))
}

/// `I^v(a)` with the iteration count named `v`.
pub fn continuous_invert_in<R: Ring>(a: &Sequence<R>, v: Var) -> PolySequence {
    let out = iterate_with(&a.to_poly(), &MPoly::var(v));
    PolySequence::new(v, 0, out.coeffs)
}

/// `I_n(x) = Σ_{k=0}^{n} (-x)^k Σ_{ν ∈ P_{n-k}} (1+k choose ν) a^ν` for a
/// sequence with `a_0 = 1`; `a_j` are the indeterminates `a1, a2, …`.
pub fn formula_i_closed(n: usize) -> MPoly {
    let minus_x = -MPoly::named("x");
    let mut out = MPoly::zero();
    for k in 0..=n {
        let mut inner = MPoly::zero();
        for nu in partitions((n - k) as u32) {
            let weight = multinomial_ext(&int(1 + k as i64), &nu);
            if weight.is_zero() {
                continue;
            }
            let mono = nu.monomial(|j| MPoly::var(Var::indexed("a", j)));
            inner += &mono.scale_by(&weight);
        }
        out += &(inner * &minus_x.pow(k as u32));
    }
    out
}

/// Checks `I^x(I^y(a)) = I^{x+y}(a)` entrywise up to index `order`, with
/// symbolic `a0 … a{order}`.
pub fn group_law_check(order: usize) -> Verdict {
    let (x, y) = (Var::named("x"), Var::named("y"));
    let a = Sequence::symbolic("a", order);
    let inner = continuous_invert_in(&a, y).to_sequence();
    let lhs = continuous_invert_in(&inner, x);
    let rhs = continuous_invert_in(&a, x).substitute(&[(x, MPoly::var(x) + &MPoly::var(y))]);
    compare_all("I^x(I^y(a))", lhs.entries(), rhs.entries())
}

/// Determinant of the `(n+1)×(n+1)` Toeplitz matrix `(b_{i-j})` with
/// `b_{-1} = -1` and `b_{-k} = 0` for `k ≥ 2`. For `b = I(a)` this is `a_n`.
pub fn toeplitz_recover<R: Ring>(b: &Sequence<R>, n: usize) -> Result<R> {
    if b.len() < n + 1 {
        return Err(Error::InsufficientLength {
            needed: n + 1,
            got: b.len(),
        });
    }
    let m = SquareMatrix::from_fn(n + 1, |i, j| {
        if i >= j {
            b.coeffs[i - j].clone()
        } else if j == i + 1 {
            -R::one()
        } else {
            R::zero()
        }
    });
    Ok(m.det())
}

/// Checks `I_n(x; λa) = λ · I_n(λx; a)` with symbolic `a0 … an`, `x` and `λ`
/// (the indeterminate `lam`).
pub fn homogeneity_check(n: usize) -> Verdict {
    let (x, lam) = (Var::named("x"), Var::named("lam"));
    let a = Sequence::symbolic("a", n);
    let scaled = a.map(|c| c.clone() * &MPoly::var(lam));
    let lhs = continuous_invert(&scaled).entries[n].clone();
    let base = continuous_invert(&a).entries[n].clone();
    let rhs = base.substitute(&[(x, MPoly::var(lam) * &MPoly::var(x))]) * &MPoly::var(lam);
    compare(format!("I_{n}"), &lhs, &rhs)
}

/// `(1 + t A)(1 - t B) = 1` modulo `t^{N+1}`, checked directly.
pub fn definition_check<R: Ring>(a: &Sequence<R>, b: &Sequence<R>) -> Verdict {
    let n = a.order().min(b.order());
    let one_plus = a
        .series(t())
        .shift(1)
        .add(&TruncatedSeries::one(t(), a.order()));
    let one_minus = TruncatedSeries::one(t(), b.order()).sub(&b.series(t()).shift(1));
    let prod = one_plus
        .and_then(|l| one_minus.and_then(|r| l.mul(&r)))
        .expect("same variable");
    let one = TruncatedSeries::<R>::one(t(), n);
    for i in 0..=n {
        compare(
            format!("t^{i}"),
            &prod.coeffs()[i].to_poly(),
            &one.coeffs()[i].to_poly(),
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(cs: &[i64]) -> Sequence<Rational> {
        Sequence::new(cs.iter().map(|&c| int(c)).collect()).unwrap()
    }

    fn p(s: &str) -> MPoly {
        MPoly::parse(s).unwrap()
    }

    #[test]
    fn invert_examples() {
        assert_eq!(
            invert_transform(&seq(&[1, 1, 1, 1, 1, 1])),
            seq(&[1, 0, 0, 0, 0, 0])
        );
        assert_eq!(
            invert_transform(&seq(&[1, 0, 0, 0, 0])),
            seq(&[1, -1, 1, -1, 1])
        );
        let a = seq(&[2, -1, 3, 0, 5]);
        assert_eq!(invert_inverse(&invert_transform(&a)), a);
    }

    #[test]
    fn iterates() {
        let a = seq(&[1, 2, -3, 4, 0, 1]);
        assert_eq!(iterate_invert(&a, 0), a);
        assert_eq!(iterate_invert(&iterate_invert(&a, 1), -1), a);
        let thrice = invert_transform(&invert_transform(&invert_transform(&a)));
        assert_eq!(iterate_invert(&a, 3), thrice);
    }

    #[test]
    fn continuous_entries() {
        let c = continuous_invert(&Sequence::symbolic("a", 2));
        assert_eq!(
            c.entries(),
            &[p("a0"), p("a1 - a0^2*x"), p("a2 - 2*a0*a1*x + a0^3*x^2")]
        );
        let at0 = c.at(&int(0));
        assert_eq!(at0, Sequence::symbolic("a", 2));
    }

    #[test]
    fn closed_form_small() {
        assert_eq!(formula_i_closed(0), p("1"));
        assert_eq!(formula_i_closed(1), p("a1 - x"));
        assert_eq!(formula_i_closed(2), p("a2 - 2*a1*x + x^2"));
    }

    #[test]
    fn group_law_small() {
        assert_eq!(group_law_check(2), Ok(()));
    }

    #[test]
    fn toeplitz_small() {
        let b = continuous_invert(&Sequence::symbolic("a", 2)).at(&int(1));
        for n in 0..=2 {
            assert_eq!(
                toeplitz_recover(&b, n).unwrap(),
                MPoly::named(&format!("a{n}"))
            );
        }
        assert!(matches!(
            toeplitz_recover(&seq(&[1]), 1),
            Err(Error::InsufficientLength { needed: 2, got: 1 })
        ));
    }

    #[test]
    fn homogeneity_small() {
        for n in 0..=2 {
            assert_eq!(homogeneity_check(n), Ok(()));
        }
    }

    #[test]
    fn parse_literals() {
        let s = Sequence::parse("1, 2,5/3").unwrap();
        assert_eq!(s.coeffs()[2], crate::ring::rat(5, 3));
        assert_eq!(s.to_string(), "1,2,5/3");
        assert!(matches!(
            Sequence::parse("1,x"),
            Err(Error::Parse { pos: 2, .. })
        ));
        assert!(Sequence::parse("1,,2").is_err());
    }

    #[test]
    fn generating_definition() {
        let a = seq(&[3, -1, 4, 1, -5, 9]);
        assert_eq!(definition_check(&a, &invert_transform(&a)), Ok(()));
        assert!(definition_check(&a, &a).is_err());
    }
}
