//! Integer partitions as multiplicity vectors, extended multinomial
//! coefficients, and the weight polynomials `R_ν(x)`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::interp::{binomial_poly, falling_factorial};
use crate::poly::{MPoly, Var};
use crate::ring::{factorial, int, Rational, Ring};

/// A partition `(1^{ν_1} 2^{ν_2} ⋯ m^{ν_m})`: `mult[j-1]` is the number of
/// parts of size `j`. Trailing zero multiplicities are never stored, so the
/// empty vector is the partition of zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    mult: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { mult: Vec::new() }
    }

    pub fn from_multiplicities(mut mult: Vec<u32>) -> Self {
        while mult.last() == Some(&0) {
            mult.pop();
        }
        Partition { mult }
    }

    /// `ν_j` for a part size `j ≥ 1`.
    pub fn multiplicity(&self, part: usize) -> u32 {
        assert!(part >= 1, "part sizes start at 1");
        self.mult.get(part - 1).copied().unwrap_or(0)
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.mult
    }

    /// `Σ j ν_j`.
    pub fn weight(&self) -> u32 {
        self.mult
            .iter()
            .enumerate()
            .map(|(i, &n)| (i as u32 + 1) * n)
            .sum()
    }

    /// `Σ ν_j`.
    pub fn part_count(&self) -> u32 {
        self.mult.iter().sum()
    }

    /// `Π ν_j!`.
    pub fn multiplicity_factorials(&self) -> Rational {
        self.mult.iter().map(|&n| factorial(n)).product()
    }

    /// Deletes one part of size `part`, if there is one.
    pub fn remove_part(&self, part: usize) -> Option<Partition> {
        if self.multiplicity(part) == 0 {
            return None;
        }
        let mut mult = self.mult.clone();
        mult[part - 1] -= 1;
        Some(Partition::from_multiplicities(mult))
    }

    /// Part sizes with positive multiplicity, ascending.
    pub fn parts(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.mult
            .iter()
            .enumerate()
            .filter(|(_, &n)| n > 0)
            .map(|(i, &n)| (i + 1, n))
    }

    /// `Π_j coeff(j)^{ν_j}` for a family of ring elements indexed by part size.
    pub fn monomial<R: Ring>(&self, coeff: impl Fn(usize) -> R) -> R {
        self.parts()
            .fold(R::one(), |acc, (j, n)| acc * &coeff(j).pow(n))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mult.is_empty() {
            return f.write_str("()");
        }
        let mut first = true;
        for (j, n) in self.parts() {
            if !first {
                f.write_str(".")?;
            }
            write!(f, "{j}^{n}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Reads the `1^2.3^1` form (`()` for the empty partition).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "()" || s.is_empty() {
            return Ok(Partition::empty());
        }
        let bad = |msg: &str| Error::Parse {
            pos: 0,
            msg: format!("partition `{s}`: {msg}"),
        };
        let mut mult: Vec<u32> = Vec::new();
        for chunk in s.split('.') {
            let (part, count) = chunk
                .split_once('^')
                .ok_or_else(|| bad("expected part^count"))?;
            let part: usize = part.parse().map_err(|_| bad("bad part size"))?;
            let count: u32 = count.parse().map_err(|_| bad("bad multiplicity"))?;
            if part == 0 {
                return Err(bad("part sizes start at 1"));
            }
            if mult.len() < part {
                mult.resize(part, 0);
            }
            mult[part - 1] += count;
        }
        Ok(Partition::from_multiplicities(mult))
    }
}

/// All partitions of `m`, in descending lexicographic order of the
/// multiplicity vector `(ν_1, ν_2, …)`: `1^m` first, `m^1` last.
pub fn partitions(m: u32) -> Vec<Partition> {
    fn go(part: u32, m: u32, remaining: u32, mult: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if part > m || remaining == 0 {
            if remaining == 0 {
                out.push(Partition::from_multiplicities(mult.clone()));
            }
            return;
        }
        for n in (0..=remaining / part).rev() {
            mult.push(n);
            go(part + 1, m, remaining - n * part, mult, out);
            mult.pop();
        }
    }
    let mut out = Vec::new();
    go(1, m, m, &mut Vec::with_capacity(m as usize), &mut out);
    out
}

/// The multinomial `(n choose ν)` continued to arbitrary `n`:
/// `n (n-1) ⋯ (n - Σν_j + 1) / Π ν_j!`.
///
/// Agrees with `n! / (Π ν_j! (n - Σν_j)!)` when `Σν_j ≤ n` and vanishes for
/// naturals `n < Σν_j`.
pub fn multinomial_ext<R: Ring>(n: &R, nu: &Partition) -> R {
    falling_factorial(n, nu.part_count()).scale(&nu.multiplicity_factorials().recip())
}

/// `R_ν(x) = (x + 1 - Σjν_j) · binom(x, Σν_j - 1) · (Σν_j - 1)! / Π ν_j!`,
/// with `R_∅ = 1`.
///
/// `R_ν(n)` is the coefficient of `x^{Σjν_j} s^ν` in the limited-expansion
/// polynomial `P_n`.
pub fn r_poly(nu: &Partition) -> MPoly {
    let count = nu.part_count();
    if count == 0 {
        return MPoly::one();
    }
    let x = MPoly::var(Var::named("x"));
    let linear = x.clone() + &MPoly::constant(int(1) - int(i64::from(nu.weight())));
    let weight = factorial(count - 1) / nu.multiplicity_factorials();
    (linear * &binomial_poly(&x, count - 1)).scale_by(&weight)
}

/// Checks `R_ν(x+1) - R_ν(x) = Σ_{j: ν_j > 0} R_{ν minus one part j}(x)`
/// exactly.
pub fn r_difference_check(nu: &Partition) -> bool {
    r_difference_sides(nu).is_some_and(|(l, r)| l == r)
}

/// Both sides of the `R_ν` difference identity.
pub fn r_difference_sides(nu: &Partition) -> Option<(MPoly, MPoly)> {
    let x = Var::named("x");
    let r = r_poly(nu);
    let shifted = r.substitute(&[(x, MPoly::var(x) + &MPoly::one())]);
    let lhs = shifted - &r;
    let mut rhs = MPoly::zero();
    for (j, _) in nu.parts() {
        rhs += &r_poly(&nu.remove_part(j)?);
    }
    Some((lhs, rhs))
}
