//! The coefficient-ring abstraction shared by series, matrices and transforms.
//!
//! Every algorithm in this crate is written once against [`Ring`] and runs
//! over exact rationals (numeric checks) or over [`MPoly`] (symbolic
//! expansion). Both implementations are integral domains, which is what the
//! fraction-free determinant needs.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::poly::MPoly;

/// Exact arbitrary-precision fraction, always kept in lowest terms.
pub type Rational = BigRational;

/// Commutative ring with exact arithmetic, an embedding of the rationals,
/// and exact division where it exists.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    fn from_rational(r: &Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(n)))
    }

    /// `Some(q)` with `q * divisor == self`, or `None` when no such `q` exists.
    fn exact_div(&self, divisor: &Self) -> Option<Self>;

    /// Multiplicative inverse, if `self` is a unit.
    fn unit_inverse(&self) -> Option<Self>;

    /// Rough cost of carrying this value through arithmetic; used for pivoting.
    fn size_hint(&self) -> usize;

    fn is_constant(&self) -> bool;

    fn to_poly(&self) -> MPoly;

    fn scale(&self, r: &Rational) -> Self {
        self.clone() * &Self::from_rational(r)
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc *= &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * &base;
            }
        }
        acc
    }
}

impl Ring for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            None
        } else {
            Some(self / divisor)
        }
    }

    fn unit_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn size_hint(&self) -> usize {
        if self.is_zero() {
            0
        } else {
            (self.numer().abs().bits() + self.denom().bits()) as usize
        }
    }

    fn is_constant(&self) -> bool {
        true
    }

    fn to_poly(&self) -> MPoly {
        MPoly::constant(self.clone())
    }
}

/// Shorthand for the rational `n / d`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for the integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n!` as a rational.
pub fn factorial(n: u32) -> Rational {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    Rational::from_integer(acc)
}
