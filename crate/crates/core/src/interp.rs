use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{MPoly, Var};
use crate::ring::{factorial, int, Rational, Ring};

/// The unique polynomial in `var` of degree below `points.len()` through
/// every `(node, value)` pair. Values may themselves be polynomials in other
/// indeterminates.
pub fn lagrange_interpolate(points: &[(Rational, MPoly)], var: Var) -> Result<MPoly> {
    if points.is_empty() {
        return Err(Error::Invalid(
            "interpolation needs at least one point".into(),
        ));
    }
    for (i, (a, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(b, _)| b == a) {
            return Err(Error::DuplicateNode(a.to_string()));
        }
    }
    let x = MPoly::var(var);
    let mut out = MPoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = MPoly::one();
        let mut denom = Rational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i != j {
                basis *= &(x.clone() - &MPoly::constant(xj.clone()));
                denom *= xi - xj;
            }
        }
        out += &(basis.scale_by(&denom.recip()) * yi);
    }
    Ok(out)
}

/// `arg (arg - 1) ⋯ (arg - m + 1) / m!`, the binomial coefficient as a
/// polynomial in its upper argument. `m = 0` gives 1.
pub fn binomial_poly<R: Ring>(arg: &R, m: u32) -> R {
    falling_factorial(arg, m).scale(&factorial(m).recip())
}

/// `arg (arg - 1) ⋯ (arg - m + 1)`.
pub fn falling_factorial<R: Ring>(arg: &R, m: u32) -> R {
    let mut acc = R::one();
    for i in 0..m {
        acc *= &(arg.clone() - &R::from_rational(&int(i64::from(i))));
    }
    acc
}
