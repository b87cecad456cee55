//! Outcome type for the identity checks.

use std::fmt;

use crate::poly::MPoly;

/// Where two sides of an identity first disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    /// Which coefficient or entry was being compared, e.g. `t^3` or `I_4`.
    pub location: String,
    /// First differing monomial in canonical order.
    pub monomial: String,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: coefficient of {} differs: lhs {} vs rhs {}",
            self.location, self.monomial, self.lhs, self.rhs
        )
    }
}

impl std::error::Error for Mismatch {}

pub type Verdict = Result<(), Mismatch>;

/// Compares two polynomials, reporting the first differing monomial.
pub fn compare(location: impl fmt::Display, lhs: &MPoly, rhs: &MPoly) -> Verdict {
    match lhs.first_difference(rhs) {
        None => Ok(()),
        Some((m, l, r)) => Err(Mismatch {
            location: location.to_string(),
            monomial: m.to_string(),
            lhs: l.to_string(),
            rhs: r.to_string(),
        }),
    }
}

/// Compares two lists entrywise; lengths must match.
pub fn compare_all<'a>(
    label: &str,
    lhs: impl IntoIterator<Item = &'a MPoly>,
    rhs: impl IntoIterator<Item = &'a MPoly>,
) -> Verdict {
    let (l, r): (Vec<_>, Vec<_>) = (lhs.into_iter().collect(), rhs.into_iter().collect());
    for (i, (a, b)) in l.iter().zip(&r).enumerate() {
        compare(format!("{label}[{i}]"), a, b)?;
    }
    if l.len() != r.len() {
        return Err(Mismatch {
            location: label.to_string(),
            monomial: "length".into(),
            lhs: l.len().to_string(),
            rhs: r.len().to_string(),
        });
    }
    Ok(())
}
