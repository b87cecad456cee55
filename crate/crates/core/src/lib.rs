//! Exact computer algebra for limited expansions and the Invert transform.
//!
//! Everything is generic over a coefficient [`Ring`]: the same code runs
//! numerically over [`Rational`] and symbolically over [`MPoly`]. The type
//! aliases below name the two instantiations used throughout.
//!
//! * [`series`]: truncated power series (`⌊·⌋_k`, product, inverse,
//!   composition, powers).
//! * [`partition`]: partitions as multiplicity vectors, extended
//!   multinomials, `R_ν` polynomials.
//! * [`invert`]: the Invert transform, `I^k` and `I^x`, Toeplitz recovery.
//! * [`pq`]: the `P_n`/`Q_n` polynomials and their generating identity.
//! * [`hankel`]: Hankel transforms and the exploratory determinant reports.
//! * [`compose`]: continuous iteration of composition.

pub mod check;
pub mod compose;
pub mod error;
pub mod hankel;
pub mod interp;
pub mod invert;
pub mod matrix;
pub mod partition;
pub mod poly;
pub mod pq;
pub mod ring;
pub mod series;

pub use check::{Mismatch, Verdict};
pub use error::{Error, Result};
pub use poly::{MPoly, Monomial, Var};
pub use ring::{Rational, Ring};

/// Series with rational coefficients.
pub type QSeries = series::TruncatedSeries<Rational>;
/// Series with polynomial coefficients.
pub type PolySeries = series::TruncatedSeries<MPoly>;
/// Rational matrix.
pub type QMatrix = matrix::SquareMatrix<Rational>;
/// Polynomial matrix.
pub type PolyMatrix = matrix::SquareMatrix<MPoly>;
/// Numeric sequence.
pub type QSequence = invert::Sequence<Rational>;
/// Symbolic sequence.
pub type SymbolicSequence = invert::Sequence<MPoly>;
/// Iterable series with rational coefficients.
pub type QIterable = compose::IterableSeries<Rational>;
/// Iterable series with polynomial coefficients.
pub type PolyIterable = compose::IterableSeries<MPoly>;
