//! Exact linear algebra over the rationals and small prime fields.
//!
//! Subspaces are always column spans: a matrix `U` stands for the span of
//! its columns.

mod elim;
mod field;
mod matrix;

pub use field::{format_rational, parse_rational, Field, Fp, Rational};
pub use matrix::{intersection_dim, Matrix, RationalRepr};

/// Convenience for `Rational::from_i64`.
pub fn rat(v: i64) -> Rational {
    Rational::from_i64(v)
}
