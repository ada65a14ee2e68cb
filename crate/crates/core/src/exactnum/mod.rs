//! Exact scalars and linear algebra over `ℚ[i]`.
//!
//! Rationals are `num_rational::BigRational`, which keeps every value in
//! lowest terms with a positive denominator. [`GaussRational`] pairs two of
//! them; [`ExactMatrix`] row-reduces over that field and [`RowSpace`] is the
//! canonical (RREF) presentation of a subspace of `ℚ[i]ⁿ`.

mod gauss;
mod matrix;
mod rowspace;

pub use gauss::{GaussRational, Rational};
pub use matrix::ExactMatrix;
pub use rowspace::RowSpace;

use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("cannot parse scalar literal {0:?}")]
    Parse(alloc::string::String),
}
