//! Exact real arithmetic: rationals extended by square roots and by real
//! roots of rational polynomials, with decidable sign.

pub(crate) mod approx_point;
mod genalg;
pub(crate) mod generator;
mod hashing;
mod norm;
pub(crate) mod interval;
pub(crate) mod linalg;
mod parse;
pub mod poly;
mod scalar;

pub use parse::{parse_scalar, ScalarParseError};
pub use poly::{QPoly, RootInterval};
pub use scalar::Scalar;
pub(crate) use norm::real_roots;

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("square root of a negative number")]
    NegativeRadicand,
}
