//! The ordered-field interface the plane is built over.

use crate::exactnum::{ArithError, Scalar};
use std::fmt::Debug;

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("square root of a negative element")]
    NegativeRadicand,
    #[error("square root of an element with odd valuation")]
    OddValuation,
    #[error("truncation order too small to decide the result")]
    PrecisionExhausted,
}

impl From<ArithError> for FieldError {
    fn from(e: ArithError) -> Self {
        match e {
            ArithError::DivisionByZero => FieldError::DivisionByZero,
            ArithError::NegativeRadicand => FieldError::NegativeRadicand,
        }
    }
}

/// Ordered field with square roots of (some) nonnegative elements.
///
/// `Ctx` carries per-session parameters such as a truncation order; it can
/// be recovered from any element so constants are built alongside existing
/// values.
pub trait OrderedField: Clone + Debug + Send + Sync + Sized {
    type Ctx: Clone + Debug + Send + Sync;

    fn ctx(&self) -> Self::Ctx;
    fn from_scalar(s: Scalar, ctx: &Self::Ctx) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn div(&self, o: &Self) -> Result<Self, FieldError>;
    fn sqrt(&self) -> Result<Self, FieldError>;
    fn sign(&self) -> i8;
    /// Exact textual form.
    fn exact_string(&self) -> String;
    /// Human-readable approximation for reports.
    fn approx_string(&self, digits: usize) -> String;

    /// Least real root of the monic polynomial with lower coefficients
    /// `coeffs` (odd count), when the field supports it.
    fn least_odd_root(_coeffs: &[Self]) -> Option<Self> {
        None
    }

    fn from_int(n: i64, ctx: &Self::Ctx) -> Self {
        Self::from_scalar(Scalar::from_int(n), ctx)
    }

    fn zero_like(&self) -> Self {
        Self::from_int(0, &self.ctx())
    }

    fn abs(&self) -> Self {
        if self.sign() < 0 {
            self.neg()
        } else {
            self.clone()
        }
    }

    fn cmp_to(&self, o: &Self) -> std::cmp::Ordering {
        self.sub(o).sign().cmp(&0)
    }

    fn eq_to(&self, o: &Self) -> bool {
        self.sub(o).sign() == 0
    }
}

impl OrderedField for Scalar {
    type Ctx = ();

    fn ctx(&self) {}

    fn from_scalar(s: Scalar, _: &()) -> Self {
        s
    }

    fn add(&self, o: &Self) -> Self {
        self + o
    }

    fn sub(&self, o: &Self) -> Self {
        self - o
    }

    fn mul(&self, o: &Self) -> Self {
        self * o
    }

    fn neg(&self) -> Self {
        -self
    }

    fn div(&self, o: &Self) -> Result<Self, FieldError> {
        Ok(self.checked_div(o)?)
    }

    fn sqrt(&self) -> Result<Self, FieldError> {
        Ok(self.sqrt_nonneg()?)
    }

    fn sign(&self) -> i8 {
        Scalar::sign(self)
    }

    fn exact_string(&self) -> String {
        self.to_string()
    }

    fn approx_string(&self, digits: usize) -> String {
        self.approx(digits)
    }

    fn least_odd_root(coeffs: &[Self]) -> Option<Self> {
        let p = crate::polyroots::MonicOddPoly::new(coeffs.to_vec()).ok()?;
        Some(crate::polyroots::odd_root(&p))
    }
}
