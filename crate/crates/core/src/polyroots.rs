//! Monic odd-degree polynomials: the Cauchy root bound and a deterministic
//! real root (the least one).

use crate::exactnum::{real_roots, Scalar};
use crate::field::OrderedField;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("degree {0} is not odd")]
    EvenDegree(usize),
}

/// `x^n + a_{n-1} x^{n-1} + .. + a_0` with `n` odd.
#[derive(Debug, Clone)]
pub struct MonicOddPoly {
    coeffs: Vec<Scalar>,
}

impl MonicOddPoly {
    /// Takes `a_0 .. a_{n-1}`; the degree is their count.
    pub fn new(coeffs: Vec<Scalar>) -> Result<Self, PolyError> {
        if coeffs.len().is_multiple_of(2) {
            return Err(PolyError::EvenDegree(coeffs.len()));
        }
        Ok(MonicOddPoly { coeffs })
    }

    pub fn from_i64s(coeffs: &[i64]) -> Result<Self, PolyError> {
        MonicOddPoly::new(coeffs.iter().map(|&c| Scalar::from_int(c)).collect())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs.iter().rev().fold(Scalar::one(), |acc, c| &(&acc * x) + c)
    }

    /// `p(x - c)`, whose roots are those of `p` moved by `c`.
    pub fn translate(&self, c: &Scalar) -> MonicOddPoly {
        // expand (x - c)^k by repeated multiplication of coefficient lists
        let n = self.degree();
        let mut out = vec![Scalar::zero(); n + 1];
        let mut power = vec![Scalar::one()];
        let full: Vec<Scalar> = self.coeffs.iter().cloned().chain([Scalar::one()]).collect();
        for a in &full {
            for (i, p) in power.iter().enumerate() {
                out[i] = &out[i] + &(a * p);
            }
            let mut next = vec![Scalar::zero(); power.len() + 1];
            for (i, p) in power.iter().enumerate() {
                next[i + 1] = &next[i + 1] + p;
                next[i] = &next[i] - &(c * p);
            }
            power = next;
        }
        out.pop();
        MonicOddPoly { coeffs: out }
    }
}

/// `max_i (1 + |a_i|)`, with 1 for `x^1`-style empty maxima.
pub fn cauchy_bound(p: &MonicOddPoly) -> Scalar {
    cauchy_bound_in(p.coeffs()).unwrap_or_else(Scalar::one)
}

/// Cauchy bound over any ordered field; `None` for an empty list.
pub fn cauchy_bound_in<F: OrderedField>(coeffs: &[F]) -> Option<F> {
    let mut it = coeffs.iter().map(|a| F::from_int(1, &a.ctx()).add(&a.abs()));
    let first = it.next()?;
    Some(it.fold(first, |m, v| if v.cmp_to(&m).is_gt() { v } else { m }))
}

/// The least real root.
pub fn odd_root(p: &MonicOddPoly) -> Scalar {
    let full: Vec<Scalar> = p.coeffs.iter().cloned().chain([Scalar::one()]).collect();
    real_roots(&full, 1)
        .pop()
        .expect("odd-degree polynomials have a real root")
}
