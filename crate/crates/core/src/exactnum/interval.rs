//! Rigorous enclosures.
//!
//! [`Approx`] is an outward-rounded `f64` interval used as a cheap filter in
//! sign decisions. [`RatInterval`] is an exact rational interval whose
//! endpoints are rounded outward to a dyadic grid, used when an enclosure has
//! to be made arbitrarily tight.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) struct Approx {
    pub lo: f64,
    pub hi: f64,
}

impl Approx {
    pub const UNKNOWN: Approx = Approx {
        lo: f64::NEG_INFINITY,
        hi: f64::INFINITY,
    };

    fn checked(lo: f64, hi: f64) -> Approx {
        if lo.is_nan() || hi.is_nan() {
            Approx::UNKNOWN
        } else {
            Approx { lo, hi }
        }
    }

    pub fn point_rational(q: &BigRational) -> Approx {
        match q.to_f64() {
            Some(v) if v.is_finite() => {
                if q.is_zero() {
                    return Approx { lo: 0.0, hi: 0.0 };
                }
                // num-rational rounds to nearest; one ulp each side covers it
                Approx::checked(v.next_down().next_down(), v.next_up().next_up())
            }
            _ => Approx::UNKNOWN,
        }
    }

    pub fn sign(&self) -> Option<i8> {
        if self.lo > 0.0 {
            Some(1)
        } else if self.hi < 0.0 {
            Some(-1)
        } else if self.lo == 0.0 && self.hi == 0.0 {
            Some(0)
        } else {
            None
        }
    }

    pub fn add(self, o: Approx) -> Approx {
        Approx::checked((self.lo + o.lo).next_down(), (self.hi + o.hi).next_up())
    }

    pub fn neg(self) -> Approx {
        Approx {
            lo: -self.hi,
            hi: -self.lo,
        }
    }

    pub fn mul(self, o: Approx) -> Approx {
        if (self.lo == 0.0 && self.hi == 0.0) || (o.lo == 0.0 && o.hi == 0.0) {
            return Approx { lo: 0.0, hi: 0.0 };
        }
        let ps = [self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi];
        if ps.iter().any(|p| p.is_nan()) {
            return Approx::UNKNOWN;
        }
        let lo = ps.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = ps.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        Approx::checked(lo.next_down(), hi.next_up())
    }

    pub fn sqrt(self) -> Approx {
        let lo = if self.lo <= 0.0 { 0.0 } else { self.lo.sqrt().next_down().max(0.0) };
        let hi = if self.hi < 0.0 { 0.0 } else { self.hi.sqrt().next_up() };
        Approx::checked(lo, hi)
    }

    pub fn mid(&self) -> f64 {
        if self.lo.is_finite() && self.hi.is_finite() {
            0.5 * (self.lo + self.hi)
        } else {
            f64::NAN
        }
    }

}

#[derive(Clone, Debug, PartialEq)]
pub(crate) struct RatInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

fn pow2(bits: u32) -> BigInt {
    BigInt::one() << bits
}

fn floor_dyadic(q: &BigRational, bits: u32) -> BigRational {
    let scale = pow2(bits);
    let n = (q * BigRational::from_integer(scale.clone())).floor().to_integer();
    BigRational::new(n, scale)
}

fn ceil_dyadic(q: &BigRational, bits: u32) -> BigRational {
    let scale = pow2(bits);
    let n = (q * BigRational::from_integer(scale.clone())).ceil().to_integer();
    BigRational::new(n, scale)
}

impl RatInterval {
    pub fn point(q: BigRational) -> Self {
        RatInterval { lo: q.clone(), hi: q }
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn sign(&self) -> Option<i8> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    /// Outward rounding to multiples of `2^-bits`.
    pub fn round(self, bits: u32) -> Self {
        let lo = if self.lo.denom().bits() > u64::from(bits) { floor_dyadic(&self.lo, bits) } else { self.lo };
        let hi = if self.hi.denom().bits() > u64::from(bits) { ceil_dyadic(&self.hi, bits) } else { self.hi };
        RatInterval { lo, hi }
    }

    pub fn add(&self, o: &RatInterval) -> Self {
        RatInterval {
            lo: &self.lo + &o.lo,
            hi: &self.hi + &o.hi,
        }
    }

    pub fn mul(&self, o: &RatInterval) -> Self {
        let ps = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = ps.iter().min().unwrap().clone();
        let hi = ps.iter().max().unwrap().clone();
        RatInterval { lo, hi }
    }

    /// Enclosure of the square root of the nonnegative part, with endpoints
    /// on the `2^-bits` grid.
    pub fn sqrt(&self, bits: u32) -> Self {
        RatInterval {
            lo: sqrt_floor(&self.lo, bits),
            hi: sqrt_ceil(&self.hi, bits),
        }
    }
}

/// Largest multiple of `2^-bits` not exceeding `sqrt(q)` (0 for q <= 0).
pub(crate) fn sqrt_floor(q: &BigRational, bits: u32) -> BigRational {
    if !q.is_positive() {
        return BigRational::zero();
    }
    let scaled = (q * BigRational::from_integer(pow2(2 * bits))).floor().to_integer();
    BigRational::new(scaled.sqrt(), pow2(bits))
}

/// Smallest multiple of `2^-bits` not below `sqrt(q)` (0 for q <= 0).
pub(crate) fn sqrt_ceil(q: &BigRational, bits: u32) -> BigRational {
    if !q.is_positive() {
        return BigRational::zero();
    }
    let scaled = (q * BigRational::from_integer(pow2(2 * bits))).ceil().to_integer();
    let mut s = scaled.sqrt();
    if &s * &s < scaled {
        s += 1;
    }
    BigRational::new(s, pow2(bits))
}

/// Exact square root of a nonnegative rational, if it is one.
pub(crate) fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

/// Splits a positive integer as `s^2 * m`, pulling out square factors of
/// small primes and a perfect-square remainder. `m` is square-free whenever
/// the cofactor left after trial division is.
pub(crate) fn square_part(n: &BigInt) -> (BigInt, BigInt) {
    debug_assert!(n.sign() == Sign::Plus);
    let mut m = n.clone();
    let mut s = BigInt::one();
    let mut p: u32 = 2;
    while p < 2000 {
        let pp = BigInt::from(p * p);
        if pp > m {
            break;
        }
        let bp = BigInt::from(p);
        while m.is_multiple_of(&pp) {
            m /= &pp;
            s *= &bp;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let r = m.sqrt();
    if &r * &r == m {
        s *= r;
        m = BigInt::one();
    }
    (s, m)
}
