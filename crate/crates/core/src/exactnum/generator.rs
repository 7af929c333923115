//! Real algebraic generators: a root of a square-free rational polynomial
//! pinned down by an isolating interval.

use super::interval::{Approx, RatInterval};
use super::poly::{sign_of, QPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use std::cmp::Ordering;
use std::sync::RwLock;

pub(crate) struct Generator {
    poly: QPoly,
    init: (BigRational, BigRational),
    /// refined isolating interval; poly changes sign strictly across it
    current: RwLock<(BigRational, BigRational)>,
    sign_lo: i8,
    approx: Approx,
    key: u64,
}

pub(crate) enum RootValue {
    Rational(BigRational),
    Irrational(Box<Generator>),
}

impl Generator {
    /// `poly` must be square-free with exactly one root in `(lo, hi)` and
    /// nonzero values at both endpoints.
    pub fn create(poly: QPoly, lo: BigRational, hi: BigRational) -> RootValue {
        let poly = poly.monic();
        let sign_lo = poly.sign_at(&lo);
        debug_assert!(sign_lo != 0 && poly.sign_at(&hi) == -sign_lo);
        let mut g = Generator {
            key: 0,
            approx: Approx::UNKNOWN,
            sign_lo,
            current: RwLock::new((lo.clone(), hi.clone())),
            init: (lo, hi),
            poly,
        };
        if let Some(r) = g.rational_root() {
            return RootValue::Rational(r);
        }
        g.key = super::hashing::hash_generator(&g.poly, &g.init);
        let (lo, hi) = g.interval_within(60);
        let lo_f = Approx::point_rational(&lo).lo;
        let hi_f = Approx::point_rational(&hi).hi;
        g.approx = if lo_f.is_finite() && hi_f.is_finite() {
            Approx { lo: lo_f, hi: hi_f }
        } else {
            Approx::UNKNOWN
        };
        RootValue::Irrational(Box::new(g))
    }

    pub fn poly(&self) -> &QPoly {
        &self.poly
    }

    pub fn degree(&self) -> usize {
        self.poly.degree().unwrap()
    }

    pub fn key(&self) -> u64 {
        self.key
    }

    pub fn approx(&self) -> Approx {
        self.approx
    }

    /// Isolating interval of width at most `2^-bits`.
    pub fn interval_within(&self, bits: u32) -> (BigRational, BigRational) {
        let target = BigRational::new(BigInt::one(), BigInt::one() << bits);
        {
            let cur = self.current.read().unwrap();
            if &cur.1 - &cur.0 <= target {
                return cur.clone();
            }
        }
        let mut cur = self.current.write().unwrap();
        let (mut lo, mut hi) = cur.clone();
        let two = BigRational::from_integer(2.into());
        while &hi - &lo > target {
            let mid = (&lo + &hi) / &two;
            let s = self.poly.sign_at(&mid);
            // the root is irrational, so s != 0
            if s == self.sign_lo {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        *cur = (lo.clone(), hi.clone());
        (lo, hi)
    }

    pub fn enclose(&self, bits: u32) -> RatInterval {
        let (lo, hi) = self.interval_within(bits);
        RatInterval { lo, hi }
    }

    /// Finds a rational root inside the isolating interval, if any, by
    /// testing the few fractions whose denominator divides the leading
    /// coefficient of the primitive integer polynomial.
    fn rational_root(&self) -> Option<BigRational> {
        let prim = self.poly.primitive_rational();
        let lead = prim.leading()?.numer().abs();
        let divisors = small_divisors(&lead)?;
        let max_d = divisors.iter().max().cloned().unwrap_or_else(BigInt::one);
        // width below 1/(2 max_d^2) leaves at most one candidate per divisor
        let bits = (2 * max_d.bits() + 2) as u32;
        let (lo, hi) = self.interval_within(bits);
        for q in divisors {
            let qr = BigRational::from_integer(q.clone());
            let start = (&lo * &qr).ceil().to_integer();
            let end = (&hi * &qr).floor().to_integer();
            let mut p = start;
            while p <= end {
                let cand = BigRational::new(p.clone(), q.clone());
                if sign_of(&self.poly.eval(&cand)) == 0 {
                    return Some(cand);
                }
                p += 1;
            }
        }
        None
    }

    /// Structural ordering used to order variables in the tower.
    pub fn structural_cmp(&self, other: &Generator) -> Ordering {
        self.key
            .cmp(&other.key)
            .then_with(|| self.poly.coeffs().len().cmp(&other.poly.coeffs().len()))
            .then_with(|| self.poly.coeffs().cmp(other.poly.coeffs()))
            .then_with(|| self.init.0.cmp(&other.init.0))
            .then_with(|| self.init.1.cmp(&other.init.1))
    }

    pub fn describe(&self) -> String {
        let (lo, hi) = &self.init;
        format!("root({}; {}, {})", self.poly.to_string_in("x"), lo, hi)
    }

}

/// All positive divisors of `n`, when `n` is small enough to factor by
/// trial division.
fn small_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let v = n.to_u64()?;
    if v == 0 || v > 1_000_000_000_000 {
        return None;
    }
    let mut out = Vec::new();
    let mut d: u64 = 1;
    while d * d <= v {
        if v % d == 0 {
            out.push(BigInt::from(d));
            if d * d != v {
                out.push(BigInt::from(v / d));
            }
        }
        d += 1;
    }
    out.sort();
    Some(out)
}

pub(crate) fn create_from_root(poly: &QPoly, root: &super::poly::RootInterval) -> RootValue {
    match root {
        super::poly::RootInterval::Exact(q) => RootValue::Rational(q.clone()),
        super::poly::RootInterval::Open(lo, hi) => {
            Generator::create(poly.clone(), lo.clone(), hi.clone())
        }
    }
}
