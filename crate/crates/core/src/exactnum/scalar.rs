//! Exact real numbers in a tower of square-root extensions over
//! `Q(generators)`.
//!
//! Every value is one of
//!   * a rational,
//!   * `c_0 + c_1 g + .. + c_k g^k` for a generator `g` (a root of a rational
//!     polynomial) with coefficients involving only smaller generators,
//!   * `a + b * sqrt(r)` with `a`, `b`, `r` involving only variables below the
//!     radical `sqrt(r)`, and `r > 0`.
//!
//! The representation is not canonical (the same real can be spelled in
//! several ways), so equality is always decided through [`Scalar::sign`],
//! never structurally. Signs are exact: a cached `f64` enclosure settles
//! the easy cases; otherwise `sign(a + b sqrt r)` recurses on `a`, `b` and
//! `a^2 - b^2 r`, and generator polynomials are decided with a
//! characteristic-polynomial zero test.

use super::genalg::GenAlgebra;
use super::generator::{Generator, RootValue};
use super::hashing::{combine, hash_rational};
use super::interval::{rational_sqrt, square_part, Approx, RatInterval};
use super::poly::{count_roots_with, sign_of, QPoly};
use super::ArithError;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

#[derive(Clone)]
pub struct Scalar(Arc<Node>);

pub(crate) struct Node {
    kind: Kind,
    approx: Approx,
    /// level of the top radical; 0 for rationals and generator polynomials
    level: u32,
    shash: OnceLock<u64>,
}

pub(crate) enum Kind {
    Rat(BigRational),
    Gen { gen: Arc<Generator>, coeffs: Vec<Scalar> },
    Rad { rad: Arc<Radical>, a: Scalar, b: Scalar },
}

pub(crate) struct Radical {
    radicand: Scalar,
    level: u32,
    key: u64,
    approx: Approx,
}

#[derive(Clone, Copy)]
enum Var<'a> {
    Gen(&'a Arc<Generator>),
    Rad(&'a Arc<Radical>),
}

fn var_cmp(x: Var<'_>, y: Var<'_>) -> Ordering {
    match (x, y) {
        (Var::Gen(_), Var::Rad(_)) => Ordering::Less,
        (Var::Rad(_), Var::Gen(_)) => Ordering::Greater,
        (Var::Gen(g), Var::Gen(h)) => {
            if Arc::ptr_eq(g, h) {
                Ordering::Equal
            } else {
                g.structural_cmp(h)
            }
        }
        (Var::Rad(r), Var::Rad(s)) => {
            if Arc::ptr_eq(r, s) {
                return Ordering::Equal;
            }
            r.level
                .cmp(&s.level)
                .then(r.key.cmp(&s.key))
                .then_with(|| r.radicand.structural_cmp(&s.radicand))
        }
    }
}

fn top_cmp(x: Option<Var<'_>>, y: Option<Var<'_>>) -> Ordering {
    match (x, y) {
        (None, None) => Ordering::Equal,
        (None, Some(_)) => Ordering::Less,
        (Some(_), None) => Ordering::Greater,
        (Some(a), Some(b)) => var_cmp(a, b),
    }
}

// refinement schedule for rational enclosures
const FIRST_BITS: u32 = 64;

impl Scalar {
    fn from_node(kind: Kind) -> Scalar {
        let (approx, level) = match &kind {
            Kind::Rat(q) => (Approx::point_rational(q), 0),
            Kind::Gen { gen, coeffs } => {
                let g = gen.approx();
                let mut acc = Approx { lo: 0.0, hi: 0.0 };
                for c in coeffs.iter().rev() {
                    acc = acc.mul(g).add(c.0.approx);
                }
                (acc, 0)
            }
            Kind::Rad { rad, a, b } => (a.0.approx.add(b.0.approx.mul(rad.approx)), rad.level),
        };
        Scalar(Arc::new(Node {
            kind,
            approx,
            level,
            shash: OnceLock::new(),
        }))
    }

    pub fn from_rational(q: BigRational) -> Scalar {
        Scalar::from_node(Kind::Rat(q))
    }

    pub fn from_int(n: i64) -> Scalar {
        Scalar::from_rational(BigRational::from_integer(n.into()))
    }

    pub fn from_bigint(n: BigInt) -> Scalar {
        Scalar::from_rational(BigRational::from_integer(n))
    }

    /// `num / den`; panics if `den == 0`.
    pub fn frac(num: i64, den: i64) -> Scalar {
        Scalar::from_rational(BigRational::new(num.into(), den.into()))
    }

    pub fn zero() -> Scalar {
        Scalar::from_int(0)
    }

    pub fn one() -> Scalar {
        Scalar::from_int(1)
    }

    /// `2^e` for any integer exponent.
    pub fn pow2(e: i64) -> Scalar {
        let p = BigInt::one() << e.unsigned_abs();
        if e >= 0 {
            Scalar::from_bigint(p)
        } else {
            Scalar::from_rational(BigRational::new(BigInt::one(), p))
        }
    }

    pub(crate) fn kind(&self) -> &Kind {
        &self.0.kind
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0.kind {
            Kind::Rat(q) => Some(q),
            _ => None,
        }
    }

    pub fn is_rational_repr(&self) -> bool {
        self.as_rational().is_some()
    }

    fn is_structural_zero(&self) -> bool {
        matches!(&self.0.kind, Kind::Rat(q) if q.is_zero())
    }

    fn top(&self) -> Option<Var<'_>> {
        match &self.0.kind {
            Kind::Rat(_) => None,
            Kind::Gen { gen, .. } => Some(Var::Gen(gen)),
            Kind::Rad { rad, .. } => Some(Var::Rad(rad)),
        }
    }

    pub(crate) fn gen_poly(gen: Arc<Generator>, mut coeffs: Vec<Scalar>) -> Scalar {
        while coeffs.last().is_some_and(Scalar::is_structural_zero) {
            coeffs.pop();
        }
        match coeffs.len() {
            0 => Scalar::zero(),
            1 => coeffs.pop().unwrap(),
            _ => Scalar::from_node(Kind::Gen { gen, coeffs }),
        }
    }

    fn rad_elem(rad: Arc<Radical>, a: Scalar, b: Scalar) -> Scalar {
        if b.is_structural_zero() {
            a
        } else {
            Scalar::from_node(Kind::Rad { rad, a, b })
        }
    }

    pub(crate) fn from_generator(g: Generator) -> Scalar {
        Scalar::gen_poly(Arc::new(g), vec![Scalar::zero(), Scalar::one()])
    }

    pub(crate) fn from_root_value(v: RootValue) -> Scalar {
        match v {
            RootValue::Rational(q) => Scalar::from_rational(q),
            RootValue::Irrational(g) => Scalar::from_generator(*g),
        }
    }

    fn shash(&self) -> u64 {
        *self.0.shash.get_or_init(|| match &self.0.kind {
            Kind::Rat(q) => hash_rational(q),
            Kind::Gen { gen, coeffs } => {
                let mut parts = vec![1, gen.key()];
                parts.extend(coeffs.iter().map(Scalar::shash));
                combine(&parts)
            }
            Kind::Rad { rad, a, b } => combine(&[2, rad.key, a.shash(), b.shash()]),
        })
    }

    /// Total order on representations (not on values).
    fn structural_cmp(&self, other: &Scalar) -> Ordering {
        if Arc::ptr_eq(&self.0, &other.0) {
            return Ordering::Equal;
        }
        let rank = |k: &Kind| match k {
            Kind::Rat(_) => 0,
            Kind::Gen { .. } => 1,
            Kind::Rad { .. } => 2,
        };
        match (&self.0.kind, &other.0.kind) {
            (Kind::Rat(p), Kind::Rat(q)) => p.cmp(q),
            (Kind::Gen { gen: g, coeffs: cs }, Kind::Gen { gen: h, coeffs: ds }) => var_cmp(Var::Gen(g), Var::Gen(h))
                .then(cs.len().cmp(&ds.len()))
                .then_with(|| {
                    cs.iter()
                        .zip(ds)
                        .map(|(c, d)| c.structural_cmp(d))
                        .find(|o| o.is_ne())
                        .unwrap_or(Ordering::Equal)
                }),
            (Kind::Rad { rad: r, a: a1, b: b1 }, Kind::Rad { rad: s, a: a2, b: b2 }) => var_cmp(Var::Rad(r), Var::Rad(s))
                .then_with(|| a1.structural_cmp(a2))
                .then_with(|| b1.structural_cmp(b2)),
            (k1, k2) => rank(k1).cmp(&rank(k2)),
        }
    }

    // ----- arithmetic -------------------------------------------------

    fn add_ref(&self, other: &Scalar) -> Scalar {
        if let (Kind::Rat(p), Kind::Rat(q)) = (&self.0.kind, &other.0.kind) {
            return Scalar::from_rational(p + q);
        }
        if self.is_structural_zero() {
            return other.clone();
        }
        if other.is_structural_zero() {
            return self.clone();
        }
        match top_cmp(self.top(), other.top()) {
            Ordering::Greater => self.add_below(other),
            Ordering::Less => other.add_below(self),
            Ordering::Equal => match (&self.0.kind, &other.0.kind) {
                (Kind::Gen { gen, coeffs: cs }, Kind::Gen { coeffs: ds, .. }) => {
                    let n = cs.len().max(ds.len());
                    let out = (0..n)
                        .map(|i| match (cs.get(i), ds.get(i)) {
                            (Some(c), Some(d)) => c.add_ref(d),
                            (Some(c), None) => c.clone(),
                            (None, Some(d)) => d.clone(),
                            (None, None) => unreachable!(),
                        })
                        .collect();
                    Scalar::gen_poly(gen.clone(), out)
                }
                (Kind::Rad { rad, a: a1, b: b1 }, Kind::Rad { a: a2, b: b2, .. }) => {
                    Scalar::rad_elem(rad.clone(), a1.add_ref(a2), b1.add_ref(b2))
                }
                _ => unreachable!(),
            },
        }
    }

    /// `self + y` where `y` lives strictly below the top variable of `self`.
    fn add_below(&self, y: &Scalar) -> Scalar {
        match &self.0.kind {
            Kind::Gen { gen, coeffs } => {
                let mut cs = coeffs.clone();
                cs[0] = cs[0].add_ref(y);
                Scalar::gen_poly(gen.clone(), cs)
            }
            Kind::Rad { rad, a, b } => Scalar::rad_elem(rad.clone(), a.add_ref(y), b.clone()),
            Kind::Rat(_) => unreachable!(),
        }
    }

    fn neg_ref(&self) -> Scalar {
        match &self.0.kind {
            Kind::Rat(q) => Scalar::from_rational(-q),
            Kind::Gen { gen, coeffs } => {
                Scalar::gen_poly(gen.clone(), coeffs.iter().map(Scalar::neg_ref).collect())
            }
            Kind::Rad { rad, a, b } => Scalar::rad_elem(rad.clone(), a.neg_ref(), b.neg_ref()),
        }
    }

    fn mul_ref(&self, other: &Scalar) -> Scalar {
        if let (Kind::Rat(p), Kind::Rat(q)) = (&self.0.kind, &other.0.kind) {
            return Scalar::from_rational(p * q);
        }
        if self.is_structural_zero() || other.is_structural_zero() {
            return Scalar::zero();
        }
        match top_cmp(self.top(), other.top()) {
            Ordering::Greater => self.scale_below(other),
            Ordering::Less => other.scale_below(self),
            Ordering::Equal => match (&self.0.kind, &other.0.kind) {
                (Kind::Gen { gen, coeffs: cs }, Kind::Gen { coeffs: ds, .. }) => {
                    let mut prod = vec![Scalar::zero(); cs.len() + ds.len() - 1];
                    for (i, c) in cs.iter().enumerate() {
                        for (j, d) in ds.iter().enumerate() {
                            prod[i + j] = prod[i + j].add_ref(&c.mul_ref(d));
                        }
                    }
                    Scalar::gen_poly(gen.clone(), reduce_mod(gen.poly(), prod))
                }
                (Kind::Rad { rad, a: a1, b: b1 }, Kind::Rad { a: a2, b: b2, .. }) => {
                    let bb = b1.mul_ref(b2).mul_ref(&rad.radicand);
                    let a = a1.mul_ref(a2).add_ref(&bb);
                    let b = a1.mul_ref(b2).add_ref(&b1.mul_ref(a2));
                    Scalar::rad_elem(rad.clone(), a, b)
                }
                _ => unreachable!(),
            },
        }
    }

    fn scale_below(&self, y: &Scalar) -> Scalar {
        match &self.0.kind {
            Kind::Gen { gen, coeffs } => {
                Scalar::gen_poly(gen.clone(), coeffs.iter().map(|c| c.mul_ref(y)).collect())
            }
            Kind::Rad { rad, a, b } => Scalar::rad_elem(rad.clone(), a.mul_ref(y), b.mul_ref(y)),
            Kind::Rat(_) => unreachable!(),
        }
    }

    pub fn square(&self) -> Scalar {
        self.mul_ref(self)
    }

    /// Multiplicative inverse.
    pub fn recip(&self) -> Result<Scalar, ArithError> {
        if self.sign() == 0 {
            return Err(ArithError::DivisionByZero);
        }
        Ok(self.recip_nonzero())
    }

    fn recip_nonzero(&self) -> Scalar {
        match &self.0.kind {
            Kind::Rat(q) => Scalar::from_rational(q.recip()),
            Kind::Rad { rad, a, b } => {
                if b.sign() == 0 {
                    return a.recip_nonzero();
                }
                let norm = a.square().sub_ref(&b.square().mul_ref(&rad.radicand));
                if norm.sign() == 0 {
                    // sqrt(r) = |a/b| already lies in the lower field
                    let mut s = a.mul_ref(&b.recip_nonzero());
                    if s.sign() < 0 {
                        s = s.neg_ref();
                    }
                    return a.add_ref(&b.mul_ref(&s)).recip_nonzero();
                }
                let ninv = norm.recip_nonzero();
                Scalar::rad_elem(rad.clone(), a.mul_ref(&ninv), b.neg_ref().mul_ref(&ninv))
            }
            Kind::Gen { .. } => {
                let alg = GenAlgebra::new(self.generators());
                let dense = alg.embed(self);
                alg.to_scalar(&alg.inverse(&dense))
            }
        }
    }

    fn sub_ref(&self, other: &Scalar) -> Scalar {
        self.add_ref(&other.neg_ref())
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, ArithError> {
        if let (Kind::Rat(p), Kind::Rat(q)) = (&self.0.kind, &other.0.kind) {
            if q.is_zero() {
                return Err(ArithError::DivisionByZero);
            }
            return Ok(Scalar::from_rational(p / q));
        }
        Ok(self.mul_ref(&other.recip()?))
    }

    pub fn abs(&self) -> Scalar {
        if self.sign() < 0 {
            self.neg_ref()
        } else {
            self.clone()
        }
    }

    pub fn pow(&self, n: u32) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..n {
            acc = acc.mul_ref(self);
        }
        acc
    }

    // ----- square roots -----------------------------------------------

    /// Nonnegative square root.
    pub fn sqrt_nonneg(&self) -> Result<Scalar, ArithError> {
        match self.sign() {
            -1 => return Err(ArithError::NegativeRadicand),
            0 => return Ok(Scalar::zero()),
            _ => {}
        }
        if let Kind::Rat(q) = &self.0.kind {
            return Ok(rational_radical(q));
        }
        if let Some(r) = self.try_denest() {
            return Ok(r);
        }
        Ok(Scalar::rad_elem(Radical::new(self.clone()), Scalar::zero(), Scalar::one()))
    }

    /// Square root inside the existing tower, if there is one.
    fn sqrt_in_field(&self) -> Option<Scalar> {
        match self.sign() {
            -1 => None,
            0 => Some(Scalar::zero()),
            _ => match &self.0.kind {
                Kind::Rat(q) => rational_sqrt(q).map(Scalar::from_rational),
                Kind::Rad { .. } => self.try_denest(),
                Kind::Gen { .. } => None,
            },
        }
    }

    /// For positive `x = a + b sqrt(r)`, look for `u + v sqrt(r)` squaring to
    /// it: `u^2 = (a +- sqrt(a^2 - b^2 r)) / 2`, `v = b / 2u`.
    fn try_denest(&self) -> Option<Scalar> {
        let Kind::Rad { rad, a, b } = &self.0.kind else {
            return None;
        };
        let norm = a.square().sub_ref(&b.square().mul_ref(&rad.radicand));
        let s = norm.sqrt_in_field()?;
        let half = Scalar::frac(1, 2);
        for cand in [a.add_ref(&s), a.sub_ref(&s)] {
            let u2 = cand.mul_ref(&half);
            if u2.sign() <= 0 {
                continue;
            }
            if let Some(u) = u2.sqrt_in_field() {
                let v = b.mul_ref(&u.mul_ref(&Scalar::from_int(2)).recip_nonzero());
                let y = Scalar::rad_elem(rad.clone(), u, v);
                return Some(if y.sign() < 0 { y.neg_ref() } else { y });
            }
        }
        None
    }

    // ----- sign ---------------------------------------------------------

    /// Exact sign in `{-1, 0, 1}`.
    pub fn sign(&self) -> i8 {
        if let Some(s) = self.0.approx.sign() {
            return s;
        }
        match &self.0.kind {
            Kind::Rat(q) => sign_of(q),
            Kind::Rad { rad, a, b } => {
                let sb = b.sign();
                let sa = a.sign();
                if sb == 0 {
                    return sa;
                }
                if sa == 0 || sa == sb {
                    return if sa == 0 { sb } else { sa };
                }
                let d = a.square().sub_ref(&b.square().mul_ref(&rad.radicand));
                sa * d.sign()
            }
            Kind::Gen { .. } => self.generator_sign(),
        }
    }

    fn generator_sign(&self) -> i8 {
        let mut bits = FIRST_BITS;
        for _ in 0..3 {
            if let Some(s) = self.enclose(bits).sign() {
                return s;
            }
            bits *= 2;
        }
        // exact: the value is a root of the characteristic polynomial of
        // multiplication by this element
        let alg = GenAlgebra::new(self.generators());
        let chi = alg.charpoly(&alg.embed(self));
        let sf = chi.squarefree();
        let zero = BigRational::zero();
        if sf.sign_at(&zero) != 0 {
            loop {
                if let Some(s) = self.enclose(bits).sign() {
                    return s;
                }
                bits *= 2;
            }
        }
        let seq = sf.sturm_sequence();
        loop {
            let iv = self.enclose(bits);
            let closed = count_roots_with(&seq, &iv.lo, &iv.hi) + usize::from(sf.sign_at(&iv.lo) == 0);
            if closed == 1 {
                if iv.contains_zero() {
                    return 0;
                }
                return iv.sign().expect("interval excludes zero");
            }
            bits *= 2;
        }
    }

    /// Generators occurring in this value, in tower order.
    pub(crate) fn generators(&self) -> Vec<Arc<Generator>> {
        let mut out: Vec<Arc<Generator>> = Vec::new();
        self.collect_generators(&mut out);
        out.sort_by(|g, h| var_cmp(Var::Gen(g), Var::Gen(h)));
        out.dedup_by(|g, h| var_cmp(Var::Gen(g), Var::Gen(h)).is_eq());
        out
    }

    /// Generators occurring in any of `values`, in tower order.
    pub(crate) fn generators_of(values: &[Scalar]) -> Vec<Arc<Generator>> {
        let mut out: Vec<Arc<Generator>> = Vec::new();
        for v in values {
            v.collect_generators(&mut out);
        }
        out.sort_by(|g, h| var_cmp(Var::Gen(g), Var::Gen(h)));
        out.dedup_by(|g, h| var_cmp(Var::Gen(g), Var::Gen(h)).is_eq());
        out
    }

    fn collect_generators(&self, out: &mut Vec<Arc<Generator>>) {
        match &self.0.kind {
            Kind::Rat(_) => {}
            Kind::Gen { gen, coeffs } => {
                if !out.iter().any(|g| var_cmp(Var::Gen(g), Var::Gen(gen)).is_eq()) {
                    out.push(gen.clone());
                }
                for c in coeffs {
                    c.collect_generators(out);
                }
            }
            Kind::Rad { rad, a, b } => {
                rad.radicand.collect_generators(out);
                a.collect_generators(out);
                b.collect_generators(out);
            }
        }
    }

    /// True when the value involves a square-root radical.
    pub fn has_radicals(&self) -> bool {
        match &self.0.kind {
            Kind::Rat(_) => false,
            Kind::Gen { .. } => false,
            Kind::Rad { .. } => true,
        }
    }

    /// Top radical split: `self = a + b sqrt(r)`, or `None` without radicals.
    pub(crate) fn split_top_radical(&self) -> Option<(Scalar, Scalar, Scalar)> {
        match &self.0.kind {
            Kind::Rad { rad, a, b } => Some((a.clone(), b.clone(), rad.radicand.clone())),
            _ => None,
        }
    }

    /// Same as [`Scalar::split_top_radical`] but relative to the radical on
    /// top of `like`: values below it come back as `(self, 0)`.
    pub(crate) fn split_at(&self, like: &Scalar) -> (Scalar, Scalar) {
        let Kind::Rad { rad: r, .. } = &like.0.kind else {
            return (self.clone(), Scalar::zero());
        };
        match &self.0.kind {
            Kind::Rad { rad, a, b } if var_cmp(Var::Rad(rad), Var::Rad(r)).is_eq() => (a.clone(), b.clone()),
            _ => (self.clone(), Scalar::zero()),
        }
    }

    /// Whether the top variable of `self` is above that of `other`.
    pub(crate) fn top_above(&self, other: &Scalar) -> bool {
        top_cmp(self.top(), other.top()) == Ordering::Greater
    }

    // ----- enclosures and approximation --------------------------------

    /// Rational enclosure; tighter as `bits` grows.
    pub(crate) fn enclose(&self, bits: u32) -> RatInterval {
        let guard = bits + 8;
        match &self.0.kind {
            Kind::Rat(q) => RatInterval::point(q.clone()),
            Kind::Gen { gen, coeffs } => {
                let g = gen.enclose(guard + 4 * coeffs.len() as u32);
                let mut acc = RatInterval::point(BigRational::zero());
                for c in coeffs.iter().rev() {
                    acc = acc.mul(&g).add(&c.enclose(guard)).round(guard);
                }
                acc
            }
            Kind::Rad { rad, a, b } => {
                let r = rad.radicand.enclose(guard).sqrt(guard);
                a.enclose(guard).add(&b.enclose(guard).mul(&r)).round(guard)
            }
        }
    }

    /// Midpoint of the cached `f64` enclosure (reporting only).
    pub fn to_f64(&self) -> f64 {
        match &self.0.kind {
            Kind::Rat(q) => q.to_f64().unwrap_or(f64::NAN),
            _ => {
                let m = self.0.approx.mid();
                if m.is_finite() {
                    m
                } else {
                    let iv = self.enclose(64);
                    ((iv.lo + iv.hi) / BigRational::from_integer(2.into())).to_f64().unwrap_or(f64::NAN)
                }
            }
        }
    }

    pub(crate) fn approx_interval(&self) -> Approx {
        self.0.approx
    }

    /// Decimal string with exactly `digits` fractional digits, rounded to
    /// nearest (ties away from zero).
    pub fn approx(&self, digits: usize) -> String {
        let scale = BigRational::from_integer(BigInt::from(10u32).pow(digits as u32));
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let nearest = |q: &BigRational| -> BigInt {
            if q.is_negative() {
                -((-q) + &half).floor().to_integer()
            } else {
                (q + &half).floor().to_integer()
            }
        };
        let n: BigInt = match &self.0.kind {
            Kind::Rat(q) => nearest(&(q * &scale)),
            _ => {
                let scaled = self.mul_ref(&Scalar::from_rational(scale.clone()));
                let mut bits = 32 + 4 * digits as u32;
                loop {
                    let iv = scaled.enclose(bits);
                    let (lo, hi) = (nearest(&iv.lo), nearest(&iv.hi));
                    if lo == hi {
                        break lo;
                    }
                    if bits > 4096 {
                        // the value sits on a rounding boundary; settle it exactly
                        let mut cand = lo;
                        while cand < hi {
                            let boundary = BigRational::from_integer(cand.clone()) + &half;
                            let s = scaled.sub_ref(&Scalar::from_rational(boundary)).sign();
                            if s < 0 || (s == 0 && cand.is_negative()) {
                                break;
                            }
                            cand += 1;
                        }
                        break cand;
                    }
                    bits *= 2;
                }
            }
        };
        format_fixed(&n, digits)
    }
}

fn format_fixed(n: &BigInt, digits: usize) -> String {
    let neg = n.is_negative();
    let s = n.abs().to_string();
    let body = if digits == 0 {
        s
    } else {
        let padded = format!("{:0>width$}", s, width = digits + 1);
        let (int, frac) = padded.split_at(padded.len() - digits);
        format!("{int}.{frac}")
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

fn rational_radical(q: &BigRational) -> Scalar {
    // sqrt(n/d) = sqrt(n d) / d
    let nd = q.numer() * q.denom();
    let (s, m) = square_part(&nd);
    let coeff = Scalar::from_rational(BigRational::new(s, q.denom().clone()));
    if m.is_one() {
        return coeff;
    }
    Scalar::rad_elem(Radical::new(Scalar::from_bigint(m)), Scalar::zero(), coeff)
}

fn reduce_mod(p: &QPoly, mut coeffs: Vec<Scalar>) -> Vec<Scalar> {
    let d = p.degree().unwrap();
    for k in (d..coeffs.len()).rev() {
        let top = coeffs[k].clone();
        if top.is_structural_zero() {
            continue;
        }
        for (i, pc) in p.coeffs()[..d].iter().enumerate() {
            if pc.is_zero() {
                continue;
            }
            let t = top.mul_ref(&Scalar::from_rational(pc.clone()));
            coeffs[k - d + i] = coeffs[k - d + i].sub_ref(&t);
        }
        coeffs[k] = Scalar::zero();
    }
    coeffs.truncate(d);
    coeffs
}

impl Radical {
    fn new(radicand: Scalar) -> Arc<Radical> {
        let level = radicand.0.level + 1;
        let key = radicand.shash();
        let approx = radicand.0.approx.sqrt();
        Arc::new(Radical {
            radicand,
            level,
            key,
            approx,
        })
    }
}

// ----- traits ----------------------------------------------------------

impl PartialEq for Scalar {
    fn eq(&self, other: &Scalar) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Scalar {}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Scalar) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Scalar) -> Ordering {
        if let (Kind::Rat(p), Kind::Rat(q)) = (&self.0.kind, &other.0.kind) {
            return p.cmp(q);
        }
        match self.sub_ref(other).sign() {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$inner(rhs)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$inner(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$inner(rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$inner(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Scalar {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(q: BigRational) -> Scalar {
        Scalar::from_rational(q)
    }
}

fn needs_parens(s: &Scalar) -> bool {
    match &s.0.kind {
        Kind::Rat(q) => q.is_negative() || !q.is_integer(),
        _ => true,
    }
}

fn wrap(s: &Scalar) -> String {
    if needs_parens(s) {
        format!("({s})")
    } else {
        s.to_string()
    }
}

/// Exact textual form: rationals as `p/q`, radicals as `sqrt(..)`, generator
/// roots as `root(poly; lo, hi)`.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.kind {
            Kind::Rat(q) => write!(f, "{q}"),
            Kind::Rad { rad, a, b } => {
                let root = format!("sqrt({})", rad.radicand);
                let term = match b.as_rational() {
                    Some(q) if q.is_one() => root,
                    Some(q) if *q == -BigRational::one() => format!("-{root}"),
                    _ => format!("{}*{root}", wrap(b)),
                };
                if a.is_structural_zero() {
                    f.write_str(&term)
                } else {
                    write!(f, "{} + {term}", a)
                }
            }
            Kind::Gen { gen, coeffs } => {
                let g = gen.describe();
                let mut parts = Vec::new();
                for (i, c) in coeffs.iter().enumerate() {
                    if c.is_structural_zero() {
                        continue;
                    }
                    let mono = match i {
                        0 => String::new(),
                        1 => g.clone(),
                        _ => format!("{g}^{i}"),
                    };
                    parts.push(match (i, c.as_rational()) {
                        (0, _) => c.to_string(),
                        (_, Some(q)) if q.is_one() => mono,
                        _ => format!("{}*{mono}", wrap(c)),
                    });
                }
                f.write_str(&parts.join(" + "))
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self} ~ {})", self.to_f64())
    }
}
