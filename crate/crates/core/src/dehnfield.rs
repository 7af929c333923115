//! Dehn's plane: truncated Laurent series in a positive infinitesimal `e`
//! with exact coefficients, ordered by the sign of the leading
//! coefficient.
//!
//! A series keeps at most `order` coefficients starting at its valuation.
//! Each value remembers the exponent up to which its coefficients are
//! known (`prec`); finite expressions such as `1 - e` are exact. An
//! inexact value whose retained coefficients all vanish compares equal to
//! zero, but dividing by it or taking its square root fails with
//! `PrecisionExhausted`.

use crate::exactnum::Scalar;
use crate::field::{FieldError, OrderedField};
use crate::geoplane::{a10_consequent_atoms, a10_hypothesis, Point};
use num_traits::Signed;
use serde::Serialize;
use std::fmt;

pub const DEFAULT_ORDER: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SeriesCtx {
    pub order: usize,
}

impl Default for SeriesCtx {
    fn default() -> Self {
        SeriesCtx { order: DEFAULT_ORDER }
    }
}

#[derive(Clone)]
pub struct Series {
    val: i64,
    /// `coeffs[i]` multiplies `e^(val + i)`; the first is nonzero
    coeffs: Vec<Scalar>,
    /// coefficients at exponents `>= prec` are unknown; `None` when exact
    prec: Option<i64>,
    order: usize,
}

fn min_prec(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl Series {
    fn build(val: i64, mut coeffs: Vec<Scalar>, prec: Option<i64>, order: usize) -> Series {
        let lead = coeffs.iter().position(|c| c.sign() != 0);
        let (val, mut coeffs) = match lead {
            Some(k) => (val + k as i64, coeffs.split_off(k)),
            None => (0, Vec::new()),
        };
        let mut prec = prec;
        if !coeffs.is_empty() {
            // relative truncation
            if coeffs.len() > order {
                coeffs.truncate(order);
                prec = min_prec(prec, Some(val + order as i64));
            }
            if let Some(p) = prec {
                let keep = (p - val).max(0) as usize;
                coeffs.truncate(keep);
            }
            while coeffs.last().is_some_and(|c| c.sign() == 0) {
                coeffs.pop();
            }
        }
        if coeffs.is_empty() {
            return Series {
                val: 0,
                coeffs,
                prec,
                order,
            };
        }
        Series {
            val,
            coeffs,
            prec,
            order,
        }
    }

    pub fn zero(ctx: &SeriesCtx) -> Series {
        Series::build(0, Vec::new(), None, ctx.order)
    }

    pub fn constant(c: Scalar, ctx: &SeriesCtx) -> Series {
        Series::build(0, vec![c], None, ctx.order)
    }

    /// `c * e^k`.
    pub fn monomial(c: Scalar, k: i64, ctx: &SeriesCtx) -> Series {
        Series::build(k, vec![c], None, ctx.order)
    }

    /// The infinitesimal `e`.
    pub fn epsilon(ctx: &SeriesCtx) -> Series {
        Series::monomial(Scalar::one(), 1, ctx)
    }

    /// `sum coeffs[i] e^(val + i)`, exact.
    pub fn from_coeffs(val: i64, coeffs: Vec<Scalar>, ctx: &SeriesCtx) -> Series {
        Series::build(val, coeffs, None, ctx.order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_exact(&self) -> bool {
        self.prec.is_none()
    }

    /// Valuation; `None` for zero.
    pub fn valuation(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.val)
    }

    pub fn precision(&self) -> Option<i64> {
        self.prec
    }

    /// Coefficient of `e^k` (zero outside the retained range).
    pub fn coeff(&self, k: i64) -> Scalar {
        if self.is_zero() || k < self.val {
            return Scalar::zero();
        }
        self.coeffs.get((k - self.val) as usize).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Valuation used in precision bookkeeping: for a zero, the first
    /// unknown exponent (or "infinitely large" when exact).
    fn eff_val(&self) -> Option<i64> {
        if self.is_zero() {
            self.prec
        } else {
            Some(self.val)
        }
    }

    fn last_exp(&self) -> i64 {
        self.val + self.coeffs.len() as i64
    }

    pub fn add(&self, o: &Series) -> Series {
        let prec = min_prec(self.prec, o.prec);
        if self.is_zero() {
            return Series::build(o.val, o.coeffs.clone(), prec, o.order.max(self.order));
        }
        if o.is_zero() {
            return Series::build(self.val, self.coeffs.clone(), prec, self.order.max(o.order));
        }
        let lo = self.val.min(o.val);
        let hi = self.last_exp().max(o.last_exp());
        let hi = prec.map_or(hi, |p| hi.min(p));
        let coeffs = (lo..hi.max(lo)).map(|k| &self.coeff(k) + &o.coeff(k)).collect();
        Series::build(lo, coeffs, prec, self.order.max(o.order))
    }

    pub fn neg(&self) -> Series {
        Series {
            val: self.val,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            prec: self.prec,
            order: self.order,
        }
    }

    pub fn sub(&self, o: &Series) -> Series {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Series) -> Series {
        let order = self.order.max(o.order);
        if (self.is_zero() && self.is_exact()) || (o.is_zero() && o.is_exact()) {
            return Series::zero(&SeriesCtx { order });
        }
        // O(e^pa) * (e^vb ..) = O(e^(pa + vb))
        let (va, vb) = (self.eff_val().unwrap(), o.eff_val().unwrap());
        let prec = min_prec(self.prec.map(|p| p + vb), o.prec.map(|p| p + va));
        if self.is_zero() || o.is_zero() {
            return Series::build(0, Vec::new(), prec, order);
        }
        let val = self.val + o.val;
        let len = (self.coeffs.len() + o.coeffs.len() - 1).min(order);
        let len = prec.map_or(len, |p| len.min((p - val).max(0) as usize));
        let mut coeffs = vec![Scalar::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            for (j, b) in o.coeffs.iter().enumerate().take(len - i) {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        // a product of exact series longer than the order is truncated
        let full = self.coeffs.len() + o.coeffs.len() - 1;
        let prec = if full > len && prec.is_none() { Some(val + len as i64) } else { prec };
        Series::build(val, coeffs, prec, order)
    }

    fn check_invertible(&self) -> Result<(), FieldError> {
        if self.is_zero() {
            return Err(if self.prec.is_some() {
                FieldError::PrecisionExhausted
            } else {
                FieldError::DivisionByZero
            });
        }
        Ok(())
    }

    /// Number of trustworthy coefficients in a result derived from the
    /// leading part of `self` (inverse, square root).
    fn relative_len(&self) -> usize {
        let known = self.prec.map_or(usize::MAX, |p| (p - self.val).max(0) as usize);
        known.min(self.order)
    }

    pub fn inv(&self) -> Result<Series, FieldError> {
        self.check_invertible()?;
        let n = self.relative_len();
        let c0inv = self.coeffs[0].recip()?;
        let mut b: Vec<Scalar> = Vec::with_capacity(n);
        b.push(c0inv.clone());
        for k in 1..n {
            let mut s = Scalar::zero();
            for i in 1..=k.min(self.coeffs.len() - 1) {
                s = &s + &(&self.coeffs[i] * &b[k - i]);
            }
            b.push(-(&c0inv * &s));
        }
        let exact_finite = self.prec.is_none() && self.coeffs.len() == 1;
        let prec = (!exact_finite).then_some(-self.val + n as i64);
        Ok(Series::build(-self.val, b, prec, self.order))
    }

    pub fn div(&self, o: &Series) -> Result<Series, FieldError> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn sign(&self) -> i8 {
        self.coeffs.first().map_or(0, Scalar::sign)
    }

    pub fn sqrt(&self) -> Result<Series, FieldError> {
        if self.is_zero() {
            return if self.prec.is_some() {
                Err(FieldError::PrecisionExhausted)
            } else {
                Ok(self.clone())
            };
        }
        if self.sign() < 0 {
            return Err(FieldError::NegativeRadicand);
        }
        if self.val % 2 != 0 {
            return Err(FieldError::OddValuation);
        }
        let n = self.relative_len();
        let b0 = self.coeffs[0].sqrt_nonneg()?;
        let two_b0_inv = (&b0 * &Scalar::from_int(2)).recip()?;
        let mut b = vec![b0];
        for k in 1..n {
            let mut s = self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero);
            for i in 1..k {
                s = &s - &(&b[i] * &b[k - i]);
            }
            b.push(&s * &two_b0_inv);
        }
        // exact when the recurrence terminates inside the retained range
        let exact = self.prec.is_none() && {
            let r = Series::build(self.val / 2, b.clone(), None, self.order);
            let sq = r.mul(&r);
            sq.is_exact() && sq.sub(self).is_zero()
        };
        let prec = (!exact).then_some(self.val / 2 + n as i64);
        Ok(Series::build(self.val / 2, b, prec, self.order))
    }

    pub fn powi(&self, k: i64) -> Result<Series, FieldError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Series::constant(Scalar::one(), &SeriesCtx { order: self.order });
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Same value, reinterpreted at another truncation order.
    pub fn with_order(&self, order: usize) -> Series {
        Series::build(self.val, self.coeffs.clone(), self.prec, order)
    }
}

pub fn series_sqrt(a: &Series) -> Result<Series, FieldError> {
    a.sqrt()
}

/// Below some integer in absolute value, i.e. valuation at least 0.
pub fn finitely_bounded(a: &Series) -> bool {
    a.valuation().is_none_or(|v| v >= 0)
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.sign() == 0 {
                continue;
            }
            let k = self.val + i as i64;
            let mono = match k {
                0 => String::new(),
                1 => "e".to_string(),
                _ => format!("e^{k}"),
            };
            let (neg, body) = match c.as_rational() {
                Some(q) => (c.sign() < 0, q.abs().to_string()),
                None => (false, format!("({c})")),
            };
            let term = match (mono.is_empty(), body.as_str()) {
                (true, _) => body,
                (false, "1") => mono,
                (false, _) => format!("{body}*{mono}"),
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&term);
        }
        if out.is_empty() {
            out.push('0');
        }
        if let Some(p) = self.prec {
            out.push_str(&format!(" + O(e^{p})"));
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series[{self}; N={}]", self.order)
    }
}

impl OrderedField for Series {
    type Ctx = SeriesCtx;

    fn ctx(&self) -> SeriesCtx {
        SeriesCtx { order: self.order }
    }

    fn from_scalar(s: Scalar, ctx: &SeriesCtx) -> Self {
        Series::constant(s, ctx)
    }

    fn add(&self, o: &Self) -> Self {
        Series::add(self, o)
    }

    fn sub(&self, o: &Self) -> Self {
        Series::sub(self, o)
    }

    fn mul(&self, o: &Self) -> Self {
        Series::mul(self, o)
    }

    fn neg(&self) -> Self {
        Series::neg(self)
    }

    fn div(&self, o: &Self) -> Result<Self, FieldError> {
        Series::div(self, o)
    }

    fn sqrt(&self) -> Result<Self, FieldError> {
        Series::sqrt(self)
    }

    fn sign(&self) -> i8 {
        Series::sign(self)
    }

    fn exact_string(&self) -> String {
        self.to_string()
    }

    fn approx_string(&self, digits: usize) -> String {
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().take(4) {
            parts.push(format!("{}*e^{}", c.approx(digits), self.val + i as i64));
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

pub type SPoint = Point<Series>;

// ----- literals ----------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesParseError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error(transparent)]
    Field(#[from] FieldError),
}

struct SParser<'a> {
    src: &'a [u8],
    pos: usize,
    ctx: SeriesCtx,
}

impl SParser<'_> {
    fn err<T>(&self, msg: &str) -> Result<T, SeriesParseError> {
        Err(SeriesParseError::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn peek(&mut self) -> Option<u8> {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        let hit = self.peek() == Some(c);
        if hit {
            self.pos += 1;
        }
        hit
    }

    fn expr(&mut self) -> Result<Series, SeriesParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?);
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Series, SeriesParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = acc.mul(&self.unary()?);
            } else if self.eat(b'/') {
                acc = acc.div(&self.unary()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Series, SeriesParseError> {
        if self.eat(b'-') {
            return Ok(self.unary()?.neg());
        }
        let base = self.atom()?;
        if self.eat(b'^') {
            let neg = self.eat(b'-');
            let start = self.pos;
            while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
                self.pos += 1;
            }
            if start == self.pos {
                return self.err("expected an integer exponent");
            }
            let k: i64 = std::str::from_utf8(&self.src[start..self.pos]).unwrap().parse().map_err(|_| {
                SeriesParseError::Syntax {
                    pos: start,
                    msg: "exponent out of range".into(),
                }
            })?;
            return Ok(base.powi(if neg { -k } else { k })?);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Series, SeriesParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return self.err("expected ')'");
                }
                Ok(v)
            }
            Some(b'e') => {
                self.pos += 1;
                Ok(Series::epsilon(&self.ctx))
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
                    self.pos += 1;
                }
                let n: num_bigint::BigInt = std::str::from_utf8(&self.src[start..self.pos]).unwrap().parse().unwrap();
                Ok(Series::constant(Scalar::from_bigint(n), &self.ctx))
            }
            Some(_) => self.err("unexpected character"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses a rational expression in `e`, e.g. `1 - e` or `1/e + 2`.
pub fn parse_series(text: &str, ctx: &SeriesCtx) -> Result<Series, SeriesParseError> {
    let mut p = SParser {
        src: text.as_bytes(),
        pos: 0,
        ctx: *ctx,
    };
    let v = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(v)
}

// ----- the parallel-axiom failure ---------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct DehnDemoReport {
    pub order: usize,
    pub offset: String,
    pub points: Vec<(String, String, String)>,
    pub hypothesis_holds: bool,
    /// intersection of the ray from `a` through `b` with the line `y = 0`
    pub witness_x: (String, String),
    /// same for the ray through `c`
    pub witness_y: (String, String),
    pub witness_x_valuation: Option<i64>,
    pub witness_x_finitely_bounded: bool,
    pub consequent_atoms: [bool; 3],
    pub slope_line_intercept: String,
    pub slope_line_intercept_valuation: Option<i64>,
    pub slope_line_intercept_finitely_bounded: bool,
    /// the consequent fails for every finitely bounded choice of x, y
    pub a10_fails_in_bounded_plane: bool,
}

/// Where the ray from `from` through `through` meets the line `y = 0`.
fn meet_x_axis(from: &SPoint, through: &SPoint) -> Result<SPoint, FieldError> {
    let d = through.sub(from);
    let s = from.y.neg().div(&d.y)?;
    Ok(from.add(&d.scale(&s)))
}

/// Builds the parallel-axiom configuration with offset `e` (or `e^2` when
/// `offset_is_epsilon` is false) and shows that the only candidates for
/// the consequent points lie at infinite distance.
pub fn dehn_parallel_failure_demo(offset_is_epsilon: bool, ctx: &SeriesCtx) -> Result<DehnDemoReport, FieldError> {
    let eps = Series::epsilon(ctx);
    let off = if offset_is_epsilon { eps.clone() } else { eps.mul(&eps) };
    let s = |n: i64| Series::from_int(n, ctx);
    let one_minus = s(1).sub(&off);
    let t = Point::new(s(0), s(0));
    let a = Point::new(s(0), s(1));
    let b = Point::new(s(-1), one_minus.clone());
    let c = Point::new(s(1), one_minus.clone());
    let d = Point::new(s(0), one_minus);
    let hypothesis_holds = a10_hypothesis(&a, &b, &c, &d, &t);
    // x on ray ab, y on ray ac, and t between them forces both onto y = 0
    let x = meet_x_axis(&a, &b)?;
    let y = meet_x_axis(&a, &c)?;
    let consequent_atoms = a10_consequent_atoms(&a, &b, &c, &t, &x, &y);
    let bounded = finitely_bounded(&x.x) && finitely_bounded(&y.x);
    // line through (0,1) with slope e
    let p0 = Point::new(s(0), s(1));
    let p1 = Point::new(s(1), s(1).add(&eps));
    let hit = meet_x_axis(&p0, &p1)?;
    let fmt_pt = |n: &str, p: &SPoint| (n.to_string(), p.x.to_string(), p.y.to_string());
    Ok(DehnDemoReport {
        order: ctx.order,
        offset: off.to_string(),
        points: vec![fmt_pt("t", &t), fmt_pt("a", &a), fmt_pt("b", &b), fmt_pt("c", &c), fmt_pt("d", &d)],
        hypothesis_holds,
        witness_x: (x.x.to_string(), x.y.to_string()),
        witness_y: (y.x.to_string(), y.y.to_string()),
        witness_x_valuation: x.x.valuation(),
        witness_x_finitely_bounded: finitely_bounded(&x.x),
        consequent_atoms,
        slope_line_intercept: hit.x.to_string(),
        slope_line_intercept_valuation: hit.x.valuation(),
        slope_line_intercept_finitely_bounded: finitely_bounded(&hit.x),
        a10_fails_in_bounded_plane: hypothesis_holds
            && consequent_atoms.iter().all(|&v| v)
            && !bounded,
    })
}
