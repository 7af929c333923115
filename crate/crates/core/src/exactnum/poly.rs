//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored lowest degree first and kept normalized (no
//! trailing zeros), so the zero polynomial is the empty vector.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        QPoly::new(vec![c])
    }

    /// `x - r`
    pub fn linear_root(r: BigRational) -> Self {
        QPoly::new(vec![-r, BigRational::one()])
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        QPoly::new(cs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => QPoly::zero(),
            Some(lc) => QPoly {
                coeffs: self.coeffs.iter().map(|c| c / lc).collect(),
            },
        }
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn sign_at(&self, x: &BigRational) -> i8 {
        sign_of(&self.eval(x))
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = BigRational::zero();
        QPoly::new(
            (0..n)
                .map(|i| {
                    self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero)
                })
                .collect(),
        )
    }

    pub fn neg(&self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &QPoly) -> QPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &BigRational) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &QPoly) -> (QPoly, QPoly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (QPoly::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + dd] / lc;
            if !q.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &q * d;
                }
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        (QPoly::new(quot), QPoly::new(rem))
    }

    pub fn rem(&self, divisor: &QPoly) -> QPoly {
        self.div_rem(divisor).1
    }

    pub fn derivative(&self) -> QPoly {
        QPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.primitive_rational();
        }
        a.monic()
    }

    /// Rescales so the coefficients are coprime integers with positive
    /// leading coefficient. Keeps Euclid's remainders from blowing up.
    pub fn primitive_rational(&self) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(den_lcm.clone())).to_integer())
            .collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        if ints.last().unwrap().is_negative() {
            g = -g;
        }
        QPoly::new(
            ints.into_iter()
                .map(|c| BigRational::from_integer(c / &g))
                .collect(),
        )
    }

    /// Product of the distinct irreducible factors, monic.
    pub fn squarefree(&self) -> QPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// `p(x + c)`
    pub fn shift(&self, c: &BigRational) -> QPoly {
        let mut out = QPoly::zero();
        let lin = QPoly::new(vec![c.clone(), BigRational::one()]);
        for coef in self.coeffs.iter().rev() {
            out = out.mul(&lin).add(&QPoly::constant(coef.clone()));
        }
        out
    }

    /// Bound strictly greater than the magnitude of every real root:
    /// `1 + max |a_i / a_n|`.
    pub fn root_bound(&self) -> BigRational {
        let lc = self.leading().expect("root bound of zero polynomial").abs();
        let mut h = BigRational::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let v = c.abs() / &lc;
            if v > h {
                h = v;
            }
        }
        h + BigRational::one()
    }

    pub fn sturm_sequence(&self) -> Vec<QPoly> {
        let mut seq = vec![self.clone(), self.derivative()];
        loop {
            let n = seq.len();
            if seq[n - 1].is_zero() {
                seq.pop();
                break;
            }
            let r = seq[n - 2].rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            // keep the sign, clear denominators
            let prim = r.primitive_rational();
            let lc_sign = sign_of(r.leading().unwrap());
            seq.push(if lc_sign < 0 { prim } else { prim.neg() });
        }
        seq
    }

    /// Number of distinct real roots in the half-open interval `(lo, hi]`.
    pub fn count_roots(&self, lo: &BigRational, hi: &BigRational) -> usize {
        let seq = self.sturm_sequence();
        count_roots_with(&seq, lo, hi)
    }

    /// Isolating intervals for all real roots, in increasing order.
    pub fn isolate_real_roots(&self) -> Vec<RootInterval> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let sf = self.squarefree();
        let seq = sf.sturm_sequence();
        let b = sf.root_bound();
        let mut out = Vec::new();
        isolate_in(&sf, &seq, -b.clone(), b, &mut out);
        out
    }

    pub fn to_string_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            let term = if mono.is_empty() {
                c.to_string()
            } else if c.is_one() {
                mono
            } else if *c == -BigRational::one() {
                format!("-{mono}")
            } else {
                format!("{c}*{mono}")
            };
            parts.push(term);
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("x"))
    }
}

/// A real root located either exactly or inside `(lo, hi)` with a strict
/// sign change of the (square-free) polynomial across the interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootInterval {
    Exact(BigRational),
    Open(BigRational, BigRational),
}

pub(crate) fn sign_of(q: &BigRational) -> i8 {
    match q.cmp(&BigRational::zero()) {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

fn sign_variations(seq: &[QPoly], x: &BigRational) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for p in seq {
        let s = p.sign_at(x);
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

pub(crate) fn count_roots_with(seq: &[QPoly], lo: &BigRational, hi: &BigRational) -> usize {
    sign_variations(seq, lo) - sign_variations(seq, hi)
}

fn isolate_in(
    p: &QPoly,
    seq: &[QPoly],
    lo: BigRational,
    hi: BigRational,
    out: &mut Vec<RootInterval>,
) {
    // roots in (lo, hi]
    let n = count_roots_with(seq, &lo, &hi);
    if n == 0 {
        return;
    }
    if n == 1 {
        let (mut lo, mut hi) = (lo, hi);
        // the left endpoint may be a root owned by the neighbouring interval
        loop {
            if p.sign_at(&hi) == 0 {
                out.push(RootInterval::Exact(hi));
                return;
            }
            if p.sign_at(&lo) != 0 {
                out.push(RootInterval::Open(lo, hi));
                return;
            }
            let mid = (&lo + &hi) / BigRational::from_integer(2.into());
            if count_roots_with(seq, &lo, &mid) == 1 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
    }
    let mid = (&lo + &hi) / BigRational::from_integer(2.into());
    isolate_in(p, seq, lo, mid.clone(), out);
    isolate_in(p, seq, mid, hi, out);
}
