//! Seeded random instances: rationals, finitely bounded series, and point
//! tuples that satisfy the hypotheses of the constructions and axioms.

use crate::dehnfield::{Series, SeriesCtx};
use crate::exactnum::Scalar;
use crate::field::OrderedField;
use crate::geoplane::{Axiom, Point};
use rand::Rng;

/// `p/q` with `q` in `1..=max_den` and the value in `[lo, hi]`.
pub fn rational<R: Rng>(rng: &mut R, lo: i64, hi: i64, max_den: i64) -> Scalar {
    let q = rng.random_range(1..=max_den);
    let p = rng.random_range(lo * q..=hi * q);
    Scalar::frac(p, q)
}

/// A rational parameter in `[0, 1]`.
pub fn unit<R: Rng>(rng: &mut R) -> Scalar {
    let q = rng.random_range(1..=8);
    Scalar::frac(rng.random_range(0..=q), q)
}

/// Finitely bounded series `c0 + c1 e + c2 e^2` with small rational `ci`.
pub fn bounded_series<R: Rng>(rng: &mut R, ctx: &SeriesCtx) -> Series {
    let coeffs = (0..3).map(|_| rational(rng, -5, 5, 4)).collect();
    Series::from_coeffs(0, coeffs, ctx)
}

/// Rotations by the angles of small Pythagorean triples, plus the
/// quarter turns.
const ROTATIONS: [(i64, i64, i64); 6] = [(1, 0, 1), (0, 1, 1), (3, 4, 5), (4, 3, 5), (5, 12, 13), (8, 15, 17)];

fn rotate<F: OrderedField>(rng: &mut dyn rand::RngCore, v: &Point<F>) -> Point<F> {
    let (c, s, h) = ROTATIONS[rng.random_range(0..ROTATIONS.len())];
    let ctx = v.x.ctx();
    let sgn = if rng.random_bool(0.5) { 1 } else { -1 };
    let cos = F::from_scalar(Scalar::frac(sgn * c, h), &ctx);
    let sin = F::from_scalar(Scalar::frac(s, h), &ctx);
    Point::new(v.x.mul(&cos).sub(&v.y.mul(&sin)), v.x.mul(&sin).add(&v.y.mul(&cos)))
}

fn lerp<F: OrderedField>(a: &Point<F>, b: &Point<F>, t: &Scalar) -> Point<F> {
    let t = F::from_scalar(t.clone(), &a.x.ctx());
    a.add(&b.sub(a).scale(&t))
}

/// Random point source over some field.
pub trait PointSource<F> {
    fn point(&mut self) -> Point<F>;
    fn param(&mut self) -> Scalar;
    fn coin(&mut self) -> bool;
    fn rng(&mut self) -> &mut dyn rand::RngCore;
}

pub struct Sampler<'a, R, G> {
    pub rng: &'a mut R,
    pub elem: G,
}

impl<F, R: Rng, G: FnMut(&mut R) -> F> PointSource<F> for Sampler<'_, R, G> {
    fn point(&mut self) -> Point<F> {
        let x = (self.elem)(self.rng);
        let y = (self.elem)(self.rng);
        Point { x, y }
    }

    fn param(&mut self) -> Scalar {
        unit(self.rng)
    }

    fn coin(&mut self) -> bool {
        self.rng.random_bool(0.5)
    }

    fn rng(&mut self) -> &mut dyn rand::RngCore {
        self.rng
    }
}

/// Arguments `a, b, p, q` for `ext`.
pub fn ext_args<F: OrderedField>(s: &mut impl PointSource<F>) -> [Point<F>; 4] {
    let a = s.point();
    let b = if s.coin() && s.coin() { a.clone() } else { s.point() };
    [a, b, s.point(), s.point()]
}

/// Arguments `a, p, c, b, q` with `T(a,p,c)` and `T(b,q,c)`.
pub fn ip_args<F: OrderedField>(s: &mut impl PointSource<F>) -> [Point<F>; 5] {
    let a = s.point();
    let c = s.point();
    let b = if s.coin() && s.coin() {
        // collinear configuration
        let t = s.param();
        lerp(&a, &c, &t)
    } else {
        s.point()
    };
    let p = lerp(&a, &c, &s.param());
    let q = lerp(&b, &c, &s.param());
    [a, p, c, b, q]
}

/// Arguments `p, q, a, b, x, y` with `T(a,x,b)`, `T(a,b,y)`,
/// `E(a,x,a,p)`, `E(a,q,a,y)`.
pub fn ilc_args<F: OrderedField>(s: &mut impl PointSource<F>) -> [Point<F>; 6] {
    let a = s.point();
    let b = s.point();
    let x = lerp(&a, &b, &s.param());
    let mu = Scalar::one() + s.param() + s.param();
    let y = lerp(&a, &b, &mu);
    let p = a.add(&rotate(s.rng(), &x.sub(&a)));
    let q = a.add(&rotate(s.rng(), &y.sub(&a)));
    [p, q, a, b, x, y]
}

/// `pts` moved by one random rotation and translation.
fn congruent_copy<F: OrderedField>(s: &mut impl PointSource<F>, pts: &[Point<F>]) -> Vec<Point<F>> {
    let shift = s.point();
    let (c, sn, h) = ROTATIONS[s.rng().random_range(0..ROTATIONS.len())];
    let ctx = shift.x.ctx();
    let cos = F::from_scalar(Scalar::frac(c, h), &ctx);
    let sin = F::from_scalar(Scalar::frac(sn, h), &ctx);
    pts.iter()
        .map(|v| Point::new(v.x.mul(&cos).sub(&v.y.mul(&sin)), v.x.mul(&sin).add(&v.y.mul(&cos))).add(&shift))
        .collect()
}

/// A point tuple for `axiom` whose hypothesis holds in most draws.
/// `constants` supplies `alpha, beta, gamma` for `A8'`.
pub fn axiom_instance<F: OrderedField>(axiom: Axiom, s: &mut impl PointSource<F>, constants: &[Point<F>; 3]) -> Vec<Point<F>> {
    match axiom {
        Axiom::A1 | Axiom::A4Prime => (0..axiom.arity()).map(|_| s.point()).collect(),
        Axiom::A2 => {
            let c = s.point();
            let d = s.point();
            let a = s.point();
            let b = a.add(&rotate(s.rng(), &d.sub(&c)));
            let e = s.point();
            let f = e.add(&rotate(s.rng(), &b.sub(&a)));
            vec![a, b, c, d, e, f]
        }
        Axiom::A3 => {
            let a = s.point();
            let b = if s.coin() { a.clone() } else { s.point() };
            let c = s.point();
            vec![a, b, c]
        }
        Axiom::A5 => {
            let a = s.point();
            let c = s.point();
            let b = lerp(&a, &c, &s.param());
            let d = s.point();
            let mut out = vec![a.clone(), b.clone(), c.clone(), d.clone()];
            out.extend(congruent_copy(s, &[a, b, c, d]));
            out
        }
        Axiom::A6 => {
            let a = s.point();
            let b = if s.coin() { a.clone() } else { s.point() };
            vec![a, b]
        }
        Axiom::A7 => ip_args(s).to_vec(),
        Axiom::A8Prime => constants.to_vec(),
        Axiom::A9 => {
            let p = s.point();
            let q = s.point();
            let mid = lerp(&p, &q, &Scalar::frac(1, 2));
            let dir = q.sub(&p);
            let perp = Point::new(dir.y.neg(), dir.x.clone());
            let mut on_bisector = || {
                let t = F::from_scalar(s.param() - Scalar::frac(1, 2), &mid.x.ctx());
                mid.add(&perp.scale(&t))
            };
            let (a, b, c) = (on_bisector(), on_bisector(), on_bisector());
            vec![a, b, c, p, q]
        }
        Axiom::CA => ilc_args(s).to_vec(),
        _ => (0..axiom.arity()).map(|_| s.point()).collect(),
    }
}
