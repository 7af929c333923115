//! The coordinate plane over an ordered field: betweenness and
//! equidistance, the Skolem constructions `ext`, `ip`, `ilc`, the two
//! perpendicular constructions, and quantifier-free axiom instances.

use crate::field::{FieldError, OrderedField};
use crate::exactnum::Scalar;
use std::fmt;

#[derive(Debug, Clone)]
pub struct Point<F> {
    pub x: F,
    pub y: F,
}

pub type EPoint = Point<Scalar>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeoError {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("degenerate line: the two points coincide")]
    DegenerateLine,
    #[error("point lies on the line")]
    PointOnLine,
    #[error("point does not lie on the line")]
    PointNotOnLine,
    #[error(transparent)]
    Field(#[from] FieldError),
}

impl<F: OrderedField> Point<F> {
    pub fn new(x: F, y: F) -> Self {
        Point { x, y }
    }

    pub fn add(&self, o: &Self) -> Self {
        Point::new(self.x.add(&o.x), self.y.add(&o.y))
    }

    pub fn sub(&self, o: &Self) -> Self {
        Point::new(self.x.sub(&o.x), self.y.sub(&o.y))
    }

    pub fn scale(&self, k: &F) -> Self {
        Point::new(self.x.mul(k), self.y.mul(k))
    }

    pub fn dot(&self, o: &Self) -> F {
        self.x.mul(&o.x).add(&self.y.mul(&o.y))
    }

    pub fn cross(&self, o: &Self) -> F {
        self.x.mul(&o.y).sub(&self.y.mul(&o.x))
    }

    pub fn norm2(&self) -> F {
        self.dot(self)
    }

    pub fn same(&self, o: &Self) -> bool {
        self.x.eq_to(&o.x) && self.y.eq_to(&o.y)
    }

    pub fn dist2(&self, o: &Self) -> F {
        self.sub(o).norm2()
    }

    pub fn dist(&self, o: &Self) -> Result<F, FieldError> {
        self.dist2(o).sqrt()
    }
}

impl Point<Scalar> {
    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(Scalar::from_int(x), Scalar::from_int(y))
    }
}

impl<F: OrderedField> fmt::Display for Point<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x.exact_string(), self.y.exact_string())
    }
}

impl<F: OrderedField> PartialEq for Point<F> {
    fn eq(&self, o: &Self) -> bool {
        self.same(o)
    }
}

/// Collinearity.
pub fn col<F: OrderedField>(a: &Point<F>, b: &Point<F>, c: &Point<F>) -> bool {
    b.sub(a).cross(&c.sub(a)).sign() == 0
}

/// `T(a,b,c)`: `b` on the closed segment `ac`.
pub fn betw_t<F: OrderedField>(a: &Point<F>, b: &Point<F>, c: &Point<F>) -> bool {
    col(a, b, c) && a.sub(b).dot(&c.sub(b)).sign() <= 0
}

/// `B(a,b,c)`: strict betweenness.
pub fn betw_b<F: OrderedField>(a: &Point<F>, b: &Point<F>, c: &Point<F>) -> bool {
    !a.same(b) && !b.same(c) && betw_t(a, b, c)
}

/// `E(a,b,c,d)`: `|ab| = |cd|`.
pub fn equi_e<F: OrderedField>(a: &Point<F>, b: &Point<F>, c: &Point<F>, d: &Point<F>) -> bool {
    a.dist2(b).eq_to(&c.dist2(d))
}

/// Extends `ab` beyond `b` by `|pq|`; along `+x` when `a = b`.
pub fn ext<F: OrderedField>(a: &Point<F>, b: &Point<F>, p: &Point<F>, q: &Point<F>) -> Result<Point<F>, GeoError> {
    let ab2 = a.dist2(b);
    if ab2.sign() == 0 {
        let len = p.dist(q)?;
        return Ok(Point::new(b.x.add(&len), b.y.clone()));
    }
    let k = p.dist2(q).div(&ab2)?.sqrt()?;
    Ok(b.add(&b.sub(a).scale(&k)))
}

/// Inner Pasch witness: a point on both segments `pb` and `qa`, given
/// `T(a,p,c)` and `T(b,q,c)`.
pub fn ip<F: OrderedField>(
    a: &Point<F>,
    p: &Point<F>,
    c: &Point<F>,
    b: &Point<F>,
    q: &Point<F>,
) -> Result<Point<F>, GeoError> {
    if !betw_t(a, p, c) || !betw_t(b, q, c) {
        return Err(GeoError::PreconditionViolated("ip: T(a,p,c) and T(b,q,c) required".into()));
    }
    let d1 = b.sub(p);
    let d2 = a.sub(q);
    let denom = d1.cross(&d2);
    let x = if denom.sign() != 0 {
        let s = q.sub(p).cross(&d2).div(&denom)?;
        Some(p.add(&d1.scale(&s)))
    } else {
        parallel_meet(p, b, q, a)
    };
    match x {
        Some(x) if betw_t(p, &x, b) && betw_t(q, &x, a) => Ok(x),
        _ => Err(GeoError::PreconditionViolated("ip: segments pb and qa do not meet".into())),
    }
}

/// Meeting point of parallel segments `pb` and `qa`: the end of their
/// overlap nearest `p`.
fn parallel_meet<F: OrderedField>(p: &Point<F>, b: &Point<F>, q: &Point<F>, a: &Point<F>) -> Option<Point<F>> {
    let d1 = b.sub(p);
    let d2 = a.sub(q);
    let dir = if d1.norm2().sign() != 0 {
        d1
    } else if d2.norm2().sign() != 0 {
        d2
    } else {
        return p.same(q).then(|| p.clone());
    };
    if !col(p, &p.add(&dir), q) || !col(p, &p.add(&dir), a) || !col(p, &p.add(&dir), b) {
        return None;
    }
    let t = |x: &Point<F>| x.sub(p).dot(&dir);
    let ord = |x: &F, y: &F| x.cmp_to(y);
    let pick = |u: &F, v: &F, lo: bool| {
        let o = ord(u, v);
        if (o.is_le()) == lo {
            u.clone()
        } else {
            v.clone()
        }
    };
    let (tp, tb, tq, ta) = (t(p), t(b), t(q), t(a));
    let lo = pick(&pick(&tp, &tb, true), &pick(&tq, &ta, true), false);
    let hi = pick(&pick(&tp, &tb, false), &pick(&tq, &ta, false), true);
    if ord(&lo, &hi).is_gt() {
        return None;
    }
    // clamp t(p) = 0 into [lo, hi]
    let target = if ord(&tp, &lo).is_lt() {
        lo
    } else if ord(&tp, &hi).is_gt() {
        hi
    } else {
        tp
    };
    // overlap endpoints are argument points; ties resolve toward a
    [a, p, b, q].into_iter().find(|x| t(x).eq_to(&target)).cloned()
}

/// Intersection of segment `pq` with the circle about `a` through `b`,
/// given witnesses `x` (`p` inside) and `y` (`q` outside). Returns the
/// intersection nearest `p`.
pub fn ilc<F: OrderedField>(
    p: &Point<F>,
    q: &Point<F>,
    a: &Point<F>,
    b: &Point<F>,
    x: &Point<F>,
    y: &Point<F>,
) -> Result<Point<F>, GeoError> {
    if !(betw_t(a, x, b) && equi_e(a, x, a, p) && betw_t(a, b, y) && equi_e(a, q, a, y)) {
        return Err(GeoError::PreconditionViolated("ilc: witnesses x, y do not certify p inside, q outside".into()));
    }
    let r2 = a.dist2(b);
    if r2.sign() == 0 {
        return if betw_t(p, a, q) {
            Ok(a.clone())
        } else {
            Err(GeoError::PreconditionViolated("ilc: zero radius and a not on pq".into()))
        };
    }
    let d = q.sub(p);
    let big_a = d.norm2();
    if big_a.sign() == 0 {
        return Ok(p.clone());
    }
    let pa = p.sub(a);
    let big_b = pa.dot(&d);
    let big_c = pa.norm2().sub(&r2);
    if big_c.sign() == 0 {
        // p already on the circle
        return Ok(p.clone());
    }
    let disc = big_b.mul(&big_b).sub(&big_a.mul(&big_c));
    let t = big_b.neg().add(&disc.sqrt()?).div(&big_a)?;
    Ok(p.add(&d.scale(&t)))
}

/// Perpendicular from `c` to line `ab`: `(foot, c)`.
pub fn drop_perp<F: OrderedField>(a: &Point<F>, b: &Point<F>, c: &Point<F>) -> Result<(Point<F>, Point<F>), GeoError> {
    if a.same(b) {
        return Err(GeoError::DegenerateLine);
    }
    if col(a, b, c) {
        return Err(GeoError::PointOnLine);
    }
    let d = b.sub(a);
    let k = c.sub(a).dot(&d).div(&d.norm2())?;
    Ok((a.add(&d.scale(&k)), c.clone()))
}

/// Perpendicular erected at `c` on line `ab`: `(c, c + rot90(b - a))`.
pub fn erect_perp<F: OrderedField>(a: &Point<F>, b: &Point<F>, c: &Point<F>) -> Result<(Point<F>, Point<F>), GeoError> {
    if a.same(b) {
        return Err(GeoError::DegenerateLine);
    }
    if !col(a, b, c) {
        return Err(GeoError::PointNotOnLine);
    }
    let d = b.sub(a);
    Ok((c.clone(), c.add(&Point::new(d.y.neg(), d.x.clone()))))
}

/// Atoms of `phi(a,b,c,x,y)`: `xy` perpendicular to `ab` with `x` on `ab`
/// and `c` between `x` and `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct PhiAtoms {
    pub line_nondegenerate: bool,
    pub foot_on_line: bool,
    pub head_off_line: bool,
    pub perpendicular: bool,
    pub c_between: bool,
}

impl PhiAtoms {
    pub fn holds(&self) -> bool {
        self.line_nondegenerate && self.foot_on_line && self.head_off_line && self.perpendicular && self.c_between
    }
}

pub fn phi<F: OrderedField>(a: &Point<F>, b: &Point<F>, c: &Point<F>, x: &Point<F>, y: &Point<F>) -> PhiAtoms {
    PhiAtoms {
        line_nondegenerate: !a.same(b),
        foot_on_line: col(a, b, x),
        head_off_line: !col(a, b, y),
        perpendicular: y.sub(x).dot(&b.sub(a)).sign() == 0,
        c_between: betw_t(x, c, y),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum Axiom {
    A1,
    A2,
    A3,
    A4Prime,
    A5,
    A6,
    A7,
    A8Prime,
    A9,
    A10Hyp,
    A10Cons,
    A10,
    CA,
    OuterPasch,
    Euclid5,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AxiomError {
    #[error("unknown axiom {0}")]
    UnknownAxiom(String),
    #[error("{axiom} takes {expected} points, got {got}")]
    WrongArity {
        axiom: &'static str,
        expected: usize,
        got: usize,
    },
    #[error(transparent)]
    Geo(#[from] GeoError),
}

impl Axiom {
    pub const ALL: [Axiom; 15] = [
        Axiom::A1,
        Axiom::A2,
        Axiom::A3,
        Axiom::A4Prime,
        Axiom::A5,
        Axiom::A6,
        Axiom::A7,
        Axiom::A8Prime,
        Axiom::A9,
        Axiom::A10Hyp,
        Axiom::A10Cons,
        Axiom::A10,
        Axiom::CA,
        Axiom::OuterPasch,
        Axiom::Euclid5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::A1 => "A1",
            Axiom::A2 => "A2",
            Axiom::A3 => "A3",
            Axiom::A4Prime => "A4'",
            Axiom::A5 => "A5",
            Axiom::A6 => "A6",
            Axiom::A7 => "A7",
            Axiom::A8Prime => "A8'",
            Axiom::A9 => "A9",
            Axiom::A10Hyp => "A10-hyp",
            Axiom::A10Cons => "A10-cons",
            Axiom::A10 => "A10",
            Axiom::CA => "CA",
            Axiom::OuterPasch => "outer-pasch",
            Axiom::Euclid5 => "euclid5",
        }
    }

    pub fn parse(name: &str) -> Result<Axiom, AxiomError> {
        let norm = name.trim().to_ascii_lowercase().replace('′', "'");
        Axiom::ALL
            .into_iter()
            .find(|a| a.name().to_ascii_lowercase() == norm)
            .ok_or_else(|| AxiomError::UnknownAxiom(name.to_string()))
    }

    /// Number of point variables in the instance.
    pub fn arity(self) -> usize {
        match self {
            Axiom::A1 | Axiom::A6 => 2,
            Axiom::A2 => 6,
            Axiom::A3 | Axiom::A8Prime => 3,
            Axiom::A4Prime => 4,
            Axiom::A5 => 8,
            Axiom::A7 | Axiom::A9 | Axiom::A10Hyp => 5,
            Axiom::A10Cons | Axiom::A10 => 7,
            Axiom::CA | Axiom::OuterPasch => 6,
            Axiom::Euclid5 => 7,
        }
    }

    pub fn variables(self) -> &'static str {
        match self {
            Axiom::A1 | Axiom::A6 => "a,b",
            Axiom::A2 => "a,b,c,d,e,f",
            Axiom::A3 => "a,b,c",
            Axiom::A4Prime => "a,b,c,d",
            Axiom::A5 => "a,b,c,d,a',b',c',d'",
            Axiom::A7 => "a,p,c,b,q",
            Axiom::A8Prime => "alpha,beta,gamma",
            Axiom::A9 => "a,b,c,p,q",
            Axiom::A10Hyp => "a,b,c,d,t",
            Axiom::A10Cons | Axiom::A10 => "a,b,c,d,t,x,y",
            Axiom::CA => "p,q,a,b,x,y",
            Axiom::OuterPasch => "a,p,c,q,b,x",
            Axiom::Euclid5 => "p,q,r,s,t,a,x",
        }
    }
}

fn implies(h: bool, c: impl FnOnce() -> bool) -> bool {
    !h || c()
}

/// `T(a,d,t) ∧ T(b,d,c) ∧ a ≠ d`.
pub fn a10_hypothesis<F: OrderedField>(a: &Point<F>, b: &Point<F>, c: &Point<F>, d: &Point<F>, t: &Point<F>) -> bool {
    betw_t(a, d, t) && betw_t(b, d, c) && !a.same(d)
}

/// Atoms `T(a,b,x)`, `T(a,c,y)`, `T(x,t,y)`.
pub fn a10_consequent_atoms<F: OrderedField>(
    a: &Point<F>,
    b: &Point<F>,
    c: &Point<F>,
    t: &Point<F>,
    x: &Point<F>,
    y: &Point<F>,
) -> [bool; 3] {
    [betw_t(a, b, x), betw_t(a, c, y), betw_t(x, t, y)]
}

/// Truth value of a quantifier-free axiom instance. `A4'` and `A7` are
/// checked with `ext` and `ip` substituted for the witness, `CA` with
/// `ilc`; `A8'` takes the three constants.
pub fn axiom_eval<F: OrderedField>(axiom: Axiom, pts: &[Point<F>]) -> Result<bool, AxiomError> {
    if pts.len() != axiom.arity() {
        return Err(AxiomError::WrongArity {
            axiom: axiom.name(),
            expected: axiom.arity(),
            got: pts.len(),
        });
    }
    let p = pts;
    Ok(match axiom {
        Axiom::A1 => equi_e(&p[0], &p[1], &p[1], &p[0]),
        Axiom::A2 => {
            let [a, b, c, d, e, f] = [&p[0], &p[1], &p[2], &p[3], &p[4], &p[5]];
            implies(equi_e(a, b, c, d) && equi_e(a, b, e, f), || equi_e(c, d, e, f))
        }
        Axiom::A3 => implies(equi_e(&p[0], &p[1], &p[2], &p[2]), || p[0].same(&p[1])),
        Axiom::A4Prime => {
            let [a, b, c, d] = [&p[0], &p[1], &p[2], &p[3]];
            let e = ext(a, b, c, d)?;
            betw_t(a, b, &e) && equi_e(b, &e, c, d)
        }
        Axiom::A5 => {
            let [a, b, c, d, a1, b1, c1, d1] = [&p[0], &p[1], &p[2], &p[3], &p[4], &p[5], &p[6], &p[7]];
            let hyp = equi_e(a, b, a1, b1)
                && equi_e(b, c, b1, c1)
                && equi_e(a, d, a1, d1)
                && equi_e(b, d, b1, d1)
                && !a.same(b)
                && betw_t(a, b, c)
                && betw_t(a1, b1, c1);
            implies(hyp, || equi_e(c, d, c1, d1))
        }
        Axiom::A6 => implies(betw_t(&p[0], &p[1], &p[0]), || p[0].same(&p[1])),
        Axiom::A7 => {
            let [a, pp, c, b, q] = [&p[0], &p[1], &p[2], &p[3], &p[4]];
            if betw_t(a, pp, c) && betw_t(b, q, c) {
                let x = ip(a, pp, c, b, q)?;
                betw_t(pp, &x, b) && betw_t(q, &x, a)
            } else {
                true
            }
        }
        Axiom::A8Prime => {
            let [al, be, ga] = [&p[0], &p[1], &p[2]];
            !betw_t(al, be, ga) && !betw_t(be, ga, al) && !betw_t(ga, al, be)
        }
        Axiom::A9 => {
            let [a, b, c, pp, q] = [&p[0], &p[1], &p[2], &p[3], &p[4]];
            let hyp = equi_e(a, pp, a, q) && equi_e(b, pp, b, q) && equi_e(c, pp, c, q) && !pp.same(q);
            implies(hyp, || betw_t(a, b, c) || betw_t(b, c, a) || betw_t(c, a, b))
        }
        Axiom::A10Hyp => a10_hypothesis(&p[0], &p[1], &p[2], &p[3], &p[4]),
        Axiom::A10Cons => a10_consequent_atoms(&p[0], &p[1], &p[2], &p[4], &p[5], &p[6]).iter().all(|&v| v),
        Axiom::A10 => implies(a10_hypothesis(&p[0], &p[1], &p[2], &p[3], &p[4]), || {
            a10_consequent_atoms(&p[0], &p[1], &p[2], &p[4], &p[5], &p[6]).iter().all(|&v| v)
        }),
        Axiom::CA => {
            let [pp, q, a, b, x, y] = [&p[0], &p[1], &p[2], &p[3], &p[4], &p[5]];
            let hyp = betw_t(a, x, b) && betw_t(a, b, y) && equi_e(a, x, a, pp) && equi_e(a, q, a, y);
            if hyp {
                let z = ilc(pp, q, a, b, x, y)?;
                equi_e(a, &z, a, b) && betw_t(pp, &z, q)
            } else {
                true
            }
        }
        Axiom::OuterPasch => {
            // T(a,p,c) ∧ T(q,c,b) → T(a,x,q) ∧ T(b,p,x) for the supplied x
            let [a, pp, c, q, b, x] = [&p[0], &p[1], &p[2], &p[3], &p[4], &p[5]];
            implies(betw_t(a, pp, c) && betw_t(q, c, b), || betw_t(a, x, q) && betw_t(b, pp, x))
        }
        Axiom::Euclid5 => {
            let [pp, q, r, s, t, a, x] = [&p[0], &p[1], &p[2], &p[3], &p[4], &p[5], &p[6]];
            let hyp = betw_b(q, a, r)
                && betw_b(pp, t, q)
                && equi_e(pp, r, q, s)
                && equi_e(pp, t, q, t)
                && equi_e(r, t, s, t)
                && !col(s, q, pp);
            implies(hyp, || betw_b(pp, a, x) && betw_b(s, q, x))
        }
    })
}

/// Exact maximum pairwise distance.
pub fn diameter<F: OrderedField>(pts: &[Point<F>]) -> Result<F, FieldError> {
    max_dist2(pts).sqrt()
}

/// Exact maximum pairwise squared distance; zero for fewer than two points.
pub fn max_dist2<F: OrderedField>(pts: &[Point<F>]) -> F {
    let mut best: Option<F> = None;
    for (i, a) in pts.iter().enumerate() {
        for b in &pts[i + 1..] {
            let d = a.dist2(b);
            if best.as_ref().is_none_or(|m| d.cmp_to(m).is_gt()) {
                best = Some(d);
            }
        }
    }
    best.unwrap_or_else(|| pts[0].x.zero_like())
}

/// Named given points of a construction session.
#[derive(Debug, Clone)]
pub struct Config<F> {
    pub points: Vec<(String, Point<F>)>,
}

impl<F: OrderedField> Config<F> {
    pub fn new(points: Vec<(String, Point<F>)>) -> Self {
        assert!(!points.is_empty(), "a configuration needs at least one point");
        Config { points }
    }

    pub fn get(&self, name: &str) -> Option<&Point<F>> {
        self.points.iter().find(|(n, _)| n == name).map(|(_, p)| p)
    }

    pub fn pts(&self) -> Vec<Point<F>> {
        self.points.iter().map(|(_, p)| p.clone()).collect()
    }

    pub fn diameter(&self) -> Result<F, FieldError> {
        diameter(&self.pts())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> EPoint {
        EPoint::from_ints(x, y)
    }

    fn pq(xn: i64, xd: i64, yn: i64, yd: i64) -> EPoint {
        Point::new(Scalar::frac(xn, xd), Scalar::frac(yn, yd))
    }

    #[test]
    fn predicates() {
        assert!(betw_t(&p(0, 0), &p(1, 0), &p(2, 0)));
        assert!(!betw_t(&p(0, 0), &p(2, 0), &p(1, 0)));
        assert!(betw_t(&p(0, 0), &p(0, 0), &p(5, 7)));
        assert!(equi_e(&p(0, 0), &p(3, 4), &p(0, 0), &p(5, 0)));
        assert!(!equi_e(&p(0, 0), &p(1, 0), &p(0, 0), &p(2, 0)));
        assert!(betw_b(&p(0, 0), &p(1, 0), &p(2, 0)));
        assert!(!betw_b(&p(0, 0), &p(0, 0), &p(2, 0)));
        assert!(!betw_b(&p(0, 0), &p(2, 0), &p(2, 0)));
    }

    #[test]
    fn extension() {
        assert_eq!(ext(&p(0, 0), &p(1, 0), &p(0, 0), &p(0, 2)).unwrap(), p(3, 0));
        assert_eq!(ext(&p(0, 0), &p(1, 0), &p(4, 4), &p(4, 4)).unwrap(), p(1, 0));
        let e = ext(&p(1, 1), &p(1, 1), &p(0, 0), &p(0, 1)).unwrap();
        assert_eq!(e, p(2, 1));
        assert!(betw_t(&p(1, 1), &p(1, 1), &e) && equi_e(&p(1, 1), &e, &p(0, 0), &p(0, 1)));
        // irrational length
        let e = ext(&p(0, 0), &p(1, 1), &p(0, 0), &p(1, 0)).unwrap();
        assert!(betw_t(&p(0, 0), &p(1, 1), &e) && equi_e(&p(1, 1), &e, &p(0, 0), &p(1, 0)));
    }

    #[test]
    fn inner_pasch() {
        let x = ip(&p(0, 0), &p(1, 1), &p(2, 2), &p(2, 0), &p(2, 1)).unwrap();
        assert_eq!(x, pq(4, 3, 2, 3));
        let o = p(3, 3);
        assert_eq!(ip(&o, &o, &o, &o, &o).unwrap(), o);
        assert!(matches!(
            ip(&p(0, 0), &p(5, 0), &p(1, 1), &p(2, 0), &p(1, 1)),
            Err(GeoError::PreconditionViolated(_))
        ));
        // collinear configuration
        let x = ip(&p(0, 0), &p(1, 0), &p(3, 0), &p(5, 0), &p(4, 0)).unwrap();
        assert!(betw_t(&p(1, 0), &x, &p(5, 0)) && betw_t(&p(4, 0), &x, &p(0, 0)));
        assert_eq!(x, p(1, 0));
    }

    #[test]
    fn circle_intersection() {
        let y = Point::new(Scalar::from_int(90).sqrt_nonneg().unwrap(), Scalar::zero());
        let z = ilc(&p(3, 0), &p(3, 9), &p(0, 0), &p(5, 0), &p(3, 0), &y).unwrap();
        assert_eq!(z, p(3, 4));
        let z = ilc(&p(5, 0), &p(3, 9), &p(0, 0), &p(5, 0), &p(5, 0), &y).unwrap();
        assert_eq!(z, p(5, 0));
        assert!(matches!(
            ilc(&p(3, 0), &p(1, 1), &p(0, 0), &p(5, 0), &p(3, 0), &y),
            Err(GeoError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn perpendiculars() {
        let (a, b) = (p(0, 0), p(1, 0));
        assert_eq!(drop_perp(&a, &b, &p(2, 3)).unwrap(), (p(2, 0), p(2, 3)));
        assert_eq!(drop_perp(&a, &b, &p(0, 5)).unwrap().0, p(0, 0));
        assert_eq!(drop_perp(&a, &b, &p(1, 0)), Err(GeoError::PointOnLine));
        assert_eq!(erect_perp(&a, &b, &p(2, 0)).unwrap(), (p(2, 0), p(2, 1)));
        assert_eq!(erect_perp(&a, &b, &p(0, 0)).unwrap().1, p(0, 1));
        assert_eq!(erect_perp(&a, &b, &p(0, 1)), Err(GeoError::PointNotOnLine));
        assert_eq!(erect_perp(&a, &a, &p(0, 1)), Err(GeoError::DegenerateLine));
        let (f, h) = drop_perp(&a, &b, &p(2, 3)).unwrap();
        assert!(phi(&a, &b, &p(2, 3), &f, &h).holds());
    }

    #[test]
    fn axioms() {
        assert!(axiom_eval(Axiom::A1, &[p(1, 2), p(3, 5)]).unwrap());
        assert!(axiom_eval(Axiom::A8Prime, &[p(0, 0), p(1, 0), p(0, 1)]).unwrap());
        let t = p(0, 0);
        let pts = [p(0, 4), pq(-1, 1, 15, 16), pq(1, 1, 15, 16), pq(0, 1, 15, 16), t.clone(), t.clone(), t];
        assert!(!axiom_eval(Axiom::A10Cons, &pts).unwrap());
        assert!(matches!(axiom_eval(Axiom::A1, &[p(0, 0)]), Err(AxiomError::WrongArity { .. })));
        assert!(matches!(Axiom::parse("A12"), Err(AxiomError::UnknownAxiom(_))));
        assert_eq!(Axiom::parse("a4'").unwrap(), Axiom::A4Prime);
    }
}
