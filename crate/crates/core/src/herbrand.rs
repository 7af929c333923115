//! Terms evaluated in the plane: traces with per-step diameters, the
//! doubling bound, the witness configuration that refutes candidate
//! Herbrand disjunctions of the parallel axiom, an exhaustive term
//! enumerator, and the two-perpendicular disjunction.

use crate::exactnum::Scalar;
use crate::field::{FieldError, OrderedField};
use crate::geoplane::{
    a10_consequent_atoms, a10_hypothesis, drop_perp, erect_perp, ext, ilc, ip, max_dist2, phi, Config, EPoint,
    GeoError, PhiAtoms, Point,
};
use crate::termlang::{Constant, Term};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};

pub type Env<F> = BTreeMap<String, Point<F>>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("unbound variable {0}")]
    UnboundVariable(String),
    #[error("precondition violated at {path}: {msg}")]
    PreconditionViolated { path: String, msg: String },
    #[error("field error at {path}: {err}")]
    Field { path: String, err: FieldError },
    #[error("root symbols are not supported over this field (at {path})")]
    RootUnsupported { path: String },
}

impl EvalError {
    fn at(path: &[usize], e: GeoError) -> EvalError {
        let path = render_path(path);
        match e {
            GeoError::Field(err) => EvalError::Field { path, err },
            other => EvalError::PreconditionViolated {
                path,
                msg: other.to_string(),
            },
        }
    }
}

fn render_path(path: &[usize]) -> String {
    if path.is_empty() {
        "root".into()
    } else {
        path.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(".")
    }
}

/// Fixed points for `alpha`, `beta`, `gamma`.
pub fn constant_point<F: OrderedField>(c: Constant, ctx: &F::Ctx) -> Point<F> {
    let (x, y) = match c {
        Constant::Alpha => (0, 0),
        Constant::Beta => (1, 0),
        Constant::Gamma => (0, 1),
    };
    Point::new(F::from_int(x, ctx), F::from_int(y, ctx))
}

#[derive(Debug, Clone)]
pub struct TraceStep<F> {
    pub term: Term,
    /// child indices from the root of the evaluated term
    pub path: String,
    pub point: Point<F>,
    /// maximum pairwise distance among the base and all points built so far
    pub diameter: F,
}

#[derive(Debug, Clone)]
pub struct EvalTrace<F> {
    pub initial_diameter: F,
    pub steps: Vec<TraceStep<F>>,
}

impl<F: OrderedField> EvalTrace<F> {
    /// Diameters `d_0, d_1, ..` including the initial one.
    pub fn diameters(&self) -> Vec<&F> {
        std::iter::once(&self.initial_diameter).chain(self.steps.iter().map(|s| &s.diameter)).collect()
    }

    /// Each step at most doubles the diameter (or reaches 1 when `with_roots`).
    pub fn doubling_holds(&self, with_roots: bool) -> bool {
        let ds = self.diameters();
        ds.windows(2).all(|w| {
            let two = F::from_int(2, &w[0].ctx());
            let mut cap = w[0].mul(&two);
            if with_roots {
                let one = F::from_int(1, &w[0].ctx());
                if one.cmp_to(&cap).is_gt() {
                    cap = one;
                }
            }
            w[1].cmp_to(w[0]).is_ge() && w[1].cmp_to(&cap).is_le()
        })
    }
}

struct Evaluator<'a, F: OrderedField> {
    env: &'a Env<F>,
    ctx: F::Ctx,
    seen: Vec<Point<F>>,
    best2: F,
    steps: Vec<TraceStep<F>>,
}

impl<F: OrderedField> Evaluator<'_, F> {
    fn absorb(&mut self, p: &Point<F>) {
        for q in &self.seen {
            let d = p.dist2(q);
            if d.cmp_to(&self.best2).is_gt() {
                self.best2 = d;
            }
        }
        self.seen.push(p.clone());
    }

    fn eval(&mut self, t: &Term, path: &mut Vec<usize>) -> Result<Point<F>, EvalError> {
        let args = match t {
            Term::Var(v) => return self.env.get(v).cloned().ok_or_else(|| EvalError::UnboundVariable(v.clone())),
            Term::Const(c) => return Ok(constant_point(*c, &self.ctx)),
            _ => {
                let mut out = Vec::with_capacity(t.children().len());
                for (i, c) in t.children().iter().enumerate() {
                    path.push(i);
                    let r = self.eval(c, path);
                    path.pop();
                    out.push(r?);
                }
                out
            }
        };
        let p = &args;
        let point = match t {
            Term::Ext(_) => ext(&p[0], &p[1], &p[2], &p[3]),
            Term::Ip(_) => ip(&p[0], &p[1], &p[2], &p[3], &p[4]),
            Term::Ilc(_) => ilc(&p[0], &p[1], &p[2], &p[3], &p[4], &p[5]),
            Term::Root(_) => {
                let coeffs: Vec<F> = p.iter().map(|q| q.x.clone()).collect();
                let r = F::least_odd_root(&coeffs).ok_or_else(|| EvalError::RootUnsupported {
                    path: render_path(path),
                })?;
                Ok(Point::new(r, F::from_int(0, &self.ctx)))
            }
            Term::Var(_) | Term::Const(_) => unreachable!(),
        }
        .map_err(|e| EvalError::at(path, e))?;
        self.absorb(&point);
        let diameter = self.best2.sqrt().map_err(|err| EvalError::Field {
            path: render_path(path),
            err,
        })?;
        self.steps.push(TraceStep {
            term: t.clone(),
            path: render_path(path),
            point: point.clone(),
            diameter,
        });
        Ok(point)
    }
}

fn collect_constants(t: &Term, out: &mut Vec<Constant>) {
    if let Term::Const(c) = t {
        if !out.contains(c) {
            out.push(*c);
        }
    }
    for c in t.children() {
        collect_constants(c, out);
    }
}

/// Evaluates `t`; the base of the trace is every bound point plus the
/// constants the term mentions.
pub fn evaluate<F: OrderedField>(t: &Term, env: &Env<F>, ctx: &F::Ctx) -> Result<(Point<F>, EvalTrace<F>), EvalError> {
    if let Some(v) = t.free_vars().into_iter().find(|v| !env.contains_key(v)) {
        return Err(EvalError::UnboundVariable(v));
    }
    let mut consts = Vec::new();
    collect_constants(t, &mut consts);
    let mut ev = Evaluator {
        env,
        ctx: ctx.clone(),
        seen: Vec::new(),
        best2: F::from_int(0, ctx),
        steps: Vec::new(),
    };
    for p in env.values().cloned().chain(consts.iter().map(|c| constant_point(*c, ctx))) {
        ev.absorb(&p);
    }
    let initial_diameter = ev.best2.sqrt().map_err(|err| EvalError::Field {
        path: "base".into(),
        err,
    })?;
    let point = ev.eval(t, &mut Vec::new())?;
    Ok((
        point,
        EvalTrace {
            initial_diameter,
            steps: ev.steps,
        },
    ))
}

/// `2^k D0`, or with roots the `k`-fold iterate of `s -> max(1, 2 s)`.
pub fn reach_bound(k: u32, d0: &Scalar, with_roots: bool) -> Scalar {
    let two = Scalar::from_int(2);
    let one = Scalar::one();
    (0..k).fold(d0.clone(), |s, _| {
        let next = &s * &two;
        if with_roots {
            next.max(one.clone())
        } else {
            next
        }
    })
}

/// `t, a, b, c, d` with offset `2^(-k-2)`.
pub fn witness_points(k: u32) -> Config<Scalar> {
    let y = Scalar::one() - Scalar::pow2(-(i64::from(k)) - 2);
    let pt = |x: i64, y: Scalar| Point::new(Scalar::from_int(x), y);
    Config::new(vec![
        ("t".into(), EPoint::from_ints(0, 0)),
        ("a".into(), EPoint::from_ints(0, 1)),
        ("b".into(), pt(-1, y.clone())),
        ("c".into(), pt(1, y.clone())),
        ("d".into(), pt(0, y)),
    ])
}

pub fn config_env<F: OrderedField>(cfg: &Config<F>) -> Env<F> {
    cfg.points.iter().cloned().collect()
}

// ----- reports -------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScalarOut {
    pub exact: String,
    pub approx: String,
}

impl ScalarOut {
    pub fn of<F: OrderedField>(v: &F) -> ScalarOut {
        ScalarOut {
            exact: v.exact_string(),
            approx: v.approx_string(6),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PointOut {
    pub x: ScalarOut,
    pub y: ScalarOut,
}

impl PointOut {
    pub fn of<F: OrderedField>(p: &Point<F>) -> PointOut {
        PointOut {
            x: ScalarOut::of(&p.x),
            y: ScalarOut::of(&p.y),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundCertificate {
    pub k: u32,
    pub d0: ScalarOut,
    pub reach_bound: ScalarOut,
    pub required_magnitude: ScalarOut,
    pub bound: String,
    pub required: String,
    pub strict: bool,
}

impl BoundCertificate {
    pub fn new(k: u32, d0: &Scalar) -> BoundCertificate {
        let reach = reach_bound(k, d0, false);
        let required = Scalar::pow2(i64::from(k) + 2);
        BoundCertificate {
            k,
            d0: ScalarOut::of(d0),
            strict: reach < required,
            reach_bound: ScalarOut::of(&reach),
            required_magnitude: ScalarOut::of(&required),
            bound: format!("2^{}", k + 1),
            required: format!("2^{}", k + 2),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessOut {
    pub t: PointOut,
    pub a: PointOut,
    pub b: PointOut,
    pub c: PointOut,
    pub d: PointOut,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[allow(non_snake_case)]
pub struct ConsequentAtoms {
    pub Tabx: bool,
    pub Tacy: bool,
    pub Txty: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct DisjunctRecord {
    pub x: String,
    pub y: String,
    pub x_point: Option<PointOut>,
    pub y_point: Option<PointOut>,
    pub atoms: ConsequentAtoms,
    pub defined: bool,
    pub holds: bool,
    pub error: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Refuted,
    NotRefuted,
}

#[derive(Debug, Clone, Serialize)]
pub struct RefutationReport {
    pub k: u32,
    pub points: WitnessOut,
    pub bound: String,
    pub required: String,
    pub certificate: BoundCertificate,
    pub hypothesis_holds: bool,
    pub disjuncts: Vec<DisjunctRecord>,
    pub verdict: Verdict,
}

const WITNESS_VARS: [&str; 5] = ["a", "b", "c", "d", "t"];

/// Evaluates every disjunct's parallel-axiom consequent at the witness
/// configuration for `k = 1 + max symbol count`.
pub fn refute_disjunction(pairs: &[(Term, Term)]) -> RefutationReport {
    let max_count = pairs.iter().flat_map(|(x, y)| [x.symbol_count(), y.symbol_count()]).max().unwrap_or(0);
    let k = max_count as u32 + 1;
    let cfg = witness_points(k);
    let env = config_env(&cfg);
    let g = |n: &str| cfg.get(n).unwrap().clone();
    let (t, a, b, c, d) = (g("t"), g("a"), g("b"), g("c"), g("d"));
    let d0 = cfg.diameter().expect("diameter of rational points");
    let disjuncts: Vec<DisjunctRecord> = pairs
        .iter()
        .map(|(xt, yt)| {
            let stray = xt
                .free_vars()
                .into_iter()
                .chain(yt.free_vars())
                .find(|v| !WITNESS_VARS.contains(&v.as_str()));
            let eval_pair = || -> Result<(EPoint, EPoint), EvalError> {
                if let Some(v) = &stray {
                    return Err(EvalError::UnboundVariable(v.clone()));
                }
                Ok((evaluate(xt, &env, &())?.0, evaluate(yt, &env, &())?.0))
            };
            match eval_pair() {
                Ok((x, y)) => {
                    let [tabx, tacy, txty] = a10_consequent_atoms(&a, &b, &c, &t, &x, &y);
                    DisjunctRecord {
                        x: xt.render(),
                        y: yt.render(),
                        x_point: Some(PointOut::of(&x)),
                        y_point: Some(PointOut::of(&y)),
                        atoms: ConsequentAtoms {
                            Tabx: tabx,
                            Tacy: tacy,
                            Txty: txty,
                        },
                        defined: true,
                        holds: tabx && tacy && txty,
                        error: None,
                    }
                }
                Err(e) => DisjunctRecord {
                    x: xt.render(),
                    y: yt.render(),
                    x_point: None,
                    y_point: None,
                    atoms: ConsequentAtoms {
                        Tabx: false,
                        Tacy: false,
                        Txty: false,
                    },
                    defined: false,
                    holds: false,
                    error: Some(e.to_string()),
                },
            }
        })
        .collect();
    let verdict = if disjuncts.iter().any(|r| r.holds) {
        Verdict::NotRefuted
    } else {
        Verdict::Refuted
    };
    let certificate = BoundCertificate::new(k, &d0);
    RefutationReport {
        k,
        points: WitnessOut {
            t: PointOut::of(&t),
            a: PointOut::of(&a),
            b: PointOut::of(&b),
            c: PointOut::of(&c),
            d: PointOut::of(&d),
        },
        bound: certificate.bound.clone(),
        required: certificate.required.clone(),
        certificate,
        hypothesis_holds: a10_hypothesis(&a, &b, &c, &d, &t),
        disjuncts,
        verdict,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DisjunctionParseError {
    #[error("line {line}: expected 'X ; Y'")]
    Shape { line: usize },
    #[error("line {line}: {err}")]
    Term {
        line: usize,
        err: crate::termlang::ParseError,
    },
}

/// Lines `X ; Y`; blank lines and `#` comments are skipped.
pub fn parse_disjunction_file(text: &str) -> Result<Vec<(Term, Term)>, DisjunctionParseError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = crate::termlang::strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        let n = i + 1;
        let mut parts = line.split(';');
        let (Some(x), Some(y), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(DisjunctionParseError::Shape { line: n });
        };
        let parse = |s: &str| crate::termlang::parse(s.trim()).map_err(|err| DisjunctionParseError::Term { line: n, err });
        out.push((parse(x)?, parse(y)?));
    }
    Ok(out)
}

/// The bundled five-disjunct sample.
pub const SAMPLE_DISJUNCTION: &str = include_str!("../data/sample_disjunction.txt");

// ----- enumeration ---------------------------------------------------------

#[derive(Debug, Clone)]
pub struct Enumerated {
    pub term: Term,
    pub point: EPoint,
    pub size: usize,
    /// largest squared distance to a base point
    pub max_dist2: Scalar,
}

impl Enumerated {
    pub fn max_dist(&self) -> Scalar {
        self.max_dist2.sqrt_nonneg().expect("squared distances are nonnegative")
    }
}

const SYMBOLS: [(&str, usize); 3] = [("ext", 4), ("ip", 5), ("ilc", 6)];

/// Ordered ways to write `total` as `parts` sizes that occur in `avail`.
fn compositions(total: usize, parts: usize, avail: &[bool]) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        if !avail.get(first).copied().unwrap_or(false) {
            continue;
        }
        for mut rest in compositions(total - first, parts - 1, avail) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn grid_key(p: &EPoint) -> (i64, i64) {
    let q = |v: f64| (v * 1e6).floor() as i64;
    (q(p.x.to_f64()), q(p.y.to_f64()))
}

/// Every term over the base names with at most `max_symbols` symbols whose
/// construction preconditions hold. With `dedup`, each point is reported
/// once, under the first term (in enumeration order) of the smallest size
/// that reaches it, and only those representatives are used as children.
/// Output order: by size, then symbol (`ext`, `ip`, `ilc`), then child
/// sizes, then children in base/enumeration order.
pub fn enumerate_terms(base: &Config<Scalar>, max_symbols: usize, dedup: bool) -> Vec<Enumerated> {
    let base_pts = base.pts();
    let dist_to_base = |p: &EPoint| {
        base_pts
            .iter()
            .map(|b| p.dist2(b))
            .reduce(|m, d| if d > m { d } else { m })
            .unwrap()
    };
    let mut by_size: Vec<Vec<Enumerated>> = Vec::new();
    let mut buckets: HashMap<(i64, i64), Vec<(usize, usize)>> = HashMap::new();
    let mut level0 = Vec::new();
    for (name, p) in &base.points {
        let e = Enumerated {
            term: Term::var(name),
            point: p.clone(),
            size: 0,
            max_dist2: dist_to_base(p),
        };
        if dedup && is_duplicate(&buckets, &by_size, &level0, p) {
            continue;
        }
        if dedup {
            buckets.entry(grid_key(p)).or_default().push((0, level0.len()));
        }
        level0.push(e);
    }
    by_size.push(level0);
    for s in 1..=max_symbols {
        let avail: Vec<bool> = by_size.iter().map(|l| !l.is_empty()).collect();
        let mut candidates: Vec<(usize, Vec<usize>)> = Vec::new();
        for (si, (_, arity)) in SYMBOLS.iter().enumerate() {
            for comp in compositions(s - 1, *arity, &avail) {
                candidates.push((si, comp));
            }
        }
        let mut level: Vec<Enumerated> = Vec::new();
        for (si, comp) in candidates {
            let (name, _) = SYMBOLS[si];
            let radices: Vec<usize> = comp.iter().map(|&c| by_size[c].len()).collect();
            let total: usize = radices.iter().product();
            let results: Vec<Option<(Term, EPoint)>> = (0..total)
                .into_par_iter()
                .map(|idx| {
                    let mut rem = idx;
                    let mut kids = vec![0usize; radices.len()];
                    for j in (0..radices.len()).rev() {
                        kids[j] = rem % radices[j];
                        rem /= radices[j];
                    }
                    let args: Vec<&Enumerated> = comp.iter().zip(&kids).map(|(&c, &i)| &by_size[c][i]).collect();
                    let pts: Vec<&EPoint> = args.iter().map(|e| &e.point).collect();
                    if !quick_precondition(name, &pts) {
                        return None;
                    }
                    let point = match name {
                        "ext" => ext(pts[0], pts[1], pts[2], pts[3]),
                        "ip" => ip(pts[0], pts[1], pts[2], pts[3], pts[4]),
                        _ => ilc(pts[0], pts[1], pts[2], pts[3], pts[4], pts[5]),
                    }
                    .ok()?;
                    let term = Term::apply(name, args.iter().map(|e| e.term.clone()).collect()).unwrap();
                    Some((term, point))
                })
                .collect();
            for (term, point) in results.into_iter().flatten() {
                if dedup {
                    if is_duplicate(&buckets, &by_size, &level, &point) {
                        continue;
                    }
                    buckets.entry(grid_key(&point)).or_default().push((s, level.len()));
                }
                let max_dist2 = dist_to_base(&point);
                level.push(Enumerated {
                    term,
                    point,
                    size: s,
                    max_dist2,
                });
            }
        }
        by_size.push(level);
    }
    by_size.into_iter().flatten().collect()
}

fn is_duplicate(
    buckets: &HashMap<(i64, i64), Vec<(usize, usize)>>,
    by_size: &[Vec<Enumerated>],
    current: &[Enumerated],
    p: &EPoint,
) -> bool {
    let (kx, ky) = grid_key(p);
    for dx in -1..=1 {
        for dy in -1..=1 {
            if let Some(v) = buckets.get(&(kx + dx, ky + dy)) {
                for &(s, i) in v {
                    let q = if s < by_size.len() { &by_size[s][i].point } else { &current[i].point };
                    if q.same(p) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Cheap rejection of candidates whose preconditions visibly fail, using
/// rigorous floating enclosures only to discard.
fn quick_precondition(name: &str, p: &[&EPoint]) -> bool {
    use crate::exactnum::approx_point as ap;
    match name {
        "ip" => ap::maybe_betw(p[0], p[1], p[2]) && ap::maybe_betw(p[3], p[4], p[2]),
        "ilc" => {
            let [pp, q, a, b, x, y] = [p[0], p[1], p[2], p[3], p[4], p[5]];
            ap::maybe_betw(a, x, b) && ap::maybe_betw(a, b, y) && ap::maybe_equi(a, x, a, pp) && ap::maybe_equi(a, q, a, y)
        }
        _ => true,
    }
}

// ----- two perpendiculars --------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct PerpBranch {
    pub constructed: bool,
    pub foot: Option<PointOut>,
    pub head: Option<PointOut>,
    pub atoms: Option<PhiAtoms>,
    pub holds: bool,
    pub error: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PerpDemoReport {
    pub a: PointOut,
    pub b: PointOut,
    pub c: PointOut,
    pub c_on_line: bool,
    pub drop: PerpBranch,
    pub erect: PerpBranch,
    /// 1 for the dropped perpendicular, 2 for the erected one
    pub holding_disjunct: Option<u8>,
}

fn perp_branch<F: OrderedField>(
    a: &Point<F>,
    b: &Point<F>,
    c: &Point<F>,
    r: Result<(Point<F>, Point<F>), GeoError>,
) -> PerpBranch {
    match r {
        Ok((foot, head)) => {
            let atoms = phi(a, b, c, &foot, &head);
            PerpBranch {
                constructed: true,
                foot: Some(PointOut::of(&foot)),
                head: Some(PointOut::of(&head)),
                holds: atoms.holds(),
                atoms: Some(atoms),
                error: None,
            }
        }
        Err(e) => PerpBranch {
            constructed: false,
            foot: None,
            head: None,
            atoms: None,
            holds: false,
            error: Some(e.to_string()),
        },
    }
}

/// Evaluates both disjuncts of the perpendicular disjunction.
pub fn perp_disjunction_demo<F: OrderedField>(a: &Point<F>, b: &Point<F>, c: &Point<F>) -> Result<PerpDemoReport, GeoError> {
    if a.same(b) {
        return Err(GeoError::DegenerateLine);
    }
    let drop = perp_branch(a, b, c, drop_perp(a, b, c));
    let erect = perp_branch(a, b, c, erect_perp(a, b, c));
    let holding_disjunct = match (drop.holds, erect.holds) {
        (true, false) => Some(1),
        (false, true) => Some(2),
        _ => None,
    };
    Ok(PerpDemoReport {
        a: PointOut::of(a),
        b: PointOut::of(b),
        c: PointOut::of(c),
        c_on_line: crate::geoplane::col(a, b, c),
        drop,
        erect,
        holding_disjunct,
    })
}

/// Squared distances from `p` to every base point are at most `bound2`.
pub fn within2(p: &EPoint, base: &[EPoint], bound2: &Scalar) -> bool {
    base.iter().all(|b| p.dist2(b) <= *bound2)
}

#[doc(hidden)]
pub fn max_pairwise2(pts: &[EPoint]) -> Scalar {
    max_dist2(pts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::termlang::parse;

    fn env(pairs: &[(&str, EPoint)]) -> Env<Scalar> {
        pairs.iter().map(|(n, p)| (n.to_string(), p.clone())).collect()
    }

    #[test]
    fn evaluation() {
        let e = env(&[
            ("a", EPoint::from_ints(0, 0)),
            ("b", EPoint::from_ints(1, 0)),
            ("p", EPoint::from_ints(0, 0)),
            ("q", EPoint::from_ints(0, 2)),
        ]);
        let (pt, trace) = evaluate(&parse("ext(a,b,p,q)").unwrap(), &e, &()).unwrap();
        assert_eq!(pt, EPoint::from_ints(3, 0));
        assert_eq!(trace.steps.len(), 1);
        assert!(trace.doubling_holds(false));
        let z = env(&[("a", EPoint::from_ints(0, 0))]);
        assert_eq!(evaluate(&parse("root3(a,a,a)").unwrap(), &z, &()).unwrap().0, EPoint::from_ints(0, 0));
        assert_eq!(
            evaluate(&parse("ext(a,b,p,zz)").unwrap(), &e, &()).unwrap_err(),
            EvalError::UnboundVariable("zz".into())
        );
    }

    #[test]
    fn bounds() {
        assert_eq!(reach_bound(2, &Scalar::from_int(2), false), Scalar::from_int(8));
        assert_eq!(reach_bound(0, &Scalar::from_int(5), false), Scalar::from_int(5));
        assert_eq!(reach_bound(3, &Scalar::frac(1, 2), true), Scalar::from_int(4));
    }

    #[test]
    fn witness_configuration() {
        let w = witness_points(2);
        assert_eq!(w.get("b").unwrap(), &Point::new(Scalar::from_int(-1), Scalar::frac(15, 16)));
        assert_eq!(w.diameter().unwrap(), Scalar::from_int(2));
    }

    #[test]
    fn refutations() {
        let pair = (parse("ext(a,b,t,a)").unwrap(), parse("ext(a,c,t,a)").unwrap());
        let r = refute_disjunction(&[pair]);
        assert_eq!(r.k, 2);
        assert_eq!(r.verdict, Verdict::Refuted);
        assert!(!r.disjuncts[0].holds && r.disjuncts[0].defined);
        let r = refute_disjunction(&[]);
        assert_eq!((r.k, r.verdict), (1, Verdict::Refuted));
        let r = refute_disjunction(&[(parse("t").unwrap(), parse("t").unwrap())]);
        assert!(!r.disjuncts[0].atoms.Tabx);
    }

    #[test]
    fn small_enumeration() {
        let w = witness_points(2);
        let rows = enumerate_terms(&w, 0, true);
        assert_eq!(rows.len(), 5);
        let rows = enumerate_terms(&w, 1, true);
        assert!(rows.iter().all(|r| r.max_dist2 <= Scalar::from_int(16)));
    }

    #[test]
    fn perpendicular_disjunction() {
        let (a, b) = (EPoint::from_ints(0, 0), EPoint::from_ints(1, 0));
        assert_eq!(perp_disjunction_demo(&a, &b, &EPoint::from_ints(2, 3)).unwrap().holding_disjunct, Some(1));
        assert_eq!(perp_disjunction_demo(&a, &b, &EPoint::from_ints(2, 0)).unwrap().holding_disjunct, Some(2));
        assert!(matches!(perp_disjunction_demo(&a, &a, &b), Err(GeoError::DegenerateLine)));
    }
}
