use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rcgeom::exactnum::{parse_scalar, Scalar};
use rcgeom::geoplane::*;
use rcgeom::sampling::{ext_args, ilc_args, ip_args, rational, Sampler};

fn p(x: i64, y: i64) -> EPoint {
    EPoint::from_ints(x, y)
}

fn sampler(rng: &mut ChaCha8Rng) -> Sampler<'_, ChaCha8Rng, impl FnMut(&mut ChaCha8Rng) -> Scalar> {
    Sampler {
        rng,
        elem: |r: &mut ChaCha8Rng| rational(r, -10, 10, 6),
    }
}

#[test]
fn ext_postconditions() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut s = sampler(&mut rng);
    for _ in 0..300 {
        let [a, b, pp, q] = ext_args(&mut s);
        let x = ext(&a, &b, &pp, &q).unwrap();
        assert!(betw_t(&a, &b, &x));
        assert!(equi_e(&b, &x, &pp, &q));
    }
}

#[test]
fn ip_postconditions() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut s = sampler(&mut rng);
    for _ in 0..300 {
        let [a, pp, c, b, q] = ip_args(&mut s);
        let x = ip(&a, &pp, &c, &b, &q).unwrap();
        assert!(betw_t(&pp, &x, &b) && betw_t(&q, &x, &a));
    }
}

#[test]
fn ilc_postconditions() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut s = sampler(&mut rng);
    for _ in 0..300 {
        let [pp, q, a, b, x, y] = ilc_args(&mut s);
        let z = ilc(&pp, &q, &a, &b, &x, &y).unwrap();
        assert!(equi_e(&a, &z, &a, &b));
        assert!(betw_t(&pp, &z, &q));
    }
}

#[test]
fn circle_example() {
    let y = parse_point("(sqrt(90), 0)");
    let z = ilc(&p(3, 0), &p(3, 9), &p(0, 0), &p(5, 0), &p(3, 0), &y).unwrap();
    assert_eq!(z, p(3, 4));
    // irrational intersection
    let q = parse_point("(sqrt(8), 0)");
    let z = ilc(&p(0, 0), &q, &p(0, 0), &p(1, 1), &p(0, 0), &p(2, 2)).unwrap();
    assert_eq!(z.x, Scalar::from_int(2).sqrt_nonneg().unwrap());
    assert!(ilc(&p(3, 0), &p(3, 9), &p(0, 0), &p(5, 0), &p(3, 0), &p(9, 0)).is_err());
}

#[test]
fn predicate_edge_cases() {
    assert!(betw_t(&p(0, 0), &p(0, 0), &p(1, 1)));
    assert!(!betw_b(&p(0, 0), &p(0, 0), &p(1, 1)));
    assert!(betw_t(&p(2, 2), &p(2, 2), &p(2, 2)));
    assert!(!betw_t(&p(0, 0), &p(2, 2), &p(1, 1)));
    let r = Scalar::from_int(2).sqrt_nonneg().unwrap();
    let diag = Point::new(r.clone(), r);
    assert!(equi_e(&p(0, 0), &diag, &p(0, 0), &p(2, 0)));
    assert!(ip(&p(0, 0), &p(5, 5), &p(2, 2), &p(2, 0), &p(2, 1)).is_err());
    assert_eq!(ext(&p(1, 1), &p(1, 1), &p(0, 0), &p(3, 4)).unwrap(), p(6, 1));
}

/// A rotation by a Pythagorean angle and a translation preserve `E` and `T`.
#[test]
fn congruence_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let (c, s) = (Scalar::frac(3, 5), Scalar::frac(4, 5));
    let mv = |v: &EPoint, t: &EPoint| Point::new(&(&v.x * &c) - &(&v.y * &s) + &t.x, &(&v.x * &s) + &(&v.y * &c) + &t.y);
    for _ in 0..200 {
        let pts: Vec<EPoint> = (0..4).map(|_| Point::new(rational(&mut rng, -9, 9, 4), rational(&mut rng, -9, 9, 4))).collect();
        let shift = Point::new(rational(&mut rng, -9, 9, 4), rational(&mut rng, -9, 9, 4));
        let moved: Vec<EPoint> = pts.iter().map(|v| mv(v, &shift)).collect();
        assert_eq!(pts[0].dist2(&pts[1]), moved[0].dist2(&moved[1]));
        assert_eq!(
            equi_e(&pts[0], &pts[1], &pts[2], &pts[3]),
            equi_e(&moved[0], &moved[1], &moved[2], &moved[3])
        );
        let t = rational(&mut rng, 0, 1, 5);
        let mid = pts[0].add(&pts[1].sub(&pts[0]).scale(&t));
        assert!(betw_t(&mv(&pts[0], &shift), &mv(&mid, &shift), &mv(&pts[1], &shift)));
        if pts[0].same(&pts[1]) {
            // the degenerate direction is fixed along +x
            continue;
        }
        let ext_then_move = mv(&ext(&pts[0], &pts[1], &pts[2], &pts[3]).unwrap(), &shift);
        let move_then_ext = ext(&moved[0], &moved[1], &moved[2], &moved[3]).unwrap();
        assert_eq!(ext_then_move, move_then_ext);
    }
}

#[test]
fn perpendiculars() {
    let (foot, head) = drop_perp(&p(0, 0), &p(4, 0), &p(1, 3)).unwrap();
    assert_eq!(foot, p(1, 0));
    assert_eq!(head, p(1, 3));
    assert!(phi(&p(0, 0), &p(4, 0), &p(1, 3), &foot, &head).holds());
    let (c, up) = erect_perp(&p(0, 0), &p(4, 0), &p(1, 0)).unwrap();
    assert!(phi(&p(0, 0), &p(4, 0), &p(1, 0), &c, &up).holds());
    assert_eq!(drop_perp(&p(0, 0), &p(4, 0), &p(2, 0)), Err(GeoError::PointOnLine));
    assert_eq!(erect_perp(&p(0, 0), &p(4, 0), &p(2, 1)), Err(GeoError::PointNotOnLine));
    assert_eq!(drop_perp(&p(1, 1), &p(1, 1), &p(2, 0)), Err(GeoError::DegenerateLine));
}

#[test]
fn axiom_table() {
    for ax in Axiom::ALL {
        assert_eq!(Axiom::parse(ax.name()).unwrap(), ax);
        assert_eq!(ax.variables().split(',').count(), ax.arity());
    }
    assert!(Axiom::parse("A12").is_err());
    assert!(matches!(axiom_eval(Axiom::A1, &[p(0, 0)]), Err(AxiomError::WrongArity { .. })));
    let consts = [p(0, 0), p(1, 0), p(0, 1)];
    assert!(axiom_eval(Axiom::A8Prime, &consts).unwrap());
    assert!(!axiom_eval(Axiom::A8Prime, &[p(0, 0), p(1, 0), p(2, 0)]).unwrap());
    // outer Pasch with a supplied witness
    let x = parse_point("(-2, 4)");
    assert!(axiom_eval(Axiom::OuterPasch, &[p(0, 0), p(1, 0), p(2, 0), p(-1, 2), p(5, -2), x]).is_ok());
}

fn parse_point(s: &str) -> EPoint {
    let (x, y) = s.trim_matches(|c| c == '(' || c == ')').split_once(',').unwrap();
    Point::new(parse_scalar(x).unwrap(), parse_scalar(y).unwrap())
}

#[test]
fn random_axioms_hold_in_the_plane() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..200 {
        let pts: Vec<EPoint> = (0..8).map(|_| p(rng.random_range(-3..=3), rng.random_range(-3..=3))).collect();
        for ax in [Axiom::A1, Axiom::A2, Axiom::A3, Axiom::A5, Axiom::A6, Axiom::A7, Axiom::A9] {
            assert!(axiom_eval(ax, &pts[..ax.arity()]).unwrap(), "{}", ax.name());
        }
    }
}
