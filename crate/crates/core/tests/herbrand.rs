use rcgeom::dehnfield::{Series, SeriesCtx};
use rcgeom::exactnum::Scalar;
use rcgeom::field::OrderedField;
use rcgeom::geoplane::{EPoint, Point};
use rcgeom::herbrand::*;
use rcgeom::termlang::parse;

fn env(pairs: &[(&str, (i64, i64))]) -> Env<Scalar> {
    pairs.iter().map(|(n, (x, y))| (n.to_string(), EPoint::from_ints(*x, *y))).collect()
}

#[test]
fn nested_trace() {
    let e = env(&[("a", (0, 0)), ("b", (1, 0))]);
    let t = parse("ext(a,ext(a,b,a,b),a,b)").unwrap();
    let (pt, trace) = evaluate(&t, &e, &()).unwrap();
    assert_eq!(pt, EPoint::from_ints(3, 0));
    let ds: Vec<String> = trace.diameters().iter().map(|d| d.to_string()).collect();
    assert_eq!(ds, ["1", "2", "3"]);
    assert_eq!(trace.steps[0].path, "1");
    assert_eq!(trace.steps[1].path, "root");
    assert!(trace.doubling_holds(false));
}

#[test]
fn constants_join_the_base() {
    let (pt, trace) = evaluate(&parse("ext(alpha,beta,alpha,gamma)").unwrap(), &Env::<Scalar>::new(), &()).unwrap();
    assert_eq!(pt, EPoint::from_ints(2, 0));
    assert_eq!(trace.initial_diameter, Scalar::from_int(2).sqrt_nonneg().unwrap());
}

#[test]
fn errors_carry_paths() {
    let e = env(&[("a", (0, 0)), ("p", (5, 5)), ("c", (2, 2)), ("b", (2, 0)), ("q", (2, 1))]);
    match evaluate(&parse("ext(a,ip(a,p,c,b,q),a,a)").unwrap(), &e, &()) {
        Err(EvalError::PreconditionViolated { path, .. }) => assert_eq!(path, "1"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn roots_over_each_field() {
    let e = env(&[("m", (-2, 0)), ("z", (0, 0))]);
    // x^3 + 0 x^2 - 2 x + 0: least root -sqrt 2
    let (pt, trace) = evaluate(&parse("root3(z,m,z)").unwrap(), &e, &()).unwrap();
    assert_eq!(pt.x, -Scalar::from_int(2).sqrt_nonneg().unwrap());
    assert!(trace.doubling_holds(true));
    let ctx = SeriesCtx::default();
    let se: Env<Series> = [("z".to_string(), Point::new(Series::from_int(0, &ctx), Series::from_int(0, &ctx)))].into();
    assert!(matches!(evaluate(&parse("root1(z)").unwrap(), &se, &ctx), Err(EvalError::RootUnsupported { .. })));
}

#[test]
fn witness_family() {
    for k in 0..6 {
        let w = witness_points(k);
        assert_eq!(w.diameter().unwrap(), Scalar::from_int(2));
        let off = Scalar::pow2(-(k as i64) - 2);
        assert_eq!(w.get("d").unwrap().y, Scalar::one() - off);
    }
    assert_eq!(reach_bound(4, &Scalar::from_int(2), false), Scalar::from_int(32));
}

#[test]
fn sample_report() {
    let pairs = parse_disjunction_file(SAMPLE_DISJUNCTION).unwrap();
    assert_eq!(pairs.len(), 5);
    let r = refute_disjunction(&pairs);
    assert_eq!(r.verdict, Verdict::Refuted);
    assert_eq!(r.k, 4);
    assert!(r.hypothesis_holds && r.certificate.strict);
    let v = serde_json::to_value(&r).unwrap();
    assert_eq!(v["verdict"], "REFUTED");
    assert_eq!(v["points"]["b"]["y"]["exact"], "63/64");
    assert_eq!(v["disjuncts"][0]["atoms"]["Txty"], false);
}

#[test]
fn undefined_disjuncts_do_not_hold() {
    let pairs = parse_disjunction_file("ip(a,b,c,d,t) ; a\nq ; a\n").unwrap();
    let r = refute_disjunction(&pairs);
    assert!(r.disjuncts.iter().all(|d| !d.defined && !d.holds && d.error.is_some()));
    assert_eq!(r.verdict, Verdict::Refuted);
    assert!(parse_disjunction_file("a ; b ; c").is_err());
    assert!(matches!(parse_disjunction_file("\n\next(a) ; b"), Err(DisjunctionParseError::Term { line: 3, .. })));
}

#[test]
fn enumeration_order_and_dedup() {
    let base = rcgeom::geoplane::Config::new(vec![
        ("u".to_string(), EPoint::from_ints(0, 0)),
        ("v".to_string(), EPoint::from_ints(1, 0)),
    ]);
    let all = enumerate_terms(&base, 1, false);
    let ded = enumerate_terms(&base, 1, true);
    // 2^4 ext terms, all defined
    assert_eq!(all.iter().filter(|e| e.size == 1 && e.term.render().starts_with("ext")).count(), 16);
    assert!(ded.len() < all.len());
    // ext(u,u,u,v) lands on v; the first new point is (2,0)
    assert_eq!(ded[2].term.render(), "ext(u,v,u,v)");
    for (i, a) in ded.iter().enumerate() {
        for b in &ded[i + 1..] {
            assert!(!a.point.same(&b.point));
        }
    }
    // every deduplicated point also appears in the full list at the same size
    for d in &ded {
        assert!(all.iter().any(|e| e.size == d.size && e.point.same(&d.point)));
    }
}

#[test]
fn perp_demo_on_and_off_line() {
    let a = EPoint::from_ints(0, 0);
    let b = EPoint::from_ints(3, 1);
    let off = perp_disjunction_demo(&a, &b, &EPoint::from_ints(1, 4)).unwrap();
    assert_eq!(off.holding_disjunct, Some(1));
    let on = perp_disjunction_demo(&a, &b, &EPoint::from_ints(6, 2)).unwrap();
    assert_eq!(on.holding_disjunct, Some(2));
    assert!(on.drop.error.is_some());
    assert!(perp_disjunction_demo(&a, &a, &b).is_err());
}
