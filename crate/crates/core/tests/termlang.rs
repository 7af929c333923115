use proptest::prelude::*;
use rcgeom::termlang::{parse, parse_term_file, Constant, ParseError, Term};

fn leaf() -> impl Strategy<Value = Term> {
    prop_oneof![
        4 => "[a-z][a-z0-9_]{0,3}"
            .prop_filter("reserved", |s| !matches!(s.as_str(), "ext" | "ip" | "ilc" | "alpha" | "beta" | "gamma") && !s.starts_with("root"))
            .prop_map(Term::Var),
        1 => prop_oneof![Just(Constant::Alpha), Just(Constant::Beta), Just(Constant::Gamma)].prop_map(Term::Const),
    ]
}

fn term() -> impl Strategy<Value = Term> {
    leaf().prop_recursive(4, 40, 6, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 4).prop_map(|v| Term::apply("ext", v).unwrap()),
            prop::collection::vec(inner.clone(), 5).prop_map(|v| Term::apply("ip", v).unwrap()),
            prop::collection::vec(inner.clone(), 6).prop_map(|v| Term::apply("ilc", v).unwrap()),
            prop::collection::vec(inner, 1..=3).prop_filter_map("odd", Term::root),
        ]
    })
}

/// Counts `(` in the rendering: one per function symbol.
fn paren_count(t: &Term) -> usize {
    t.render().matches('(').count()
}

proptest! {
    #[test]
    fn round_trip(t in term()) {
        let text = t.render();
        prop_assert_eq!(parse(&text).unwrap(), t.clone());
        prop_assert_eq!(t.symbol_count(), paren_count(&t));
        let spaced = text.replace(',', " , ").replace('(', " ( ");
        prop_assert_eq!(parse(&spaced).unwrap(), t);
    }

    #[test]
    fn substitution_count(t in term(), s in term()) {
        let uses = t.render().split(|c: char| !c.is_ascii_alphanumeric() && c != '_').filter(|w| *w == "zz").count();
        let t2 = t.substitute("zz", &s);
        prop_assert_eq!(t2.symbol_count(), t.symbol_count() + uses * s.symbol_count());
        prop_assert!(!t2.free_vars().contains("zz") || s.free_vars().contains("zz"));
    }
}

#[test]
fn substitution_into_variable() {
    let t = parse("ext(zz,b,zz,q)").unwrap();
    let s = parse("ip(a,p,c,b,q)").unwrap();
    let u = t.substitute("zz", &s);
    assert_eq!(u.render(), "ext(ip(a,p,c,b,q),b,ip(a,p,c,b,q),q)");
    assert_eq!(u.symbol_count(), 3);
    assert_eq!(u.free_vars().into_iter().collect::<Vec<_>>(), ["a", "b", "c", "p", "q"]);
}

#[test]
fn diagnostics() {
    assert_eq!(
        parse("ilc(p,q,a,b,x)"),
        Err(ParseError::Arity {
            symbol: "ilc".into(),
            expected: 6,
            got: 5
        })
    );
    assert_eq!(
        parse("root3(a)"),
        Err(ParseError::Arity {
            symbol: "root3".into(),
            expected: 3,
            got: 1
        })
    );
    assert!(matches!(parse("ext(a,b,p,q))"), Err(ParseError::Syntax { pos: 12, .. })));
    assert!(matches!(parse(""), Err(ParseError::Syntax { pos: 0, .. })));
    assert!(matches!(parse("ext()"), Err(ParseError::Syntax { .. })));
    assert!(parse("root1(a)").unwrap().has_root());
    assert!(!parse("ext(alpha,beta,gamma,x)").unwrap().has_root());
}

#[test]
fn files_report_lines() {
    let text = "ext(a,b,p,q)  # first\n# comment only\n\nip(a,p,c,b,q)\nilc(p,q)\n";
    let (line, err) = parse_term_file(text).unwrap_err();
    assert_eq!(line, 5);
    assert!(matches!(err, ParseError::Arity { expected: 6, .. }));
    assert_eq!(parse_term_file(&text.replace("ilc(p,q)", "")).unwrap().len(), 2);
}
