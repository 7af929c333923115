use proptest::prelude::*;
use rcgeom::dehnfield::*;
use rcgeom::exactnum::Scalar;
use rcgeom::field::{FieldError, OrderedField};

fn ctx() -> SeriesCtx {
    SeriesCtx::default()
}

fn lit(s: &str) -> Series {
    parse_series(s, &ctx()).unwrap()
}

/// Starting exponent and small integer coefficients of an exact series.
fn poly() -> impl Strategy<Value = (i64, Vec<i64>)> {
    (-2i64..=2, prop::collection::vec(-4i64..=4, 1..4))
}

fn build((v, cs): &(i64, Vec<i64>)) -> Series {
    Series::from_coeffs(*v, cs.iter().map(|&c| Scalar::from_int(c)).collect(), &ctx())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn ring_identities(a in poly(), b in poly(), c in poly()) {
        let (a, b, c) = (build(&a), build(&b), build(&c));
        prop_assert!(a.add(&b).mul(&c).sub(&a.mul(&c).add(&b.mul(&c))).is_zero());
        prop_assert!(a.mul(&b).sub(&b.mul(&a)).is_zero());
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn inverse_to_order(a in poly()) {
        let a = build(&a);
        if a.is_zero() {
            prop_assert_eq!(a.inv().unwrap_err(), FieldError::DivisionByZero);
        } else {
            let one = a.mul(&a.inv().unwrap());
            prop_assert!(one.sub(&Series::from_int(1, &ctx())).is_zero());
            prop_assert_eq!(one.sign(), 1);
        }
    }

    /// Order is decided by the leading coefficient.
    #[test]
    fn sign_is_leading_sign(a in poly()) {
        let s = build(&a);
        let lead = a.1.iter().find(|&&c| c != 0).copied().unwrap_or(0);
        prop_assert_eq!(s.sign() as i64, lead.signum());
    }

    #[test]
    fn squares_have_roots(a in poly()) {
        let a = build(&a);
        let sq = a.mul(&a);
        let r = sq.sqrt().unwrap();
        prop_assert!(r.sign() >= 0);
        prop_assert!(r.sub(&a.abs()).is_zero());
    }
}

#[test]
fn infinitesimals_and_infinities() {
    let e = Series::epsilon(&ctx());
    let one = Series::from_int(1, &ctx());
    assert_eq!(e.sign(), 1);
    // 0 < e < 1/n for every n
    for n in [1, 10, 1000, 1_000_000] {
        let bound = Series::from_scalar(Scalar::frac(1, n), &ctx());
        assert!(e.cmp_to(&bound).is_lt());
        assert!(e.inv().unwrap().cmp_to(&Series::from_int(n, &ctx())).is_gt());
    }
    assert!(finitely_bounded(&one.add(&e)));
    assert!(!finitely_bounded(&e.inv().unwrap()));
    assert_eq!(e.sqrt().unwrap_err(), FieldError::OddValuation);
    assert_eq!(lit("-1").sqrt().unwrap_err(), FieldError::NegativeRadicand);
}

#[test]
fn literals() {
    assert_eq!(lit("1/e + 2").valuation(), Some(-1));
    assert_eq!(lit("1/e + 2").coeff(0), Scalar::from_int(2));
    assert_eq!(lit("3/4*e^2").coeff(2), Scalar::frac(3, 4));
    assert_eq!(lit("1 - e").to_string(), "1 - e");
    assert_eq!(Series::epsilon(&ctx()).inv().unwrap().neg().to_string(), "-e^-1");
    assert!(parse_series("1 + f", &ctx()).is_err());
    assert!(parse_series("e^", &ctx()).is_err());
}

#[test]
fn truncation_tracks_precision() {
    let small = SeriesCtx { order: 4 };
    let x = parse_series("1 - e", &small).unwrap();
    let inv = x.inv().unwrap();
    assert_eq!(inv.precision(), Some(4));
    // (1 - e)^-1 - (1 + e + e^2 + e^3) is zero to the known precision
    let geo = parse_series("1 + e + e^2 + e^3", &small).unwrap();
    let diff = inv.sub(&geo);
    assert!(diff.is_zero());
    assert!(!diff.is_exact());
    assert_eq!(diff.sign(), 0);
    assert_eq!(diff.inv().unwrap_err(), FieldError::PrecisionExhausted);
}

#[test]
fn parallel_failure_is_stable() {
    for order in [8, 16, 32] {
        let r = dehn_parallel_failure_demo(true, &SeriesCtx { order }).unwrap();
        assert!(r.hypothesis_holds);
        assert_eq!(r.slope_line_intercept, "-e^-1");
        assert_eq!(r.slope_line_intercept_valuation, Some(-1));
        assert!(!r.slope_line_intercept_finitely_bounded);
        assert_eq!(r.witness_x_valuation, Some(-1));
        assert!(r.a10_fails_in_bounded_plane);
    }
    let r = dehn_parallel_failure_demo(false, &ctx()).unwrap();
    assert_eq!(r.witness_x_valuation, Some(-2));
}

#[test]
fn cauchy_bound_of_bounded_coefficients_is_bounded() {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    for deg in [1usize, 3, 5, 7] {
        let cs: Vec<Series> = (0..deg).map(|_| rcgeom::sampling::bounded_series(&mut rng, &ctx())).collect();
        let b = rcgeom::polyroots::cauchy_bound_in(&cs).unwrap();
        assert!(finitely_bounded(&b));
        assert!(cs.iter().all(|c| c.abs().cmp_to(&b).is_lt()));
    }
    let unbounded = [lit("1/e"), lit("2")];
    assert!(!finitely_bounded(&rcgeom::polyroots::cauchy_bound_in(&unbounded).unwrap()));
}
