use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rcgeom::exactnum::{parse_scalar, Scalar};
use std::cmp::Ordering;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn frac() -> impl Strategy<Value = (i64, i64)> {
    (-1000i64..=1000, 1i64..=60)
}

/// Sign of `a + b sqrt(r)` by squaring in plain rationals.
fn rad_sign(a: &BigRational, b: &BigRational, r: &BigRational) -> Ordering {
    let zero = BigRational::from_integer(0.into());
    let sa = a.cmp(&zero);
    let sb = if r == &zero { Ordering::Equal } else { b.cmp(&zero) };
    if sa == sb || sb == Ordering::Equal {
        return sa;
    }
    if sa == Ordering::Equal {
        return sb;
    }
    // opposite signs: compare a^2 with b^2 r
    let lhs = a * a;
    let rhs = b * b * r;
    match lhs.cmp(&rhs) {
        Ordering::Greater => sa,
        Ordering::Less => sb,
        Ordering::Equal => Ordering::Equal,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn rational_order_matches_bigrational((an, ad) in frac(), (bn, bd) in frac()) {
        let (a, b) = (Scalar::frac(an, ad), Scalar::frac(bn, bd));
        prop_assert_eq!(a.cmp(&b), q(an, ad).cmp(&q(bn, bd)));
        prop_assert_eq!((&a - &b).sign() as i32, match q(an, ad).cmp(&q(bn, bd)) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        });
        prop_assert_eq!(a == b, q(an, ad) == q(bn, bd));
    }

    #[test]
    fn rational_field_identities((an, ad) in frac(), (bn, bd) in frac(), (cn, cd) in frac()) {
        let (a, b, c) = (Scalar::frac(an, ad), Scalar::frac(bn, bd), Scalar::frac(cn, cd));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        if b.sign() != 0 {
            prop_assert_eq!(&a.checked_div(&b).unwrap() * &b, a.clone());
        }
        prop_assert_eq!(-(-&a), a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn sqrt_squares_back((n, d) in (0i64..=2000, 1i64..=50), (cn, cd) in frac()) {
        let r = Scalar::frac(n, d);
        let s = r.sqrt_nonneg().unwrap();
        prop_assert!(s.sign() >= 0);
        prop_assert_eq!(s.square(), r);
        // s < c iff r < c^2 for c >= 0
        let c = Scalar::frac(cn.abs(), cd);
        prop_assert_eq!(s.cmp(&c), q(n, d).cmp(&(q(cn.abs(), cd) * q(cn.abs(), cd))));
    }

    #[test]
    fn radical_sign_matches_squaring_oracle((an, ad) in frac(), (bn, bd) in frac(), r in 2i64..=30) {
        let x = Scalar::frac(an, ad) + Scalar::frac(bn, bd) * Scalar::from_int(r).sqrt_nonneg().unwrap();
        let expect = rad_sign(&q(an, ad), &q(bn, bd), &q(r, 1));
        prop_assert_eq!(x.sign().cmp(&0), expect);
    }

    #[test]
    fn radical_arithmetic((an, ad) in frac(), (bn, bd) in frac(), r in 2i64..=12, t in 2i64..=12) {
        let sr = Scalar::from_int(r).sqrt_nonneg().unwrap();
        let st = Scalar::from_int(t).sqrt_nonneg().unwrap();
        let x = Scalar::frac(an, ad) + Scalar::frac(bn, bd) * &sr;
        let y = &sr + &st;
        prop_assert_eq!(&(&x + &y) * &y, &(&x * &y) + &y.square());
        if x.sign() != 0 {
            prop_assert_eq!(&x.recip().unwrap() * &x, Scalar::one());
        }
        let back = parse_scalar(&x.to_string()).unwrap();
        prop_assert_eq!(back, x.clone());
        let ax = x.abs();
        prop_assert_eq!(ax.square().sqrt_nonneg().unwrap(), ax);
    }
}

#[test]
fn nested_radicals() {
    // sqrt(3 + 2 sqrt 2) = 1 + sqrt 2
    let two = Scalar::from_int(2).sqrt_nonneg().unwrap();
    let inner = Scalar::from_int(3) + Scalar::from_int(2) * &two;
    assert_eq!(inner.sqrt_nonneg().unwrap(), Scalar::one() + &two);
    // sqrt(1 + sqrt 2) does not denest but still squares back
    let s = (Scalar::one() + &two).sqrt_nonneg().unwrap();
    assert_eq!(s.square(), Scalar::one() + &two);
    assert!(s > Scalar::frac(155, 100) && s < Scalar::frac(156, 100));
    assert!(Scalar::from_int(-1).sqrt_nonneg().is_err());
    assert!(Scalar::zero().recip().is_err());
}

#[test]
fn parsing() {
    assert_eq!(parse_scalar("-3/4").unwrap(), Scalar::frac(-3, 4));
    assert_eq!(parse_scalar("sqrt(8)").unwrap(), Scalar::from_int(2) * Scalar::from_int(2).sqrt_nonneg().unwrap());
    assert_eq!(parse_scalar("(1 + sqrt(5))/2").unwrap().square(), parse_scalar("(3 + sqrt(5))/2").unwrap());
    assert!(parse_scalar("sqrt(-1)").is_err());
    assert!(parse_scalar("1/0").is_err());
    assert!(parse_scalar("1 +").is_err());
}

#[test]
fn approximations() {
    assert_eq!(Scalar::frac(2, 3).approx(4), "0.6667");
    let s2 = Scalar::from_int(2).sqrt_nonneg().unwrap();
    assert_eq!(s2.approx(10), "1.4142135624");
    assert!((s2.to_f64() - std::f64::consts::SQRT_2).abs() < 1e-15);
}
