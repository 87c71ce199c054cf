use eulerpath::ortho::{
    build_monic_ops, carlitz_ttr, euler_ttr, scale_coeffs, shift_coeffs, ThreeTermCoeffs,
};
use eulerpath::poly::rising_factorial;
use eulerpath::rational::rat;
use eulerpath::{Rational, XPoly, YPoly};
use num_traits::Zero;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..50, 1i64..30).prop_map(|(n, d)| rat(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn xpoly() -> impl Strategy<Value = XPoly> {
    prop::collection::vec(rational(), 0..5).prop_map(XPoly::new)
}

fn ypoly() -> impl Strategy<Value = YPoly> {
    prop::collection::vec(xpoly(), 0..4).prop_map(YPoly::new)
}

fn family() -> impl Strategy<Value = ThreeTermCoeffs> {
    prop_oneof![
        (1u32..5).prop_map(euler_ttr),
        Just(carlitz_ttr()),
        Just(ThreeTermCoeffs::Bernoulli),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn rational_canonical_form(a in rational(), b in rational()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!(*(&a * &b).denom() > 0.into());
    }
}

proptest! {
    #[test]
    fn degree_is_additive(p in xpoly(), q in xpoly()) {
        let prod = &p * &q;
        match (p.degree(), q.degree()) {
            (Some(a), Some(b)) => prop_assert_eq!(prod.degree(), Some(a + b)),
            _ => prop_assert!(prod.is_zero()),
        }
    }

    #[test]
    fn ypoly_ring_laws(a in ypoly(), b in ypoly(), c in ypoly()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a);
        if let (Some(da), Some(db)) = (b.degree(), c.degree()) {
            prop_assert_eq!((&b * &c).degree(), Some(da + db));
        }
    }

    #[test]
    fn rising_factorial_recursion(base in ypoly(), k in 0usize..8) {
        let next = rising_factorial(&base, k + 1);
        let shifted = &base + &YPoly::constant(XPoly::constant(rat(k as i64, 1)));
        prop_assert_eq!(next, &rising_factorial(&base, k) * &shifted);
    }

    #[test]
    fn transform_round_trips(c in family(), factor in nonzero_rational(), shift in xpoly()) {
        let scaled = scale_coeffs(&c, &factor).unwrap();
        let back = scale_coeffs(&scaled, &(Rational::from_integer(1.into()) / &factor)).unwrap();
        prop_assert_eq!(&back, &c);
        let moved = shift_coeffs(&shift_coeffs(&c, &shift), &-&shift);
        prop_assert_eq!(&moved, &c);
    }

    #[test]
    fn shifted_ops_are_translates(c in family(), shift in rational()) {
        // P̄_n(y) = P_n(y - c)
        let shift_poly = XPoly::constant(shift.clone());
        let base = build_monic_ops(&c, 5).unwrap();
        let moved = build_monic_ops(&shift_coeffs(&c, &shift_poly), 5).unwrap();
        let translate = YPoly::linear(XPoly::constant(-shift));
        for n in 0..=5 {
            prop_assert_eq!(&moved[n], &base[n].compose(&translate));
        }
    }

    #[test]
    fn scaled_ops_are_dilations(c in family(), factor in nonzero_rational()) {
        // P̃_n(y) = C^n P_n(y/C)
        let base = build_monic_ops(&c, 5).unwrap();
        let scaled = build_monic_ops(&scale_coeffs(&c, &factor).unwrap(), 5).unwrap();
        let inv = YPoly::monomial(XPoly::constant(Rational::from_integer(1.into()) / &factor), 1);
        let mut power = Rational::from_integer(1.into());
        for n in 0..=5 {
            let expected = base[n].compose(&inv).scale(&XPoly::constant(power.clone()));
            prop_assert_eq!(&scaled[n], &expected);
            power *= &factor;
        }
    }
}
