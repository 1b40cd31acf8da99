use proptest::prelude::*;
use walllab_core::{
    central_charge, delta, lambda, q_form, q_form_at, q_form_closed, ChernCharacter, Rational,
    SlicePoint, SlopeValue,
};

fn rat() -> impl Strategy<Value = Rational> {
    (-50i64..50, 1i64..11).prop_map(|(n, d)| Rational::new(n, d))
}

fn positive() -> impl Strategy<Value = Rational> {
    (1i64..80, 1i64..11).prop_map(|(n, d)| Rational::new(n, d))
}

fn character() -> impl Strategy<Value = ChernCharacter> {
    (rat(), rat(), rat(), rat()).prop_map(|(a, b, c, d)| ChernCharacter::new(a, b, c, d))
}

fn point() -> impl Strategy<Value = SlicePoint> {
    (positive(), positive()).prop_map(|(a, s)| SlicePoint::new(a, s).unwrap())
}

proptest! {
    #[test]
    fn matrix_form_matches_closed_form(v in character(), a in positive(), k in positive()) {
        let zero = Rational::zero();
        prop_assert_eq!(q_form_at(&v, &v, &a, &k, &zero), q_form_closed(&v, &a, &k));
    }

    #[test]
    fn q_form_is_symmetric(f in character(), g in character(), p in point(), k in positive(), b in rat()) {
        prop_assert_eq!(q_form(&f, &g, &p, &k, &b), q_form(&g, &f, &p, &k, &b));
    }

    #[test]
    fn q_form_is_dual_invariant(f in character(), g in character(), p in point(), k in positive()) {
        let zero = Rational::zero();
        prop_assert_eq!(
            q_form(&f.dual_shift2(), &g.dual_shift2(), &p, &k, &zero),
            q_form(&f, &g, &p, &k, &zero)
        );
    }

    #[test]
    fn lambda_of_v_vanishes(r in 0i64..20, d in 1i64..30, p in point()) {
        let v = ChernCharacter::v(r, &Rational::new(d, 2));
        prop_assert_eq!(lambda(&v, &p, &Rational::zero()), SlopeValue::Finite(Rational::zero()));
    }

    #[test]
    fn lambda_is_affine_ratio(v in character(), p in point(), b in rat()) {
        // λ = −Re Z / Im Z, each affine in α².
        let (re, im) = central_charge(&v, &p, &b);
        let expected = if im.is_zero() { SlopeValue::PosInfinity } else { SlopeValue::Finite(-&re / &im) };
        prop_assert_eq!(lambda(&v, &p, &b), expected);
        let p2 = SlicePoint::new(&p.alpha_sq * 2, p.s.clone()).unwrap();
        let p3 = SlicePoint::new(&p.alpha_sq * 3, p.s.clone()).unwrap();
        let (re2, im2) = central_charge(&v, &p2, &b);
        let (re3, im3) = central_charge(&v, &p3, &b);
        prop_assert_eq!(&re3 - &re2, &re2 - &re);
        prop_assert_eq!(&im3 - &im2, &im2 - &im);
    }

    #[test]
    fn delta_is_antisymmetric_and_bilinear(
        f in character(), g in character(), a in character(), x in rat(), b in rat(),
        i in 0usize..4, j in 0usize..4,
    ) {
        prop_assert_eq!(delta(i, j, &f, &a, &b), -delta(j, i, &f, &a, &b));
        prop_assert_eq!(delta(i, j, &f, &a, &b), -delta(i, j, &a, &f, &b));
        prop_assert!(delta(i, i, &f, &a, &b).is_zero());
        let comb = &f + &(&x * &g);
        prop_assert_eq!(
            delta(i, j, &comb, &a, &b),
            delta(i, j, &f, &a, &b) + &x * delta(i, j, &g, &a, &b)
        );
    }
}
