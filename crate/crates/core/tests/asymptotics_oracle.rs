//! The λ-difference expansion against direct evaluation at large α².

use proptest::prelude::*;
use walllab_core::{lambda_at, lambda_diff_expansion, mu, ChernCharacter, LeadingOrder, Rational, SlopeValue};

fn rat() -> impl Strategy<Value = Rational> {
    (-12i64..12, 1i64..7).prop_map(|(n, d)| Rational::new(n, d))
}

fn positive() -> impl Strategy<Value = Rational> {
    (1i64..12, 1i64..7).prop_map(|(n, d)| Rational::new(n, d))
}

fn character() -> impl Strategy<Value = ChernCharacter> {
    (rat(), rat(), rat(), rat()).prop_map(|(a, b, c, d)| ChernCharacter::new(a, b, c, d))
}

fn diff_at(f: &ChernCharacter, a: &ChernCharacter, alpha_sq: &Rational, s: &Rational, beta: &Rational) -> Option<Rational> {
    match (lambda_at(f, alpha_sq, s, beta), lambda_at(a, alpha_sq, s, beta)) {
        (SlopeValue::Finite(x), SlopeValue::Finite(y)) => Some(x - y),
        _ => None,
    }
}

/// ρ not identically zero in α² after twisting.
fn admissible(v: &ChernCharacter, beta: &Rational) -> bool {
    let t = v.twist(beta);
    !(t.ch0.is_zero() && t.ch2.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn leading_term_matches_evaluation(f in character(), a in character(), beta in rat(), s in positive()) {
        prop_assume!(admissible(&f, &beta) && admissible(&a, &beta));
        let x = lambda_diff_expansion(&f, &a, &beta, &s).unwrap();
        let scales = [1_000i64, 1_000_000, 1_000_000_000].map(Rational::from_integer);
        let values: Vec<Rational> = scales.iter().map(|t| diff_at(&f, &a, t, &s, &beta).unwrap()).collect();
        match x.leading_exponent {
            LeadingOrder::All => {
                prop_assert!(values.iter().all(|v| v.is_zero()));
            }
            LeadingOrder::Exponent(n) => {
                prop_assert_eq!(values[2].signum(), x.sign);
                // Fitted power of α from the two largest scales.
                let ratio = (values[2].to_f64() / values[1].to_f64()).abs();
                let fitted = 2.0 * ratio.log10() / 3.0;
                prop_assert!((fitted - n as f64).abs() < 0.5, "fitted {} vs {}", fitted, n);
                // Coefficient: α^(-n)·(λ(F) − λ(A)) at α² = 10^40 agrees to far below any input scale.
                let huge = Rational::from_integer(10).pow(40);
                let v = diff_at(&f, &a, &huge, &s, &beta).unwrap() * huge.pow(-n / 2);
                let err = (v - &x.leading_coeff).abs();
                prop_assert!(err < Rational::new(1, 1_000_000_000) * (x.leading_coeff.abs() + Rational::one()));
            }
        }
    }

    #[test]
    fn order_zero_coefficient(f in character(), a in character(), beta in rat(), s in positive()) {
        prop_assume!(!f.ch0.is_zero() && !a.ch0.is_zero());
        let zero = Rational::zero();
        let (mf, ma) = (mu(&f, &zero), mu(&a, &zero));
        prop_assume!(mf != ma);
        let (SlopeValue::Finite(mf), SlopeValue::Finite(ma)) = (mf, ma) else { unreachable!() };
        let x = lambda_diff_expansion(&f, &a, &beta, &s).unwrap();
        prop_assert_eq!(x.leading_exponent, LeadingOrder::Exponent(0));
        prop_assert_eq!(x.leading_coeff, (&s * 6 + 1) / 3 * (mf - ma));
    }

    #[test]
    fn equal_low_parts_give_order_minus_two(a in character(), g3 in rat(), s in positive()) {
        prop_assume!(!a.ch0.is_zero());
        let mut f = a.clone();
        f.ch3 = &f.ch3 + &g3;
        let x = lambda_diff_expansion(&f, &a, &Rational::zero(), &s).unwrap();
        if g3.is_zero() {
            prop_assert_eq!(x.leading_exponent, LeadingOrder::All);
        } else {
            prop_assert_eq!(x.leading_exponent, LeadingOrder::Exponent(-2));
            prop_assert_eq!(x.leading_coeff, (&a.ch3 - &f.ch3) * 2 / &a.ch0);
        }
    }
}
