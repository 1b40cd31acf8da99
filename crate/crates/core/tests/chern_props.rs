use proptest::prelude::*;
use walllab_core::{ChernCharacter, Rational};

fn rat() -> impl Strategy<Value = Rational> {
    (-60i64..60, 1i64..13).prop_map(|(n, d)| Rational::new(n, d))
}

fn character() -> impl Strategy<Value = ChernCharacter> {
    (rat(), rat(), rat(), rat()).prop_map(|(a, b, c, d)| ChernCharacter::new(a, b, c, d))
}

// Untwisted characters of objects: ch0, ch1 ∈ ℤ, ch2 ∈ ½ℤ, ch3 ∈ ⅙ℤ.
fn lattice_character() -> impl Strategy<Value = ChernCharacter> {
    proptest::array::uniform4(-40i64..40)
        .prop_map(|n| ChernCharacter::from_fracs([(n[0], 1), (n[1], 1), (n[2], 2), (n[3], 6)]))
}

proptest! {
    #[test]
    fn twist_is_a_group_action(v in character(), b1 in rat(), b2 in rat()) {
        prop_assert_eq!(v.twist(&b1).twist(&b2), v.twist(&(&b1 + &b2)));
        prop_assert_eq!(v.twist(&b1).twist(&-&b1), v.clone());
    }

    #[test]
    fn twist_preserves_rank(v in character(), b in rat()) {
        prop_assert_eq!(v.twist(&b).ch0, v.ch0);
    }

    #[test]
    fn shift_by_one_negates(v in character(), n in -5i64..5) {
        let s = v.shift(1);
        for i in 0..4 {
            prop_assert_eq!(&s[i], &-&v[i]);
        }
        prop_assert_eq!(v.shift(n).shift(n), v.shift(2 * n));
        prop_assert_eq!(v.shift(2 * n), v.clone());
    }

    #[test]
    fn dual_is_an_involution(v in character()) {
        prop_assert_eq!(v.dual_shift2().dual_shift2(), v);
    }

    #[test]
    fn integrality_is_dual_invariant(v in lattice_character()) {
        prop_assert_eq!(v.integrality_beta0(), v.dual_shift2().integrality_beta0());
    }

    #[test]
    fn twist_is_additive(v in character(), w in character(), b in rat()) {
        prop_assert_eq!((&v + &w).twist(&b), &v.twist(&b) + &w.twist(&b));
    }

    #[test]
    fn bogomolov_is_twist_invariant(v in character(), b in rat()) {
        prop_assert_eq!(v.discriminant(), v.twist(&b).discriminant());
    }

    #[test]
    fn json_roundtrip(v in character()) {
        let text = serde_json::to_string(&v).unwrap();
        let back: ChernCharacter = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, v);
    }
}
