use proptest::prelude::*;
use walllab_core::quiver::generator_coordinates;
use walllab_core::{chern_from_dims, dim_vector, theta, ChernCharacter, DimensionVector, Rational, SlicePoint};

fn positive() -> impl Strategy<Value = Rational> {
    (1i64..200, 1i64..50).prop_map(|(n, d)| Rational::new(n, d))
}

proptest! {
    #[test]
    fn dims_roundtrip(n in proptest::array::uniform4(0u64..60)) {
        let n = DimensionVector(n);
        prop_assert_eq!(dim_vector(&chern_from_dims(&n)).unwrap(), n);
    }

    #[test]
    fn generator_coordinates_invert_any_character(n in proptest::array::uniform4(-40i64..40)) {
        let v = ChernCharacter::from_fracs([(n[0], 1), (n[1], 1), (n[2], 2), (n[3], 6)]);
        let coords = generator_coordinates(&v);
        let gens = walllab_core::quiver::generators();
        let mut back = ChernCharacter::zero();
        for (k, g) in coords.iter().zip(gens.iter()) {
            back = back + (k * g);
        }
        prop_assert_eq!(back, v);
    }

    #[test]
    fn theta_annihilates_v(rank in 0u64..10, degree in 1u64..10, a in positive(), s in positive()) {
        let v = ChernCharacter::v(rank as i64, &Rational::from_integer(degree as i64));
        let n = dim_vector(&v).unwrap();
        prop_assert_eq!(n, DimensionVector([0, degree, 2 * degree + rank, degree]));
        let p = SlicePoint::new(a, s).unwrap();
        prop_assert!(theta(&p).pair(&n).is_zero());
    }

    #[test]
    fn heart_without_first_generator_has_wall_constant_one_sixth(n in proptest::array::uniform3(0u64..200)) {
        let v = chern_from_dims(&DimensionVector([0, n[0], n[1], n[2]]));
        prop_assert_eq!(&v.ch1, &(&v.ch3 * 6));
    }
}
