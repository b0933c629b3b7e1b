use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tmoyal::sample::{self, SampleShape};
use tmoyal::star::{
    hamiltonian_left, hamiltonian_right, lower_left, lower_right, star_series, ActionSide, HamiltonianMethod,
};
use tmoyal::{TwistedElement, Var};

fn general() -> impl Strategy<Value = TwistedElement> {
    any::<u64>().prop_map(|s| sample::element(&mut ChaCha8Rng::seed_from_u64(s), SampleShape::GENERAL))
}

fn polynomial() -> impl Strategy<Value = TwistedElement> {
    any::<u64>().prop_map(|s| sample::polynomial(&mut ChaCha8Rng::seed_from_u64(s)))
}

fn unit() -> impl Strategy<Value = TwistedElement> {
    any::<u64>().prop_map(|s| sample::unit(&mut ChaCha8Rng::seed_from_u64(s)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_axioms(f in general(), g in general(), h in general()) {
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!((&f * &g) * &h, &f * (&g * &h));
        prop_assert_eq!(&f * (&g + &h), &f * &g + &f * &h);
        prop_assert_eq!(&f * &TwistedElement::one(), f.clone());
        prop_assert!((&f - &f).is_zero());
    }

    #[test]
    fn derivative_leibniz(f in general(), g in general()) {
        for v in [Var::A, Var::Abar] {
            let lhs = (&f * &g).derive(v);
            let rhs = f.derive(v) * &g + &f * g.derive(v);
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn limit_is_a_homomorphism(f in general(), g in general()) {
        prop_assert_eq!((&f * &g).limit_omega_zero(), f.limit_omega_zero() * g.limit_omega_zero());
        prop_assert_eq!((&f + &g).limit_omega_zero(), f.limit_omega_zero() + g.limit_omega_zero());
    }

    #[test]
    fn units_invert(u in unit()) {
        let inv = u.invert_unit().unwrap();
        prop_assert_eq!(&u * &inv, TwistedElement::one());
    }

    #[test]
    fn text_round_trip(f in general()) {
        prop_assert_eq!(f.to_string().parse::<TwistedElement>().unwrap(), f);
    }

    #[test]
    fn mirror_symmetry(p in polynomial(), f in general()) {
        prop_assert_eq!(f.mirrored().mirrored(), f.clone());
        let lhs = star_series(&p, &f, ActionSide::Left).unwrap().mirrored();
        let rhs = star_series(&p.mirrored(), &f.mirrored(), ActionSide::Right).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(lower_left(&f).mirrored(), lower_right(&f.mirrored()));
        for method in [HamiltonianMethod::Series, HamiltonianMethod::Bracket] {
            prop_assert_eq!(hamiltonian_left(&f, method).mirrored(), hamiltonian_right(&f.mirrored(), method));
        }
    }
}
