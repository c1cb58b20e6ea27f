use std::sync::OnceLock;

use borel_orbits::classify::{classify, profile_of};
use borel_orbits::degeneration::leq_deg;
use borel_orbits::linalg::Matrix;
use borel_orbits::normalform::{character, genericity, normal_form, semiinvariant, weight};
use borel_orbits::olp::{enumerate, OrientedLinkPattern};
use borel_orbits::quiver::{krull_schmidt, orbit_dimension, rep_of_pattern, zwara_leq};
use borel_orbits::sampling;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn patterns(n: usize) -> &'static [OrientedLinkPattern] {
    static CACHE: OnceLock<Vec<Vec<OrientedLinkPattern>>> = OnceLock::new();
    &CACHE.get_or_init(|| (0..=5).map(|n| enumerate(n).unwrap()).collect())[n]
}

fn pattern(max_n: usize) -> impl Strategy<Value = OrientedLinkPattern> {
    (1..=max_n).prop_flat_map(|n| (0..patterns(n).len()).prop_map(move |k| patterns(n)[k].clone()))
}

fn pair(n: usize) -> impl Strategy<Value = (OrientedLinkPattern, OrientedLinkPattern)> {
    let len = patterns(n).len();
    (0..len, 0..len).prop_map(move |(a, b)| (patterns(n)[a].clone(), patterns(n)[b].clone()))
}

fn conjugate(a: &Matrix, g: &Matrix) -> Matrix {
    &(g * a) * &g.inverse().unwrap().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pattern_matrix_round_trips(p in pattern(5)) {
        let a: Matrix = p.to_multiplicity_matrix();
        prop_assert!((&a * &a).is_zero());
        prop_assert_eq!(OrientedLinkPattern::from_multiplicity_matrix(&a).unwrap(), p.clone());
        prop_assert_eq!(classify(&a).unwrap(), p);
    }

    #[test]
    fn classification_is_conjugation_invariant(p in pattern(5), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a: Matrix = p.to_multiplicity_matrix();
        let moved = conjugate(&a, &sampling::upper_triangular(p.n(), &mut rng));
        prop_assert_eq!(profile_of(&moved).unwrap(), profile_of(&a).unwrap());
        prop_assert_eq!(classify(&moved).unwrap(), p);
    }

    #[test]
    fn counting_and_hom_orders_agree((a, b) in pair(5)) {
        prop_assert_eq!(leq_deg(&a, &b).unwrap(), zwara_leq(&a, &b).unwrap());
    }

    #[test]
    fn degeneration_lowers_orbit_dimension((a, b) in pair(5)) {
        if a != b && leq_deg(&a, &b).unwrap() {
            prop_assert!(orbit_dimension(&b) < orbit_dimension(&a));
            prop_assert!(!leq_deg(&b, &a).unwrap());
        }
    }

    #[test]
    fn decomposition_recovers_pattern(p in pattern(5)) {
        let d = krull_schmidt(&rep_of_pattern(&p)).unwrap();
        prop_assert!(!d.has_w_summands());
        prop_assert_eq!(d.to_pattern(), Some(p));
    }

    #[test]
    fn normal_form_is_a_conjugation_invariant(n in 2usize..=5, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = sampling::nilpotent(n, &mut rng);
        prop_assume!(genericity(&a).unwrap().generic);
        let nf = normal_form(&a).unwrap();
        prop_assert_eq!(conjugate(&a, &nf.g), nf.h.clone());
        let moved = conjugate(&a, &sampling::upper_triangular(n, &mut rng));
        prop_assert_eq!(normal_form(&moved).unwrap().h, nf.h);
    }

    #[test]
    fn semiinvariants_transform_by_their_weight(n in 1usize..=4, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = sampling::nilpotent(n, &mut rng);
        let g = sampling::upper_triangular(n, &mut rng);
        let datum = sampling::datum(n, &mut rng);
        let w = weight(&datum, n).unwrap();
        prop_assert_eq!(
            semiinvariant(&conjugate(&a, &g), &datum).unwrap(),
            character(&g, &w).unwrap() * semiinvariant(&a, &datum).unwrap()
        );
    }
}
