use nccech::amitsur::{
    amitsur_homology, block_formula_dim, build_amitsur, build_coring, AmitsurConfig,
    DEFAULT_DIM_CAP,
};
use nccech::cech::{
    build_cech, cech_cohomology, functor_from_ringed_covering, verify_chain_map, DefaultRinged,
    DiagonalRinged, SignPolicy,
};
use nccech::covering::{build_tau, completeness_check, find_incomplete_covering, Covering};
use nccech::exactla::Field;
use nccech::sample::random_covering;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn covering(seed: u64, prime: bool) -> Covering {
    let field = if prime {
        Field::Prime(5)
    } else {
        Field::Rational
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_covering(&mut rng, field, 6, 3).expect("zero ideal always covers")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn tau_vanishes_on_the_image_of_pi(seed in any::<u64>(), prime in any::<bool>()) {
        let c = covering(seed, prime);
        prop_assert!(build_tau(&c).mul(&c.pi()).unwrap().is_zero());
        let r = completeness_check(&c);
        prop_assert!(r.is_covering && r.exact_at_a);
        prop_assert!(r.kernel_tau_dim >= r.image_pi_dim);
        prop_assert_eq!(r.complete, r.kernel_tau_dim == r.image_pi_dim);
    }

    #[test]
    fn tensor_powers_follow_the_block_formula(seed in any::<u64>(), prime in any::<bool>()) {
        let c = covering(seed, prime);
        let cx = build_amitsur(&c, &AmitsurConfig::default()).unwrap();
        for (k, d) in cx.dims().into_iter().enumerate() {
            prop_assert_eq!(d, block_formula_dim(&c, k + 1).unwrap());
        }
        cx.check_d_squared().unwrap();
    }

    #[test]
    fn coring_laws_hold(seed in any::<u64>(), prime in any::<bool>()) {
        let c = covering(seed, prime);
        let report = build_coring(&c, DEFAULT_DIM_CAP).unwrap().check();
        prop_assert!(report.all_hold(), "{:?}", report);
    }

    #[test]
    fn complete_coverings_are_acyclic(seed in any::<u64>(), prime in any::<bool>()) {
        let c = covering(seed, prime);
        let complete = completeness_check(&c).complete;
        let cx = build_amitsur(&c, &AmitsurConfig::default()).unwrap();
        let h = amitsur_homology(&cx, true);
        prop_assert_eq!(h[0], 0);
        if complete {
            prop_assert!(h.iter().all(|&x| x == 0), "{:?}", h);
            prop_assert_eq!(amitsur_homology(&cx, false)[0], c.algebra().dim());
        } else {
            prop_assert!(h[1] > 0);
        }
    }

    #[test]
    fn ringed_functors_give_complexes_and_chain_maps(seed in any::<u64>(), prime in any::<bool>()) {
        let c = covering(seed, prime);
        let (f, choice) = functor_from_ringed_covering(&c, &DefaultRinged).unwrap();
        let cx = build_cech(&f).unwrap();
        for pair in cx.differentials().windows(2) {
            prop_assert!(pair[1].mul(&pair[0]).unwrap().is_zero());
        }
        let r = verify_chain_map(&f, &choice, &c, 2, SignPolicy::IncreasingOnly, DEFAULT_DIM_CAP).unwrap();
        prop_assert!(r.passed(), "{:?}", r);
        // degree zero classes are the kernel of τ
        let h = cech_cohomology(&cx);
        prop_assert_eq!(h[0], completeness_check(&c).kernel_tau_dim);
    }

    #[test]
    fn diagonal_ringed_structure_is_natural(seed in any::<u64>()) {
        let c = covering(seed, true);
        let (f, choice) = functor_from_ringed_covering(&c, &DiagonalRinged { copies: 2 }).unwrap();
        let single = cech_cohomology(&build_cech(&functor_from_ringed_covering(&c, &DefaultRinged).unwrap().0).unwrap());
        let doubled = cech_cohomology(&build_cech(&f).unwrap());
        prop_assert_eq!(doubled, single.iter().map(|x| 2 * x).collect::<Vec<_>>());
        let r = verify_chain_map(&f, &choice, &c, 1, SignPolicy::IncreasingOnly, DEFAULT_DIM_CAP).unwrap();
        prop_assert!(r.passed());
    }
}

#[test]
fn search_finds_an_incomplete_covering() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let c = find_incomplete_covering(&mut rng, Field::Rational, 2000).expect("found");
    let r = completeness_check(&c);
    assert!(r.is_covering && !r.complete);
    // the failure shows up as degree zero Amitsur homology and extra Čech classes
    let h = amitsur_homology(&build_amitsur(&c, &AmitsurConfig::default()).unwrap(), true);
    assert_eq!(h[1], r.kernel_tau_dim - r.image_pi_dim);
    let (f, _) = functor_from_ringed_covering(&c, &DefaultRinged).unwrap();
    assert!(cech_cohomology(&build_cech(&f).unwrap())[0] > c.algebra().dim());
}
