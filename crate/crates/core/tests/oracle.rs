use nccech::algebra::Algebra;
use nccech::cech::{build_cech, cech_cohomology, constant_functor};
use nccech::exactla::Field;
use nccech::oracle::{functor_from_cover, nerve_cohomology, random_cover, CoverDescription};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cech_matches_the_nerve(seed in any::<u64>(), density in 0.2f64..0.9, prime in any::<bool>()) {
        let field = if prime { Field::Prime(3) } else { Field::Rational };
        let d = random_cover(&mut ChaCha8Rng::seed_from_u64(seed), 6, density, field);
        let f = functor_from_cover(&d).unwrap();
        prop_assert_eq!(cech_cohomology(&build_cech(&f).unwrap()), nerve_cohomology(&d));
    }

    #[test]
    fn euler_characteristic_of_the_nerve(seed in any::<u64>(), density in 0.2f64..0.9) {
        let d = random_cover(&mut ChaCha8Rng::seed_from_u64(seed), 6, density, Field::Rational);
        let h = nerve_cohomology(&d);
        let alternating = |xs: &[i64]| xs.iter().enumerate().map(|(q, x)| if q % 2 == 0 { *x } else { -x }).sum::<i64>();
        let mut counts = vec![0i64; d.n()];
        for t in d.overlaps() {
            counts[t.len() - 1] += 1;
        }
        let h: Vec<i64> = h.iter().map(|&x| x as i64).collect();
        prop_assert_eq!(alternating(&h), alternating(&counts));
    }

    #[test]
    fn constant_functor_cohomology_is_concentrated_in_degree_zero(n in 1usize..=5, which in 0usize..3) {
        let q = Field::Rational;
        let ring = match which {
            0 => Algebra::ground(q),
            1 => Algebra::matrix(q, 2),
            _ => Algebra::upper_triangular(q, 2),
        };
        let dim = ring.dim();
        let h = cech_cohomology(&build_cech(&constant_functor(n, Arc::new(ring)).unwrap()).unwrap());
        let mut expected = vec![0; n];
        expected[0] = dim;
        prop_assert_eq!(h, expected);
    }
}

#[test]
fn named_covers() {
    let q = Field::Rational;
    assert_eq!(nerve_cohomology(&CoverDescription::circle(q)), vec![1, 1]);
    assert_eq!(nerve_cohomology(&CoverDescription::disjoint(2, q)), vec![2]);
    for n in 1..=6 {
        assert_eq!(nerve_cohomology(&CoverDescription::simplex(n, q))[0], 1);
    }
}
