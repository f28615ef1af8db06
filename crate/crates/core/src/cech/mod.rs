//! Poset functors on tuples of covering indices, their Čech complexes, the
//! functors coming from ringed algebras and the chain map from the Amitsur
//! complex.

mod complex;
mod functor;
mod phi;
mod ringed;
mod tuple;

pub use complex::{build_cech, cech_cohomology, CechComplex, CechDegree};
pub use functor::{constant_functor, PosetFunctor};
pub use phi::{
    decompose, decompose_word, split_by_summand, verify_chain_map, ChainMap, ChainMapReport,
    DecomposedTensor, DegreeCheck, PhiChoice, RelationWitness, SignPolicy,
};
pub use ringed::{functor_from_ringed_covering, DefaultRinged, DiagonalRinged, RingedStructure};
pub use tuple::{insertion_sign, IndexTuple};

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;
    use std::sync::Arc;

    use super::*;
    use crate::algebra::{Algebra, AlgebraHom, Ideal};
    use crate::amitsur::DEFAULT_DIM_CAP;
    use crate::covering::{build_tau, Covering};
    use crate::exactla::{Field, Matrix};
    use crate::sample;
    use crate::Error;

    const Q: Field = Field::Rational;

    fn t(v: &[usize]) -> IndexTuple {
        IndexTuple::new(v.to_vec(), 6).unwrap()
    }

    fn q(v: &[i64]) -> Vec<crate::exactla::Scalar> {
        v.iter().map(|&x| Q.from_i64(x)).collect()
    }

    #[test]
    fn constant_functor_coboundary_sign() {
        let f = constant_functor(2, Arc::new(Algebra::ground(Q))).unwrap();
        let cx = build_cech(&f).unwrap();
        // x = (a, b) on ({1}, {2}) goes to b - a on {1,2}
        assert_eq!(cx.differential(1), Matrix::from_i64(Q, &[&[-1, 1]]));
    }

    #[test]
    fn cohomology_of_constant_functors() {
        let k = Arc::new(Algebra::ground(Q));
        assert_eq!(
            cech_cohomology(&build_cech(&constant_functor(3, k.clone()).unwrap()).unwrap()),
            vec![1, 0, 0]
        );
        assert_eq!(
            cech_cohomology(&build_cech(&constant_functor(1, k).unwrap()).unwrap()),
            vec![1]
        );
        let m2 = Arc::new(Algebra::matrix(Q, 2));
        let cx = build_cech(&constant_functor(2, m2).unwrap()).unwrap();
        assert_eq!(cech_cohomology(&cx), vec![4, 0]);
        assert_eq!(cx.dims(), vec![4, 8, 4]);
    }

    #[test]
    fn default_ringed_functor_of_e1() {
        let c = sample::split_three_covering(Q);
        let (f, _) = functor_from_ringed_covering(&c, &DefaultRinged).unwrap();
        assert_eq!(f.ring(&t(&[])).dim(), 3);
        assert_eq!(f.ring(&t(&[0])).dim(), 2);
        assert_eq!(f.ring(&t(&[1])).dim(), 2);
        assert_eq!(f.ring(&t(&[0, 1])).dim(), 1);
        let cx = build_cech(&f).unwrap();
        // the first patch sits at position 0 of {1,2} and the second at
        // position 1, the opposite of the τ convention
        assert_eq!(cx.differential(1), build_tau(&c).scale(&-Q.one()));
        assert_eq!(cx.differential(1).rank(), 1);
        assert_eq!(cech_cohomology(&cx), vec![3, 0]);
    }

    #[test]
    fn default_ringed_functor_of_e4() {
        let c = sample::matrix_point_covering(Q);
        let (f, _) = functor_from_ringed_covering(&c, &DefaultRinged).unwrap();
        assert_eq!(f.ring(&t(&[0])).dim(), 1);
        assert_eq!(f.ring(&t(&[1])).dim(), 4);
        assert_eq!(f.ring(&t(&[0, 1])).dim(), 0);
        assert_eq!(cech_cohomology(&build_cech(&f).unwrap()), vec![5]);
    }

    #[test]
    fn single_zero_ideal_has_one_degree() {
        let a = Arc::new(Algebra::truncated_polynomial(Q, 3));
        let c = Covering::new(a.clone(), vec![Ideal::zero(a)]).unwrap();
        let (f, _) = functor_from_ringed_covering(&c, &DefaultRinged).unwrap();
        assert_eq!(f.ring(&t(&[0])).dim(), 3);
        let cx = build_cech(&f).unwrap();
        assert_eq!(cx.differentials().len(), 1);
        assert_eq!(cech_cohomology(&cx), vec![3]);
    }

    #[test]
    fn phi_examples() {
        let c = sample::split_three_covering(Q);
        let (f, choice) = functor_from_ringed_covering(&c, &DefaultRinged).unwrap();
        let phi = ChainMap::new(&f, &choice, SignPolicy::default()).unwrap();
        let v = phi.apply(&[(0, q(&[1, 2])), (1, q(&[3, 4]))]).unwrap();
        assert_eq!(v, q(&[6]));
        assert_eq!(
            phi.apply(&[(0, q(&[1, 2])), (0, q(&[5, 7]))]).unwrap(),
            q(&[0])
        );
        assert_eq!(phi.apply(&[(1, q(&[3, 4]))]).unwrap(), q(&[0, 0, 3, 4]));
        assert!(matches!(
            phi.apply(&[(0, q(&[1]))]),
            Err(Error::NotDecomposed { position: 0, .. })
        ));
        // unsorted indices
        assert_eq!(
            phi.apply(&[(1, q(&[3, 4])), (0, q(&[1, 2]))]).unwrap(),
            q(&[0])
        );
        let alt = ChainMap::new(&f, &choice, SignPolicy::AlternatingSign).unwrap();
        assert_eq!(
            alt.apply(&[(1, q(&[3, 4])), (0, q(&[1, 2]))]).unwrap(),
            q(&[-6])
        );
    }

    #[test]
    fn chain_map_on_complete_examples() {
        for c in [
            sample::split_three_covering(Q),
            sample::matrix_point_covering(Q),
        ] {
            let (f, choice) = functor_from_ringed_covering(&c, &DefaultRinged).unwrap();
            let r = verify_chain_map(
                &f,
                &choice,
                &c,
                2,
                SignPolicy::IncreasingOnly,
                DEFAULT_DIM_CAP,
            )
            .unwrap();
            assert!(r.passed(), "{r:?}");
            assert_eq!(r.augmentation_ok, Some(true));
            assert_eq!(r.degrees.len(), 2);
        }
    }

    #[test]
    fn alternating_sign_policy_breaks_the_chain_map() {
        let c = sample::split_three_covering(Q);
        let (f, choice) = functor_from_ringed_covering(&c, &DefaultRinged).unwrap();
        let r = verify_chain_map(
            &f,
            &choice,
            &c,
            2,
            SignPolicy::AlternatingSign,
            DEFAULT_DIM_CAP,
        )
        .unwrap();
        assert!(!r.passed());
        let bad = r.degrees.iter().find(|d| !d.ambient_ok).unwrap();
        assert!(!bad.matrix_ok);
        assert!(bad.witness.is_some());
    }

    #[test]
    fn diagonal_ringed_structure() {
        let c = sample::split_three_covering(Q);
        let (f, choice) = functor_from_ringed_covering(&c, &DiagonalRinged { copies: 2 }).unwrap();
        assert_eq!(f.ring(&t(&[0, 1])).dim(), 2);
        assert_eq!(cech_cohomology(&build_cech(&f).unwrap()), vec![6, 0]);
        let r = verify_chain_map(
            &f,
            &choice,
            &c,
            2,
            SignPolicy::IncreasingOnly,
            DEFAULT_DIM_CAP,
        )
        .unwrap();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn trivial_covering_with_constant_functor() {
        let a = Arc::new(Algebra::truncated_polynomial(Q, 2));
        let c = Covering::new(a.clone(), vec![Ideal::zero(a.clone())]).unwrap();
        let f = constant_functor(1, a.clone()).unwrap();
        let patch = c.patch(0).algebra.clone();
        let leg = AlgebraHom::new(patch, a.clone(), Matrix::identity(Q, 2)).unwrap();
        let choice = PhiChoice::new(vec![leg], Some(AlgebraHom::identity(a)));
        let r = verify_chain_map(
            &f,
            &choice,
            &c,
            2,
            SignPolicy::IncreasingOnly,
            DEFAULT_DIM_CAP,
        )
        .unwrap();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn functor_validation_errors() {
        let k2 = Arc::new(Algebra::split(Q, 2));
        let f = constant_functor(2, k2.clone()).unwrap();
        let mut restrictions = f.restrictions().clone();
        let swap = AlgebraHom::new(
            k2.clone(),
            k2.clone(),
            Matrix::from_i64(Q, &[&[0, 1], &[1, 0]]),
        )
        .unwrap();
        restrictions.insert((t(&[0]), t(&[0, 1])), swap);
        let err = PosetFunctor::new(2, Q, f.rings().clone(), restrictions.clone()).unwrap_err();
        assert!(matches!(err, Error::NonCommuting { .. }), "{err:?}");

        let mut rings: BTreeMap<_, _> = f.rings().clone();
        rings.remove(&t(&[1]));
        let err = PosetFunctor::new(2, Q, rings, f.restrictions().clone()).unwrap_err();
        assert_eq!(err, Error::MissingRing { tuple: vec![1] });

        let mut restrictions = f.restrictions().clone();
        restrictions.remove(&(t(&[]), t(&[1])));
        let err = PosetFunctor::new(2, Q, f.rings().clone(), restrictions).unwrap_err();
        assert_eq!(
            err,
            Error::MissingRestriction {
                from: vec![],
                to: vec![1]
            }
        );
    }

    #[test]
    fn composites_follow_paths() {
        let c = sample::split_three_covering(Q);
        let (f, _) = functor_from_ringed_covering(&c, &DefaultRinged).unwrap();
        let m = f.composite(&t(&[]), &t(&[0, 1])).unwrap();
        // evaluation at the shared coordinate e2
        assert_eq!(m, Matrix::from_i64(Q, &[&[0, 1, 0]]));
        assert!(f.composite(&t(&[1]), &t(&[0])).is_err());
    }
}
