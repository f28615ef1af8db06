//! Balanced tensor powers of `B = ⊕ A/I_i` over `A`, the Sweedler coring of
//! `A -> B` and its Amitsur complex.

mod bimodule;
mod complex;
mod coring;
mod tower;

use std::collections::BTreeMap;

pub use bimodule::{tensor_over_a, Bimodule, Provenance};
pub use complex::{amitsur_homology, build_amitsur, AmitsurComplex, AmitsurConfig};
pub use coring::{build_coring, CoringReport, SweedlerCoring};
pub use tower::{TensorTower, DEFAULT_DIM_CAP};

use crate::algebra::quotient;
use crate::covering::Covering;
use crate::error::Result;

/// `Σ dim A/(I_{i_1} + ... + I_{i_n})` over all `n`-tuples of indices: the
/// dimension `B^{⊗_A n}` must have, since `A/I ⊗_A A/J ≅ A/(I + J)`.
pub fn block_formula_dim(c: &Covering, power: usize) -> Result<usize> {
    let n = c.len();
    let mut by_subset: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut total = 0;
    let mut tuple = vec![0usize; power];
    loop {
        let mut key = tuple.clone();
        key.sort_unstable();
        key.dedup();
        let d = match by_subset.get(&key) {
            Some(&d) => d,
            None => {
                let d = quotient(c.algebra(), &c.ideal_sum_over(&key)?)?
                    .algebra
                    .dim();
                by_subset.insert(key, d);
                d
            }
        };
        total += d;
        // next tuple in base n
        let mut pos = power;
        loop {
            if pos == 0 {
                return Ok(total);
            }
            pos -= 1;
            tuple[pos] += 1;
            if tuple[pos] < n {
                break;
            }
            tuple[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::{Algebra, Ideal};
    use crate::exactla::Field;
    use crate::sample;

    const Q: Field = Field::Rational;

    #[test]
    fn tensor_power_dimensions() {
        let c = sample::split_three_covering(Q);
        let mut t = TensorTower::new(&c, DEFAULT_DIM_CAP);
        t.extend_to(4).unwrap();
        assert_eq!(
            (1..=4).map(|p| t.dim(p)).collect::<Vec<_>>(),
            vec![4, 6, 10, 18]
        );
        for p in 1..=4 {
            assert_eq!(block_formula_dim(&c, p).unwrap(), t.dim(p));
        }

        let c = sample::matrix_point_covering(Q);
        let mut t = TensorTower::new(&c, DEFAULT_DIM_CAP);
        t.extend_to(3).unwrap();
        assert_eq!((1..=3).map(|p| t.dim(p)).collect::<Vec<_>>(), vec![5, 5, 5]);
    }

    #[test]
    fn tensor_with_zero_module_is_zero() {
        let c = sample::split_three_covering(Q);
        let b = Bimodule::extension(&c);
        let z = Bimodule::zero(c.algebra().clone());
        let (m, p) = tensor_over_a(&b, &z).unwrap();
        assert_eq!(m.dim(), 0);
        assert_eq!(p.shape(), (0, 0));
        m.validate().unwrap();
    }

    #[test]
    fn tensor_square_is_a_bimodule() {
        let c = sample::split_three_covering(Q);
        let b = Bimodule::extension(&c);
        b.validate().unwrap();
        let (bb, p) = tensor_over_a(&b, &b).unwrap();
        bb.validate().unwrap();
        assert_eq!(p.shape(), (6, 16));
        assert!(matches!(bb.provenance(), Provenance::Tensor(_, _)));
    }

    #[test]
    fn coring_laws() {
        for c in [
            sample::split_three_covering(Q),
            sample::matrix_point_covering(Q),
        ] {
            let coring = build_coring(&c, DEFAULT_DIM_CAP).unwrap();
            let report = coring.check();
            assert!(report.all_hold(), "{report:?}");
        }
    }

    #[test]
    fn matrix_unit_counit_values() {
        let c = sample::split_three_covering(Q);
        let coring = build_coring(&c, DEFAULT_DIM_CAP).unwrap();
        // e_12 is nonzero (the overlap is k) but has zero counit
        assert!(!coring.matrix_unit(0, 1).is_empty());
        let eps = coring
            .counit()
            .mul_vec(&crate::exactla::densify(
                Q,
                coring.dim(),
                coring.matrix_unit(0, 1),
            ))
            .unwrap();
        assert!(eps.iter().all(|x| x.is_zero()));
        let c = sample::matrix_point_covering(Q);
        let coring = build_coring(&c, DEFAULT_DIM_CAP).unwrap();
        assert!(coring.matrix_unit(0, 1).is_empty());
    }

    #[test]
    fn complete_coverings_are_acyclic() {
        let config = AmitsurConfig {
            n_max: 3,
            ..Default::default()
        };
        for c in [
            sample::split_three_covering(Q),
            sample::matrix_point_covering(Q),
        ] {
            let cx = build_amitsur(&c, &config).unwrap();
            assert_eq!(amitsur_homology(&cx, true), vec![0; 4]);
            assert_eq!(amitsur_homology(&cx, false)[0], c.algebra().dim());
        }
        let cx =
            build_amitsur(&sample::split_three_covering(Q), &AmitsurConfig::default()).unwrap();
        assert_eq!(cx.dims(), vec![4, 6, 10]);
        assert_eq!(amitsur_homology(&cx, true), vec![0, 0, 0]);
    }

    #[test]
    fn first_differential_is_unit_commutator() {
        let c = sample::split_three_covering(Q);
        let cx = build_amitsur(&c, &AmitsurConfig::default()).unwrap();
        let t = cx.tower();
        // d_0(x) = 1 ⊗ x - x ⊗ 1 on the basis element x = b_1
        let x = vec![(1, Q.one())];
        let expected = {
            let l = t.project(&[t.unit().clone(), x.clone()]);
            let r = t.project(&[x.clone(), t.unit().clone()]);
            let mut acc = std::collections::BTreeMap::new();
            crate::exactla::add_scaled(&mut acc, &Q.one(), &l);
            crate::exactla::add_scaled(&mut acc, &-Q.one(), &r);
            acc.into_iter().collect::<Vec<_>>()
        };
        let got = crate::exactla::sparsify(&cx.differential(0).column(1));
        assert_eq!(got, expected);
    }

    #[test]
    fn incomplete_covering_fails_exactness() {
        let c = sample::three_lines_covering(Q);
        let cx = build_amitsur(&c, &AmitsurConfig::default()).unwrap();
        let h = amitsur_homology(&cx, true);
        assert_eq!(h[0], 0);
        assert!(h[1] > 0, "{h:?}");
    }

    #[test]
    fn zero_ideal_covering_is_trivially_acyclic() {
        let a = Arc::new(Algebra::truncated_polynomial(Q, 3));
        let c = Covering::new(a.clone(), vec![Ideal::zero(a)]).unwrap();
        let cx = build_amitsur(
            &c,
            &AmitsurConfig {
                n_max: 3,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(cx.dims(), vec![3, 3, 3, 3]);
        assert_eq!(amitsur_homology(&cx, true), vec![0; 4]);
    }

    #[test]
    fn cap_and_parameter_errors() {
        // T_3 has dim 10, so building T_4 needs 10 * 4 coordinates
        let c = sample::split_three_covering(Q);
        let err = build_amitsur(
            &c,
            &AmitsurConfig {
                n_max: 3,
                dim_cap: 30,
            },
        )
        .err()
        .unwrap();
        assert!(
            matches!(
                err,
                crate::Error::DimensionCap {
                    degree: 3,
                    estimated: 40,
                    cap: 30
                }
            ),
            "{err:?}"
        );
        let err = build_amitsur(
            &c,
            &AmitsurConfig {
                n_max: 0,
                dim_cap: 100,
            },
        )
        .err()
        .unwrap();
        assert!(matches!(err, crate::Error::InvalidParameter(_)));
    }
}
