//! Coverings of an algebra by two-sided ideals.
//!
//! For ideals `I_1, ..., I_N` of `A` we materialize the patches `A_i = A/I_i`,
//! the overlaps `A_ij = A/(I_i + I_j)` for `i < j`, and the maps of
//!
//! ```text
//! 0 -> A --π--> B = ⊕ A_i --τ--> B' = ⊕_{i<j} A_ij
//! ```
//!
//! Only pairs `i < j` are kept in `B'`: the `(j, i)` component of `τ` is the
//! negative of the `(i, j)` one and adds nothing to its kernel.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::Rng;

use crate::algebra::{
    ideal_intersection, ideal_sum, quotient, Algebra, AlgebraHom, Ideal, Quotient,
};
use crate::error::{Error, Result};
use crate::exactla::{image_basis, kernel_basis, Field, Matrix, Subspace};
use crate::sample;

#[derive(Clone, Debug)]
pub struct Overlap {
    pub quotient: Quotient,
    /// `π^i_{ij}: A_i -> A_ij`
    pub from_first: AlgebraHom,
    /// `π^j_{ij}: A_j -> A_ij`
    pub from_second: AlgebraHom,
}

#[derive(Clone, Debug)]
pub struct Covering {
    algebra: Arc<Algebra>,
    ideals: Vec<Ideal>,
    patches: Vec<Quotient>,
    overlaps: BTreeMap<(usize, usize), Overlap>,
}

impl Covering {
    pub fn new(algebra: Arc<Algebra>, ideals: Vec<Ideal>) -> Result<Self> {
        if ideals.is_empty() {
            return Err(Error::EmptyCovering);
        }
        let patches = ideals
            .iter()
            .map(|i| quotient(&algebra, i))
            .collect::<Result<Vec<_>>>()?;
        let mut overlaps = BTreeMap::new();
        for i in 0..ideals.len() {
            for j in i + 1..ideals.len() {
                let q = quotient(&algebra, &ideal_sum(&ideals[i], &ideals[j])?)?;
                let from_first = patches[i].induced(&q)?;
                let from_second = patches[j].induced(&q)?;
                overlaps.insert(
                    (i, j),
                    Overlap {
                        quotient: q,
                        from_first,
                        from_second,
                    },
                );
            }
        }
        Ok(Covering {
            algebra,
            ideals,
            patches,
            overlaps,
        })
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    /// `A_i` with `π_i`.
    pub fn patch(&self, i: usize) -> &Quotient {
        &self.patches[i]
    }

    pub fn patches(&self) -> &[Quotient] {
        &self.patches
    }

    /// `A_ij` for `i < j`.
    pub fn overlap(&self, i: usize, j: usize) -> Option<&Overlap> {
        self.overlaps.get(&(i, j))
    }

    /// Offsets of each `A_i` inside `B`, plus the total dimension at the end.
    pub fn patch_offsets(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len() + 1);
        let mut acc = 0;
        for p in &self.patches {
            out.push(acc);
            acc += p.algebra.dim();
        }
        out.push(acc);
        out
    }

    /// The product ring `B = ⊕ A_i`.
    pub fn extension_ring(&self) -> Algebra {
        let factors: Vec<&Algebra> = self.patches.iter().map(|p| p.algebra.as_ref()).collect();
        Algebra::direct_product(self.field(), &factors).expect("patches share the field")
    }

    /// `Σ_{i ∈ indices} I_i`; the zero ideal for an empty list.
    pub fn ideal_sum_over(&self, indices: &[usize]) -> Result<Ideal> {
        let mut acc = Ideal::zero(self.algebra.clone());
        for &i in indices {
            acc = ideal_sum(&acc, &self.ideals[i])?;
        }
        Ok(acc)
    }

    pub fn intersection(&self) -> Subspace {
        ideal_intersection(&self.ideals).expect("ideals of one algebra")
    }

    /// `π: A -> B`, the stacked projections.
    pub fn pi(&self) -> Matrix {
        let blocks: Vec<Matrix> = self
            .patches
            .iter()
            .map(|p| p.projection.matrix().clone())
            .collect();
        Matrix::vstack(self.field(), self.algebra.dim(), &blocks).expect("common domain")
    }

    /// `τ: B -> B'` with block row `(i, j)` equal to `[.. π^i_ij .. -π^j_ij ..]`.
    pub fn tau(&self) -> Matrix {
        let offsets = self.patch_offsets();
        let rows: usize = self
            .overlaps
            .values()
            .map(|o| o.quotient.algebra.dim())
            .sum();
        let mut t = Matrix::zeros(self.field(), rows, offsets[self.len()]);
        let one = self.field().one();
        let minus = -&one;
        let mut r = 0;
        for (&(i, j), o) in &self.overlaps {
            t.add_block(r, offsets[i], &one, o.from_first.matrix());
            t.add_block(r, offsets[j], &minus, o.from_second.matrix());
            r += o.quotient.algebra.dim();
        }
        t
    }
}

/// Outcome of checking the sequence `0 -> A -> B -> B'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompletenessReport {
    pub is_covering: bool,
    pub intersection_dim: usize,
    pub exact_at_a: bool,
    pub exact_at_b: bool,
    pub kernel_tau_dim: usize,
    pub image_pi_dim: usize,
    pub complete: bool,
}

/// `∩ I_i = 0`.
pub fn is_covering(c: &Covering) -> bool {
    c.intersection().dim() == 0
}

pub fn build_tau(c: &Covering) -> Matrix {
    c.tau()
}

/// Exactness at `A` (injectivity of `π`) and at `B` (`ker τ = im π`, compared
/// as canonical subspaces).
pub fn completeness_check(c: &Covering) -> CompletenessReport {
    let intersection_dim = c.intersection().dim();
    let pi = c.pi();
    let image_pi = image_basis(&pi);
    let kernel_tau = kernel_basis(&c.tau());
    let exact_at_a = kernel_basis(&pi).dim() == 0;
    let exact_at_b = image_pi == kernel_tau;
    let is_covering = intersection_dim == 0;
    CompletenessReport {
        is_covering,
        intersection_dim,
        exact_at_a,
        exact_at_b,
        kernel_tau_dim: kernel_tau.dim(),
        image_pi_dim: image_pi.dim(),
        complete: is_covering && exact_at_a && exact_at_b,
    }
}

/// Random search for a covering (zero intersection) whose sequence fails to be
/// exact at `B`. Each draw covers a random small algebra by three or four
/// proper principal ideals. Returns the first hit within `attempts` draws.
pub fn find_incomplete_covering<R: Rng>(
    rng: &mut R,
    field: Field,
    attempts: usize,
) -> Option<Covering> {
    (0..attempts).find_map(|_| {
        let a = Arc::new(sample::random_algebra(rng, field, 6));
        let n = rng.gen_range(3..=4);
        let ideals = (0..n)
            .map(|_| sample::random_principal_ideal(rng, &a))
            .collect::<Option<Vec<_>>>()?;
        let c = Covering::new(a, ideals).ok()?;
        let report = completeness_check(&c);
        (report.is_covering && !report.complete).then_some(c)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::{self, coordinate_ideal};

    const Q: Field = Field::Rational;

    fn e1() -> Covering {
        sample::split_three_covering(Q)
    }

    fn e4() -> Covering {
        sample::matrix_point_covering(Q)
    }

    #[test]
    fn covering_examples() {
        assert!(is_covering(&e1()));
        let a = Arc::new(Algebra::split(Q, 3));
        let dup = Covering::new(
            a.clone(),
            vec![coordinate_ideal(&a, &[2]), coordinate_ideal(&a, &[2])],
        )
        .unwrap();
        assert!(!is_covering(&dup));
        assert_eq!(dup.intersection().dim(), 1);
        let single = Covering::new(a.clone(), vec![Ideal::zero(a.clone())]).unwrap();
        assert!(is_covering(&single));
        assert!(matches!(
            Covering::new(a, vec![]),
            Err(Error::EmptyCovering)
        ));
    }

    #[test]
    fn tau_examples() {
        let t = build_tau(&e1());
        assert_eq!(t.shape(), (1, 4));
        assert_eq!(kernel_basis(&t).dim(), 3);
        // A_1 = span{e1,e2}, A_2 = span{e2,e3}, A_12 = span{e2}
        assert_eq!(t, Matrix::from_i64(Q, &[&[0, 1, -1, 0]]));

        let a = Arc::new(Algebra::split(Q, 3));
        let single = Covering::new(a.clone(), vec![Ideal::zero(a)]).unwrap();
        assert_eq!(build_tau(&single).shape(), (0, 3));

        let t4 = build_tau(&e4());
        assert_eq!(t4.shape(), (0, 5));
        assert_eq!(kernel_basis(&t4).dim(), 5);
    }

    #[test]
    fn completeness_examples() {
        let r = completeness_check(&e1());
        assert!(r.complete);
        assert_eq!((r.image_pi_dim, r.kernel_tau_dim), (3, 3));

        let r = completeness_check(&e4());
        assert!(r.complete);
        assert_eq!((r.image_pi_dim, r.kernel_tau_dim), (5, 5));

        let a = Arc::new(Algebra::split(Q, 3));
        let dup = Covering::new(
            a.clone(),
            vec![coordinate_ideal(&a, &[2]), coordinate_ideal(&a, &[2])],
        )
        .unwrap();
        let r = completeness_check(&dup);
        assert!(!r.is_covering && !r.complete && !r.exact_at_a);
    }

    #[test]
    fn single_ideal_is_complete_iff_zero() {
        let a = Arc::new(Algebra::truncated_polynomial(Q, 3));
        let zero = Covering::new(a.clone(), vec![Ideal::zero(a.clone())]).unwrap();
        assert!(completeness_check(&zero).complete);
        let x = coordinate_ideal(&a, &[1]);
        let c = Covering::new(a, vec![x]).unwrap();
        assert!(!completeness_check(&c).complete);
    }

    #[test]
    fn three_lines_in_a_square_zero_algebra_are_incomplete() {
        // A = k[x,y]/(x,y)^2; each A_i has dim 2, each A_ij = k, so dim ker τ = 6 - 2 = 4 > 3.
        let c = sample::three_lines_covering(Q);
        let r = completeness_check(&c);
        assert!(r.is_covering && r.exact_at_a);
        assert_eq!((r.image_pi_dim, r.kernel_tau_dim), (3, 4));
        assert!(!r.complete);
    }

    #[test]
    fn projections_commute_on_overlaps() {
        for c in [e1(), e4()] {
            for i in 0..c.len() {
                for j in i + 1..c.len() {
                    let o = c.overlap(i, j).unwrap();
                    let lhs = o
                        .from_first
                        .matrix()
                        .mul(c.patch(i).projection.matrix())
                        .unwrap();
                    let rhs = o
                        .from_second
                        .matrix()
                        .mul(c.patch(j).projection.matrix())
                        .unwrap();
                    assert_eq!(lhs, rhs);
                    o.from_first.check().unwrap();
                    o.from_second.check().unwrap();
                }
            }
        }
    }
}
