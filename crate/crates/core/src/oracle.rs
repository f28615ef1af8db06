//! Covers by "open sets" described only by which overlaps are nonempty,
//! and the simplicial cohomology of their nerve computed without the Čech
//! machinery.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use rand::Rng;

use crate::algebra::{Algebra, AlgebraHom};
use crate::cech::{IndexTuple, PosetFunctor};
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix};

/// `n` patches and the set of index tuples with nonempty overlap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverDescription {
    n: usize,
    overlaps: BTreeSet<IndexTuple>,
    field: Field,
}

impl CoverDescription {
    /// `overlaps` must contain every singleton and be closed under taking
    /// nonempty subtuples. The empty tuple is ignored.
    pub fn new(n: usize, overlaps: BTreeSet<IndexTuple>, field: Field) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidCover("at least one patch is needed".into()));
        }
        let overlaps: BTreeSet<IndexTuple> =
            overlaps.into_iter().filter(|t| !t.is_empty()).collect();
        for t in &overlaps {
            if t.indices().iter().any(|&i| i >= n) {
                return Err(Error::InvalidCover(format!("{t} uses an index above {n}")));
            }
            for skip in 0..t.len() {
                let mut face = t.indices().to_vec();
                face.remove(skip);
                let face = IndexTuple::new(face, n)?;
                if !face.is_empty() && !overlaps.contains(&face) {
                    return Err(Error::InvalidCover(format!(
                        "{t} is listed but its face {face} is not"
                    )));
                }
            }
        }
        if let Some(i) = (0..n).find(|&i| !overlaps.contains(&IndexTuple::singleton(i))) {
            return Err(Error::InvalidCover(format!("patch {} is empty", i + 1)));
        }
        Ok(CoverDescription { n, overlaps, field })
    }

    /// All singletons plus the closure of the given tuples.
    pub fn from_maximal(n: usize, maximal: &[IndexTuple], field: Field) -> Result<Self> {
        let mut overlaps: BTreeSet<IndexTuple> = (0..n).map(IndexTuple::singleton).collect();
        for t in maximal {
            for sub in IndexTuple::all(n) {
                if !sub.is_empty() && sub.is_subset_of(t) {
                    overlaps.insert(sub);
                }
            }
        }
        Self::new(n, overlaps, field)
    }

    /// Three patches meeting pairwise with no triple overlap.
    pub fn circle(field: Field) -> Self {
        let pairs = IndexTuple::of_length(3, 2);
        Self::from_maximal(3, &pairs, field).expect("valid")
    }

    pub fn disjoint(n: usize, field: Field) -> Self {
        Self::from_maximal(n, &[], field).expect("valid")
    }

    /// Every overlap nonempty.
    pub fn simplex(n: usize, field: Field) -> Self {
        Self::from_maximal(n, &[IndexTuple::of_length(n, n).remove(0)], field).expect("valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn overlaps(&self) -> &BTreeSet<IndexTuple> {
        &self.overlaps
    }

    pub fn is_nonempty(&self, t: &IndexTuple) -> bool {
        t.is_empty() || self.overlaps.contains(t)
    }
}

/// The functor of locally constant functions: `k` on nonempty overlaps (and
/// on `∅`), the zero algebra elsewhere.
pub fn functor_from_cover(d: &CoverDescription) -> Result<PosetFunctor> {
    let field = d.field;
    let k = Arc::new(Algebra::ground(field));
    let zero = Arc::new(Algebra::zero(field));
    let pick = |t: &IndexTuple| {
        if d.is_nonempty(t) {
            k.clone()
        } else {
            zero.clone()
        }
    };
    let rings: BTreeMap<IndexTuple, Arc<Algebra>> = IndexTuple::all(d.n)
        .into_iter()
        .map(|t| (t.clone(), pick(&t)))
        .collect();
    let mut restrictions = BTreeMap::new();
    for zeta in IndexTuple::all(d.n) {
        for i in 0..d.n {
            let Some((eta, _)) = zeta.insert(i) else {
                continue;
            };
            let (src, dst) = (rings[&zeta].clone(), rings[&eta].clone());
            let m = if src.dim() == 1 && dst.dim() == 1 {
                Matrix::identity(field, 1)
            } else {
                Matrix::zeros(field, dst.dim(), src.dim())
            };
            restrictions.insert((zeta.clone(), eta), AlgebraHom::new(src, dst, m)?);
        }
    }
    PosetFunctor::new(d.n, field, rings, restrictions)
}

/// Simplicial cohomology `H^q` of the nerve for `q = 0 .. n-1`, using the
/// face-deletion coboundary `(δf)(σ) = Σ_k (-1)^k f(σ minus its k-th vertex)`.
/// Trailing degrees without simplices are dropped.
pub fn nerve_cohomology(d: &CoverDescription) -> Vec<usize> {
    let field = d.field;
    let simplices: Vec<Vec<&IndexTuple>> = (1..=d.n)
        .map(|len| d.overlaps.iter().filter(|t| t.len() == len).collect())
        .collect();
    let coboundary = |q: usize| -> Matrix {
        let (src, dst) = (&simplices[q], &simplices[q + 1]);
        let index: BTreeMap<&IndexTuple, usize> =
            src.iter().enumerate().map(|(k, t)| (*t, k)).collect();
        let mut m = Matrix::zeros(field, dst.len(), src.len());
        for (row, sigma) in dst.iter().enumerate() {
            for k in 0..sigma.len() {
                let mut face = sigma.indices().to_vec();
                face.remove(k);
                let col = index[&IndexTuple::new(face, d.n).expect("face of a tuple")];
                let v = if k % 2 == 0 {
                    field.one()
                } else {
                    -field.one()
                };
                m.set(row, col, v);
            }
        }
        m
    };
    let ranks: Vec<usize> = (0..d.n.saturating_sub(1))
        .map(|q| coboundary(q).rank())
        .collect();
    let mut out: Vec<usize> = (0..d.n)
        .map(|q| {
            let outgoing = ranks.get(q).copied().unwrap_or(0);
            let incoming = if q > 0 { ranks[q - 1] } else { 0 };
            simplices[q].len() - outgoing - incoming
        })
        .collect();
    while out.len() > 1 && simplices[out.len() - 1].is_empty() {
        out.pop();
    }
    out
}

/// A random cover on `1 ..= max_n` patches: each tuple of length at least
/// two whose faces are all present is added with probability `density`.
pub fn random_cover<R: Rng>(
    rng: &mut R,
    max_n: usize,
    density: f64,
    field: Field,
) -> CoverDescription {
    let n = rng.gen_range(1..=max_n.max(1));
    let mut overlaps: BTreeSet<IndexTuple> = (0..n).map(IndexTuple::singleton).collect();
    for len in 2..=n {
        for t in IndexTuple::of_length(n, len) {
            let faces_present = (0..len).all(|k| {
                let mut face = t.indices().to_vec();
                face.remove(k);
                overlaps.contains(&IndexTuple::new(face, n).expect("face"))
            });
            if faces_present && rng.gen_bool(density) {
                overlaps.insert(t);
            }
        }
    }
    CoverDescription::new(n, overlaps, field).expect("closed by construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cech::{build_cech, cech_cohomology};

    const Q: Field = Field::Rational;

    #[test]
    fn nerve_examples() {
        assert_eq!(nerve_cohomology(&CoverDescription::circle(Q)), vec![1, 1]);
        assert_eq!(nerve_cohomology(&CoverDescription::disjoint(2, Q)), vec![2]);
        assert_eq!(
            nerve_cohomology(&CoverDescription::simplex(3, Q)),
            vec![1, 0, 0]
        );
        assert_eq!(nerve_cohomology(&CoverDescription::disjoint(1, Q)), vec![1]);
    }

    #[test]
    fn functor_matches_nerve_on_examples() {
        for d in [
            CoverDescription::circle(Q),
            CoverDescription::disjoint(2, Q),
            CoverDescription::simplex(4, Q),
        ] {
            let f = functor_from_cover(&d).unwrap();
            assert_eq!(
                cech_cohomology(&build_cech(&f).unwrap()),
                nerve_cohomology(&d)
            );
        }
    }

    #[test]
    fn description_validation() {
        let t = |v: &[usize]| IndexTuple::new(v.to_vec(), 3).unwrap();
        let missing_face: BTreeSet<_> = [t(&[0]), t(&[1]), t(&[2]), t(&[0, 1, 2])]
            .into_iter()
            .collect();
        assert!(matches!(
            CoverDescription::new(3, missing_face, Q),
            Err(Error::InvalidCover(_))
        ));
        let missing_patch: BTreeSet<_> = [t(&[0]), t(&[1])].into_iter().collect();
        assert!(CoverDescription::new(3, missing_patch, Q).is_err());
        assert!(CoverDescription::new(0, BTreeSet::new(), Q).is_err());
    }
}
