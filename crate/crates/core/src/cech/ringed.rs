use std::collections::BTreeMap;
use std::sync::Arc;

use super::functor::PosetFunctor;
use super::phi::PhiChoice;
use super::tuple::IndexTuple;
use crate::algebra::{hom_compose, quotient, Algebra, AlgebraHom, Quotient};
use crate::covering::Covering;
use crate::error::{Error, Result};
use crate::exactla::Matrix;

/// An assignment `J ↦ (Φ(J), Φ_J: A/J -> Φ(J))` on ideals of `A`, natural
/// in inclusions `J1 ⊆ J2`.
pub trait RingedStructure {
    fn assign(&self, q: &Quotient) -> Result<(Arc<Algebra>, AlgebraHom)>;

    /// `Φ(J1) -> Φ(J2)` given the projection `A/J1 -> A/J2`.
    fn transport(
        &self,
        projection: &AlgebraHom,
        source: &Arc<Algebra>,
        target: &Arc<Algebra>,
    ) -> Result<AlgebraHom>;
}

/// `Φ(J) = A/J` with `Φ_J` the identity.
#[derive(Clone, Copy, Debug, Default)]
pub struct DefaultRinged;

impl RingedStructure for DefaultRinged {
    fn assign(&self, q: &Quotient) -> Result<(Arc<Algebra>, AlgebraHom)> {
        Ok((q.algebra.clone(), AlgebraHom::identity(q.algebra.clone())))
    }

    fn transport(
        &self,
        projection: &AlgebraHom,
        _source: &Arc<Algebra>,
        _target: &Arc<Algebra>,
    ) -> Result<AlgebraHom> {
        Ok(projection.clone())
    }
}

/// `Φ(J) = (A/J)^copies` with the diagonal embedding.
#[derive(Clone, Copy, Debug)]
pub struct DiagonalRinged {
    pub copies: usize,
}

impl RingedStructure for DiagonalRinged {
    fn assign(&self, q: &Quotient) -> Result<(Arc<Algebra>, AlgebraHom)> {
        if self.copies == 0 {
            return Err(Error::InvalidParameter(
                "diagonal ringed structure needs at least one copy".into(),
            ));
        }
        let a = q.algebra.as_ref();
        let field = a.field();
        let factors = vec![a; self.copies];
        let target = Arc::new(Algebra::direct_product(field, &factors)?);
        let id = Matrix::identity(field, a.dim());
        let diag = Matrix::vstack(field, a.dim(), &vec![id; self.copies])?;
        let hom = AlgebraHom::new(q.algebra.clone(), target.clone(), diag)?;
        Ok((target, hom))
    }

    fn transport(
        &self,
        projection: &AlgebraHom,
        source: &Arc<Algebra>,
        target: &Arc<Algebra>,
    ) -> Result<AlgebraHom> {
        let field = source.field();
        let m = Matrix::block_diagonal(field, &vec![projection.matrix().clone(); self.copies]);
        AlgebraHom::new(source.clone(), target.clone(), m)
    }
}

/// `𝓡(ζ) = Φ(Σ_{i ∈ ζ} I_i)` with restrictions the transported projections,
/// together with the homomorphisms `A_i -> 𝓡({i})` and `A -> 𝓡(∅)` that
/// define the chain map out of the Amitsur complex.
pub fn functor_from_ringed_covering(
    c: &Covering,
    rs: &dyn RingedStructure,
) -> Result<(PosetFunctor, PhiChoice)> {
    let n = c.len();
    let a = c.algebra();
    let mut quotients = BTreeMap::new();
    let mut assigned = BTreeMap::new();
    for zeta in IndexTuple::all(n) {
        let q = quotient(a, &c.ideal_sum_over(zeta.indices())?)?;
        assigned.insert(zeta.clone(), rs.assign(&q)?);
        quotients.insert(zeta, q);
    }
    let mut restrictions = BTreeMap::new();
    for zeta in IndexTuple::all(n) {
        for i in 0..n {
            let Some((eta, _)) = zeta.insert(i) else {
                continue;
            };
            let projection = quotients[&zeta].induced(&quotients[&eta])?;
            let (src, phi_src) = &assigned[&zeta];
            let (dst, phi_dst) = &assigned[&eta];
            let r = rs.transport(&projection, src, dst)?;
            // r ∘ Φ_ζ = Φ_η ∘ p
            let lhs = r.matrix().mul(phi_src.matrix())?;
            let rhs = phi_dst.matrix().mul(projection.matrix())?;
            if lhs != rhs {
                return Err(Error::Naturality {
                    smaller: zeta.indices().to_vec(),
                    larger: eta.indices().to_vec(),
                });
            }
            restrictions.insert((zeta.clone(), eta), r);
        }
    }
    let rings = assigned
        .iter()
        .map(|(t, (r, _))| (t.clone(), r.clone()))
        .collect();
    let functor = PosetFunctor::new(n, c.field(), rings, restrictions)?;

    let per_index = (0..n)
        .map(|i| {
            let t = IndexTuple::singleton(i);
            let into = c.patch(i).induced(&quotients[&t])?;
            hom_compose(&assigned[&t].1, &into)
        })
        .collect::<Result<Vec<_>>>()?;
    let empty = IndexTuple::empty();
    let base = hom_compose(&assigned[&empty].1, &quotients[&empty].projection)?;
    Ok((functor, PhiChoice::new(per_index, Some(base))))
}
