use std::collections::BTreeMap;
use std::sync::Arc;

use super::tuple::IndexTuple;
use crate::algebra::{Algebra, AlgebraHom};
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix};

/// A functor from the tuples over `0..n` (ordered by inclusion) to algebras.
///
/// Only the restrictions along one-step inclusions `ζ ⊂ ζ ∪ {i}` are stored;
/// longer inclusions are composites.
#[derive(Clone, Debug)]
pub struct PosetFunctor {
    n: usize,
    field: Field,
    rings: BTreeMap<IndexTuple, Arc<Algebra>>,
    restrictions: BTreeMap<(IndexTuple, IndexTuple), AlgebraHom>,
}

fn same(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl PosetFunctor {
    /// Validates that every ring and one-step restriction is present, that
    /// restrictions connect the assigned rings, are algebra maps, and that
    /// the two paths around every square `ζ ⊂ ζ+i, ζ+j ⊂ ζ+i+j` agree.
    pub fn new(
        n: usize,
        field: Field,
        rings: BTreeMap<IndexTuple, Arc<Algebra>>,
        restrictions: BTreeMap<(IndexTuple, IndexTuple), AlgebraHom>,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("functor needs N >= 1".into()));
        }
        let f = PosetFunctor {
            n,
            field,
            rings,
            restrictions,
        };
        f.validate()?;
        Ok(f)
    }

    pub fn validate(&self) -> Result<()> {
        for zeta in IndexTuple::all(self.n) {
            let ring = self.rings.get(&zeta).ok_or_else(|| Error::MissingRing {
                tuple: zeta.indices().to_vec(),
            })?;
            if ring.field() != self.field {
                return Err(Error::FieldMismatch {
                    left: self.field,
                    right: ring.field(),
                });
            }
        }
        for key in self.restrictions.keys() {
            let (from, to) = key;
            let one_step = from.len() + 1 == to.len() && from.is_subset_of(to);
            if !one_step || to.indices().iter().any(|&i| i >= self.n) {
                return Err(Error::RestrictionMismatch {
                    from: from.indices().to_vec(),
                    to: to.indices().to_vec(),
                });
            }
        }
        for zeta in IndexTuple::all(self.n) {
            for i in 0..self.n {
                let Some((eta, _)) = zeta.insert(i) else {
                    continue;
                };
                let r = self.step(&zeta, &eta)?;
                if !same(r.domain(), &self.rings[&zeta]) || !same(r.codomain(), &self.rings[&eta]) {
                    return Err(Error::RestrictionMismatch {
                        from: zeta.indices().to_vec(),
                        to: eta.indices().to_vec(),
                    });
                }
                r.check()?;
            }
        }
        for zeta in IndexTuple::all(self.n) {
            for i in 0..self.n {
                for j in i + 1..self.n {
                    let (Some((zi, _)), Some((zj, _))) = (zeta.insert(i), zeta.insert(j)) else {
                        continue;
                    };
                    let (top, _) = zi.insert(j).expect("j not in ζ+i");
                    let first = self
                        .step(&zi, &top)?
                        .matrix()
                        .mul(self.step(&zeta, &zi)?.matrix())?;
                    let second = self
                        .step(&zj, &top)?
                        .matrix()
                        .mul(self.step(&zeta, &zj)?.matrix())?;
                    if first != second {
                        return Err(Error::NonCommuting {
                            from: zeta.indices().to_vec(),
                            to: top.indices().to_vec(),
                            via_first: zi.indices().to_vec(),
                            via_second: zj.indices().to_vec(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    fn step(&self, from: &IndexTuple, to: &IndexTuple) -> Result<&AlgebraHom> {
        self.restrictions
            .get(&(from.clone(), to.clone()))
            .ok_or_else(|| Error::MissingRestriction {
                from: from.indices().to_vec(),
                to: to.indices().to_vec(),
            })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ring(&self, zeta: &IndexTuple) -> &Arc<Algebra> {
        &self.rings[zeta]
    }

    pub fn rings(&self) -> &BTreeMap<IndexTuple, Arc<Algebra>> {
        &self.rings
    }

    /// The stored restriction for a one-step inclusion.
    pub fn restriction(&self, from: &IndexTuple, to: &IndexTuple) -> Option<&AlgebraHom> {
        self.restrictions.get(&(from.clone(), to.clone()))
    }

    pub fn restrictions(&self) -> &BTreeMap<(IndexTuple, IndexTuple), AlgebraHom> {
        &self.restrictions
    }

    /// Matrix of `r^ζ_ϑ` for any `ζ ⊆ ϑ`, adding the missing indices in
    /// increasing order.
    pub fn composite(&self, from: &IndexTuple, to: &IndexTuple) -> Result<Matrix> {
        if !from.is_subset_of(to) {
            return Err(Error::MissingRestriction {
                from: from.indices().to_vec(),
                to: to.indices().to_vec(),
            });
        }
        let mut cur = from.clone();
        let mut m = Matrix::identity(self.field, self.rings[from].dim());
        for &i in to.indices() {
            if let Some((next, _)) = cur.insert(i) {
                m = self.step(&cur, &next)?.matrix().mul(&m)?;
                cur = next;
            }
        }
        Ok(m)
    }
}

/// `𝓡(ζ) = R` for every tuple over `0..n`, with identity restrictions.
pub fn constant_functor(n: usize, ring: Arc<Algebra>) -> Result<PosetFunctor> {
    let field = ring.field();
    let rings = IndexTuple::all(n)
        .into_iter()
        .map(|t| (t, ring.clone()))
        .collect();
    let mut restrictions = BTreeMap::new();
    for zeta in IndexTuple::all(n) {
        for i in 0..n {
            if let Some((eta, _)) = zeta.insert(i) {
                restrictions.insert((zeta.clone(), eta), AlgebraHom::identity(ring.clone()));
            }
        }
    }
    PosetFunctor::new(n, field, rings, restrictions)
}
