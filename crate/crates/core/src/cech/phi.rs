use std::collections::BTreeMap;
use std::sync::Arc;

use super::complex::{build_cech, CechComplex};
use super::functor::PosetFunctor;
use super::tuple::IndexTuple;
use crate::algebra::{Algebra, AlgebraHom};
use crate::amitsur::TensorTower;
use crate::covering::Covering;
use crate::error::{Error, Result};
use crate::exactla::{densify, Field, Matrix, Scalar, SparseVec};

/// How `φ` treats a pure tensor whose summand indices are distinct but not
/// increasing.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SignPolicy {
    /// Such tensors map to zero.
    #[default]
    IncreasingOnly,
    /// Indices are sorted and the value picks up the sign of the permutation.
    AlternatingSign,
}

/// The homomorphisms `Φ_i: A_i -> 𝓡({i})`, and optionally `A -> 𝓡(∅)`.
#[derive(Clone, Debug)]
pub struct PhiChoice {
    per_index: Vec<AlgebraHom>,
    base: Option<AlgebraHom>,
}

impl PhiChoice {
    pub fn new(per_index: Vec<AlgebraHom>, base: Option<AlgebraHom>) -> Self {
        PhiChoice { per_index, base }
    }

    pub fn per_index(&self) -> &[AlgebraHom] {
        &self.per_index
    }

    pub fn base(&self) -> Option<&AlgebraHom> {
        self.base.as_ref()
    }
}

/// A pure tensor `y_1 ⊗ ... ⊗ y_n` with `y_k ∈ A_{i_k}`, as `(i_k, y_k)`.
pub type DecomposedTensor = Vec<(usize, Vec<Scalar>)>;

fn same(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// `φ: B^{⊗_A n} -> S^n`, sending `y_1 ⊗ ... ⊗ y_n` with increasing summand
/// indices `ζ = (i_1 < ... < i_n)` to `Π_k r^{i_k}_ζ Φ_{i_k}(y_k) ∈ 𝓡(ζ)`.
pub struct ChainMap<'a> {
    functor: &'a PosetFunctor,
    choice: &'a PhiChoice,
    policy: SignPolicy,
    cech: CechComplex,
    /// `(i, ζ) -> r^{i}_ζ ∘ Φ_i`
    legs: BTreeMap<(usize, IndexTuple), Matrix>,
}

impl<'a> ChainMap<'a> {
    pub fn new(
        functor: &'a PosetFunctor,
        choice: &'a PhiChoice,
        policy: SignPolicy,
    ) -> Result<Self> {
        let n = functor.n();
        if choice.per_index.len() != n {
            return Err(Error::ChoiceMismatch {
                index: choice.per_index.len().min(n),
            });
        }
        let mut legs = BTreeMap::new();
        for (i, h) in choice.per_index.iter().enumerate() {
            let single = IndexTuple::singleton(i);
            if !same(h.codomain(), functor.ring(&single)) {
                return Err(Error::ChoiceMismatch { index: i });
            }
            for zeta in IndexTuple::all(n).into_iter().filter(|t| t.contains(i)) {
                let m = functor.composite(&single, &zeta)?.mul(h.matrix())?;
                legs.insert((i, zeta), m);
            }
        }
        if let Some(b) = &choice.base {
            if !same(b.codomain(), functor.ring(&IndexTuple::empty())) {
                return Err(Error::ChoiceMismatch { index: n });
            }
        }
        Ok(ChainMap {
            functor,
            choice,
            policy,
            cech: build_cech(functor)?,
            legs,
        })
    }

    pub fn cech(&self) -> &CechComplex {
        &self.cech
    }

    pub fn policy(&self) -> SignPolicy {
        self.policy
    }

    fn field(&self) -> Field {
        self.functor.field()
    }

    /// `φ` of one summand-decomposed pure tensor, as an element of `S^n`.
    pub fn apply(&self, tensor: &[(usize, Vec<Scalar>)]) -> Result<Vec<Scalar>> {
        let field = self.field();
        let n = self.functor.n();
        for (position, (summand, y)) in tensor.iter().enumerate() {
            let expected = self
                .choice
                .per_index
                .get(*summand)
                .map(|h| h.domain().dim());
            if expected != Some(y.len()) {
                return Err(Error::NotDecomposed {
                    position,
                    summand: *summand,
                    expected: expected.unwrap_or(0),
                    got: y.len(),
                });
            }
        }
        let zero = vec![field.zero(); self.cech.dim(tensor.len())];
        if tensor.len() > n {
            return Ok(zero);
        }
        let indices: Vec<usize> = tensor.iter().map(|(i, _)| *i).collect();
        let mut sorted = indices.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Ok(zero);
        }
        let increasing = sorted == indices;
        let negate = match self.policy {
            _ if increasing => false,
            SignPolicy::IncreasingOnly => return Ok(zero),
            SignPolicy::AlternatingSign => permutation_is_odd(&indices),
        };
        let zeta = IndexTuple::new(sorted, n)?;
        let ring = self.functor.ring(&zeta);
        let mut acc = ring.unit().to_vec();
        for (i, y) in tensor {
            let x = self.legs[&(*i, zeta.clone())].mul_vec(y)?;
            acc = ring.mul(&acc, &x);
        }
        if negate {
            acc = acc.iter().map(|c| -c).collect();
        }
        Ok(self.cech.embed(&zeta, &acc))
    }

    /// `φ` of `f_1 ⊗ ... ⊗ f_n` for arbitrary `f_k ∈ B` (in `B` coordinates),
    /// expanded multilinearly over the summands.
    pub fn apply_ambient(&self, tower: &TensorTower, factors: &[SparseVec]) -> Result<Vec<Scalar>> {
        let field = self.field();
        let parts: Vec<DecomposedTensor> =
            factors.iter().map(|f| split_by_summand(tower, f)).collect();
        let mut total = vec![field.zero(); self.cech.dim(factors.len())];
        let mut pick = vec![0usize; parts.len()];
        if parts.iter().any(Vec::is_empty) {
            return Ok(total);
        }
        loop {
            let tensor: DecomposedTensor = pick
                .iter()
                .zip(&parts)
                .map(|(&k, p)| p[k].clone())
                .collect();
            for (t, v) in total.iter_mut().zip(self.apply(&tensor)?) {
                *t = &*t + &v;
            }
            let mut pos = parts.len();
            loop {
                if pos == 0 {
                    return Ok(total);
                }
                pos -= 1;
                pick[pos] += 1;
                if pick[pos] < parts[pos].len() {
                    break;
                }
                pick[pos] = 0;
            }
        }
    }

    /// Matrix of `φ_n: T_n -> S^n` in the coordinates of the tower.
    pub fn matrix(&self, tower: &TensorTower, power: usize) -> Result<Matrix> {
        let cols = tower
            .words(power)
            .iter()
            .map(|w| self.apply(&decompose_word(tower, w)))
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_columns(self.field(), self.cech.dim(power), &cols)
    }
}

fn permutation_is_odd(v: &[usize]) -> bool {
    let mut inversions = 0;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 1
}

/// Components of `f ∈ B` in the summands `A_i` that it meets.
pub fn split_by_summand(tower: &TensorTower, f: &SparseVec) -> DecomposedTensor {
    let mut by_patch: BTreeMap<usize, SparseVec> = BTreeMap::new();
    for (b, c) in f {
        let (i, local) = tower.summand(*b);
        by_patch.entry(i).or_default().push((local, c.clone()));
    }
    by_patch
        .into_iter()
        .map(|(i, v)| (i, densify(tower.field(), patch_dim(tower, i), &v)))
        .collect()
}

fn patch_dim(tower: &TensorTower, i: usize) -> usize {
    (0..tower.ring().dim())
        .filter(|&b| tower.summand(b).0 == i)
        .count()
}

/// The basis pure tensor behind a word of `B`-basis indices.
pub fn decompose_word(tower: &TensorTower, word: &[usize]) -> DecomposedTensor {
    word.iter()
        .map(|&b| {
            let (i, local) = tower.summand(b);
            let mut y = vec![tower.field().zero(); patch_dim(tower, i)];
            y[local] = tower.field().one();
            (i, y)
        })
        .collect()
}

/// A coordinate vector of `T_n` as a combination of summand-decomposed pure
/// tensors.
pub fn decompose(
    tower: &TensorTower,
    power: usize,
    v: &SparseVec,
) -> Vec<(Scalar, DecomposedTensor)> {
    v.iter()
        .map(|(j, c)| (c.clone(), decompose_word(tower, &tower.words(power)[*j])))
        .collect()
}

/// One square `d' φ_n = φ_{n+1} d` with source `T_n = C^{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeCheck {
    /// Tensor power `n` of the source, which is also the Čech degree of the target.
    pub degree: usize,
    pub matrix_ok: bool,
    pub ambient_ok: bool,
    /// First basis word (as `(summand, local index)` pairs) where the
    /// ambient comparison fails.
    pub witness: Option<Vec<(usize, usize)>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationWitness {
    /// `B`-basis indices of the pure tensor
    pub word: Vec<usize>,
    /// the element of `A` is moved across the factors at `slot` and `slot + 1`
    pub slot: usize,
    pub a: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMapReport {
    pub policy: SignPolicy,
    /// `d'_0 ∘ (A -> 𝓡(∅)) = φ_1 ∘ π`, when a base map is given
    pub augmentation_ok: Option<bool>,
    pub degrees: Vec<DegreeCheck>,
    pub relations_ok: bool,
    pub relation_witness: Option<RelationWitness>,
}

impl ChainMapReport {
    pub fn passed(&self) -> bool {
        self.augmentation_ok != Some(false)
            && self.relations_ok
            && self.degrees.iter().all(|d| d.matrix_ok && d.ambient_ok)
    }
}

/// Compares `d'_n φ_n` with `φ_{n+1} d_{n-1}` for `n = 1 ..= n_max`, both as
/// matrices and by expanding `1_B = Σ_j π_j(1)` on every basis pure tensor,
/// and checks that `φ` vanishes on the balancing relations up to `T_{n_max}`.
pub fn verify_chain_map(
    f: &PosetFunctor,
    choice: &PhiChoice,
    c: &Covering,
    n_max: usize,
    policy: SignPolicy,
    dim_cap: usize,
) -> Result<ChainMapReport> {
    if f.n() != c.len() {
        return Err(Error::ChoiceMismatch {
            index: f.n().min(c.len()),
        });
    }
    for (i, h) in choice.per_index.iter().enumerate() {
        if !same(h.domain(), &c.patch(i).algebra) {
            return Err(Error::ChoiceMismatch { index: i });
        }
    }
    let phi = ChainMap::new(f, choice, policy)?;
    let mut tower = TensorTower::new(c, dim_cap);
    tower.extend_to(n_max + 1)?;
    let field = c.field();
    let one = field.one();
    let minus = -&one;
    let n = c.len();
    let local_units: Vec<Vec<Scalar>> =
        (0..n).map(|i| c.patch(i).algebra.unit().to_vec()).collect();

    let augmentation_ok = match choice.base() {
        Some(b) => {
            if !same(b.domain(), c.algebra()) {
                return Err(Error::ChoiceMismatch { index: n });
            }
            let lhs = phi.cech().differential(0).mul(b.matrix())?;
            let rhs = phi.matrix(&tower, 1)?.mul(&c.pi())?;
            Some(lhs == rhs)
        }
        None => None,
    };

    let mut degrees = Vec::with_capacity(n_max);
    let mut phis = vec![phi.matrix(&tower, 1)?];
    for power in 1..=n_max {
        phis.push(phi.matrix(&tower, power + 1)?);
        let mut d = Matrix::zeros(field, tower.dim(power + 1), tower.dim(power));
        for slot in 0..=power {
            d.add_block(
                0,
                0,
                if slot % 2 == 0 { &one } else { &minus },
                &tower.insertion_map(power, slot),
            );
        }
        let dprime = phi.cech().differential(power);
        let matrix_ok = dprime.mul(&phis[power - 1])? == phis[power].mul(&d)?;

        let mut witness = None;
        for word in tower.words(power) {
            let pure = decompose_word(&tower, word);
            let lhs = dprime.mul_vec(&phi.apply(&pure)?)?;
            let mut rhs = vec![field.zero(); phi.cech().dim(power + 1)];
            for slot in 0..=power {
                let sign = if slot % 2 == 0 { &one } else { &minus };
                for (j, u) in local_units.iter().enumerate() {
                    let mut t = pure.clone();
                    t.insert(slot, (j, u.clone()));
                    for (r, v) in rhs.iter_mut().zip(phi.apply(&t)?) {
                        *r = &*r + &(sign * &v);
                    }
                }
            }
            if lhs != rhs {
                witness = Some(word.iter().map(|&b| tower.summand(b)).collect());
                break;
            }
        }
        degrees.push(DegreeCheck {
            degree: power,
            matrix_ok,
            ambient_ok: witness.is_none(),
            witness,
        });
    }

    let relation_witness = relation_check(&phi, &tower, c, n_max)?;
    Ok(ChainMapReport {
        policy,
        augmentation_ok,
        degrees,
        relations_ok: relation_witness.is_none(),
        relation_witness,
    })
}

/// `φ((.. y·π(a)) ⊗ (y' ..)) = φ((.. y) ⊗ (π(a)·y' ..))` on basis words of
/// length `2 ..= n_max` and basis elements `a` of `A`.
fn relation_check(
    phi: &ChainMap,
    tower: &TensorTower,
    c: &Covering,
    n_max: usize,
) -> Result<Option<RelationWitness>> {
    let b = tower.ring();
    let db = b.dim();
    let pi = c.pi();
    let images: Vec<Vec<Scalar>> = (0..c.algebra().dim()).map(|a| pi.column(a)).collect();
    for len in 2..=n_max {
        let mut word = vec![0usize; len];
        if db == 0 {
            break;
        }
        loop {
            for slot in 0..len - 1 {
                for (a, img) in images.iter().enumerate() {
                    let mut left: Vec<SparseVec> =
                        word.iter().map(|&x| vec![(x, b.field().one())]).collect();
                    let mut right = left.clone();
                    left[slot] = crate::exactla::sparsify(&b.mul(&b.basis_vector(word[slot]), img));
                    right[slot + 1] =
                        crate::exactla::sparsify(&b.mul(img, &b.basis_vector(word[slot + 1])));
                    if phi.apply_ambient(tower, &left)? != phi.apply_ambient(tower, &right)? {
                        return Ok(Some(RelationWitness {
                            word: word.clone(),
                            slot,
                            a,
                        }));
                    }
                }
            }
            let mut pos = len;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                word[pos] += 1;
                if word[pos] < db {
                    break;
                }
                word[pos] = 0;
            }
            if word.iter().all(|&x| x == 0) {
                break;
            }
        }
    }
    Ok(None)
}
