use std::collections::BTreeMap;
use std::sync::Arc;

use super::bimodule::{balanced_tensor, Bimodule};
use crate::algebra::Algebra;
use crate::covering::Covering;
use crate::error::{Error, Result};
use crate::exactla::{add_scaled, sparsify, Field, Matrix, QuotientProjection, Scalar, SparseVec};

/// Default bound on the coordinate dimension of `T_{n} ⊗_k B` before it is
/// reduced to `T_{n+1}`.
pub const DEFAULT_DIM_CAP: usize = 20_000;

struct Level {
    module: Bimodule,
    /// `T_{k-1} ⊗_k B -> T_k`; the identity on `B` at the bottom
    projection: QuotientProjection,
    /// basis vector of `T_k` -> the pure tensor of `B`-basis elements it lifts to
    words: Vec<Vec<usize>>,
}

/// Left-associated balanced tensor powers `T_1 = B`, `T_{k+1} = T_k ⊗_A B`
/// of the extension `B = ⊕ A_i` of a covering.
///
/// Every basis vector of `T_k` is the image of a pure tensor of `B`-basis
/// elements (its *word*), and [`TensorTower::project`] sends any pure tensor of
/// `B`-elements to `T_k` coordinates.
pub struct TensorTower {
    field: Field,
    ring: Algebra,
    unit: SparseVec,
    /// `B`-basis index -> (patch, index inside the patch)
    summands: Vec<(usize, usize)>,
    patch_units: Vec<SparseVec>,
    levels: Vec<Level>,
    dim_cap: usize,
}

impl TensorTower {
    pub fn new(c: &Covering, dim_cap: usize) -> Self {
        let field = c.field();
        let ring = c.extension_ring();
        let module = Bimodule::extension(c);
        let offsets = c.patch_offsets();
        let mut summands = Vec::with_capacity(ring.dim());
        let mut patch_units = Vec::with_capacity(c.len());
        for (i, p) in c.patches().iter().enumerate() {
            for local in 0..p.algebra.dim() {
                summands.push((i, local));
            }
            let unit = p
                .algebra
                .unit()
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero());
            patch_units.push(unit.map(|(j, x)| (offsets[i] + j, x.clone())).collect());
        }
        let d = ring.dim();
        let bottom = Level {
            module,
            projection: QuotientProjection::identity(field, d),
            words: (0..d).map(|b| vec![b]).collect(),
        };
        TensorTower {
            field,
            unit: sparsify(ring.unit()),
            ring,
            summands,
            patch_units,
            levels: vec![bottom],
            dim_cap,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// The ring `B`.
    pub fn ring(&self) -> &Algebra {
        &self.ring
    }

    pub fn base(&self) -> &Bimodule {
        &self.levels[0].module
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        self.levels[0].module.algebra()
    }

    /// Largest power built so far.
    pub fn height(&self) -> usize {
        self.levels.len()
    }

    /// `dim T_power`.
    pub fn dim(&self, power: usize) -> usize {
        self.levels[power - 1].module.dim()
    }

    pub fn module(&self, power: usize) -> &Bimodule {
        &self.levels[power - 1].module
    }

    pub fn words(&self, power: usize) -> &[Vec<usize>] {
        &self.levels[power - 1].words
    }

    /// `(patch, local index)` of a `B`-basis element.
    pub fn summand(&self, b: usize) -> (usize, usize) {
        self.summands[b]
    }

    /// `π_i(1_A)` in `B` coordinates.
    pub fn patch_unit(&self, i: usize) -> &SparseVec {
        &self.patch_units[i]
    }

    pub fn unit(&self) -> &SparseVec {
        &self.unit
    }

    /// Builds powers up to `T_power`. The cap is checked against the ambient
    /// dimension `dim T_k · dim B` before each reduction; the reported degree
    /// is the Amitsur degree `power - 1` of the space being built.
    pub fn extend_to(&mut self, power: usize) -> Result<()> {
        while self.levels.len() < power {
            let k = self.levels.len();
            let top = &self.levels[k - 1];
            let estimated = top.module.dim() * self.ring.dim();
            if estimated > self.dim_cap {
                return Err(Error::DimensionCap {
                    degree: k,
                    estimated,
                    cap: self.dim_cap,
                });
            }
            let (module, projection) = balanced_tensor(&top.module, &self.levels[0].module)?;
            let db = self.ring.dim();
            let words = projection
                .complement()
                .iter()
                .map(|&j| {
                    let mut w = top.words[j / db].clone();
                    w.push(j % db);
                    w
                })
                .collect();
            self.levels.push(Level {
                module,
                projection,
                words,
            });
        }
        Ok(())
    }

    /// Image of `f_1 ⊗ ... ⊗ f_n` (each `f_i` in `B` coordinates) in `T_n`.
    pub fn project(&self, factors: &[SparseVec]) -> SparseVec {
        assert!(
            !factors.is_empty() && factors.len() <= self.height(),
            "power out of range"
        );
        let db = self.ring.dim();
        let mut cur = factors[0].clone();
        for (k, f) in factors.iter().enumerate().skip(1) {
            if cur.is_empty() {
                break;
            }
            let level = &self.levels[k];
            let mut acc = BTreeMap::new();
            for (t, ct) in &cur {
                for (b, cb) in f {
                    add_scaled(&mut acc, &(ct * cb), level.projection.column(t * db + b));
                }
            }
            cur = acc.into_iter().collect();
        }
        cur
    }

    fn basis_factor(&self, b: usize) -> SparseVec {
        vec![(b, self.field.one())]
    }

    fn map_words(
        &self,
        power: usize,
        target: usize,
        f: impl Fn(&[usize]) -> Vec<SparseVec>,
    ) -> Matrix {
        let cols: Vec<SparseVec> = self
            .words(power)
            .iter()
            .map(|w| self.project(&f(w)))
            .collect();
        Matrix::from_sparse_columns(self.field, self.dim(target), &cols)
    }

    /// `T_n -> T_{n+1}`, inserting `1_B` before the factor at `slot`
    /// (`slot = n` appends it).
    pub fn insertion_map(&self, power: usize, slot: usize) -> Matrix {
        assert!(slot <= power && power < self.height());
        self.map_words(power, power + 1, |w| {
            let mut factors: Vec<SparseVec> = w.iter().map(|&b| self.basis_factor(b)).collect();
            factors.insert(slot, self.unit.clone());
            factors
        })
    }

    /// `T_n -> T_{n-1}`, multiplying the factors at `slot` and `slot + 1` in `B`.
    pub fn multiplication_map(&self, power: usize, slot: usize) -> Matrix {
        assert!(slot + 1 < power && power <= self.height());
        self.map_words(power, power - 1, |w| {
            let mut factors: Vec<SparseVec> = Vec::with_capacity(w.len() - 1);
            for (i, &b) in w.iter().enumerate() {
                if i == slot + 1 {
                    continue;
                }
                if i == slot {
                    factors.push(self.ring.product_of_basis(b, w[i + 1]).to_vec());
                } else {
                    factors.push(self.basis_factor(b));
                }
            }
            factors
        })
    }

    /// Coordinates of a pure tensor of `B` elements, given densely.
    pub fn project_dense(&self, factors: &[Vec<Scalar>]) -> SparseVec {
        let sparse: Vec<SparseVec> = factors.iter().map(|f| sparsify(f)).collect();
        self.project(&sparse)
    }
}
