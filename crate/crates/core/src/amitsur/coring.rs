use std::collections::BTreeMap;

use super::tower::TensorTower;
use crate::covering::Covering;
use crate::error::Result;
use crate::exactla::{add_scaled, densify, Matrix, SparseVec};

/// The Sweedler coring `C = B ⊗_A B` of `A -> B = ⊕ A_i`.
///
/// `C ⊗_B C` is identified with `B ⊗_A B ⊗_A B` (and `C ⊗_B C ⊗_B C` with
/// the fourth power), so the coproduct `x ⊗ y -> x ⊗ 1 ⊗ y` is the unit
/// insertion at slot 1 and the counit is multiplication `B ⊗_A B -> B`.
pub struct SweedlerCoring {
    tower: TensorTower,
    coproduct: Matrix,
    counit: Matrix,
    matrix_units: BTreeMap<(usize, usize), SparseVec>,
}

/// Outcome of the coring law checks; every field should be `true`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoringReport {
    /// `Δ e_ij = Σ_k e_ik ⊗_B e_kj`
    pub matrix_unit_coproduct: bool,
    /// `ε(e_ij) = δ_ij π_i(1)`
    pub matrix_unit_counit: bool,
    /// `(Δ ⊗ id) Δ = (id ⊗ Δ) Δ`
    pub coassociative: bool,
    /// `(ε ⊗ id) Δ = id`
    pub left_counit: bool,
    /// `(id ⊗ ε) Δ = id`
    pub right_counit: bool,
}

impl CoringReport {
    pub fn all_hold(&self) -> bool {
        self.matrix_unit_coproduct
            && self.matrix_unit_counit
            && self.coassociative
            && self.left_counit
            && self.right_counit
    }
}

pub fn build_coring(c: &Covering, dim_cap: usize) -> Result<SweedlerCoring> {
    let mut tower = TensorTower::new(c, dim_cap);
    tower.extend_to(4)?;
    let coproduct = tower.insertion_map(2, 1);
    let counit = tower.multiplication_map(2, 0);
    let mut matrix_units = BTreeMap::new();
    for i in 0..c.len() {
        for j in 0..c.len() {
            let e = tower.project(&[tower.patch_unit(i).clone(), tower.patch_unit(j).clone()]);
            matrix_units.insert((i, j), e);
        }
    }
    Ok(SweedlerCoring {
        tower,
        coproduct,
        counit,
        matrix_units,
    })
}

impl SweedlerCoring {
    pub fn tower(&self) -> &TensorTower {
        &self.tower
    }

    /// `dim C = dim B ⊗_A B`.
    pub fn dim(&self) -> usize {
        self.tower.dim(2)
    }

    /// `C -> C ⊗_B C`, the latter in `B^{⊗_A 3}` coordinates.
    pub fn coproduct(&self) -> &Matrix {
        &self.coproduct
    }

    /// `C -> B`.
    pub fn counit(&self) -> &Matrix {
        &self.counit
    }

    /// `e_ij = π_i(1) ⊗ π_j(1)` in `C` coordinates.
    pub fn matrix_unit(&self, i: usize, j: usize) -> &SparseVec {
        &self.matrix_units[&(i, j)]
    }

    fn apply(m: &Matrix, v: &SparseVec) -> SparseVec {
        let dense = densify(m.field(), m.cols(), v);
        crate::exactla::sparsify(&m.mul_vec(&dense).expect("shapes agree"))
    }

    pub fn check(&self) -> CoringReport {
        let t = &self.tower;
        let n = (self.matrix_units.len() as f64).sqrt() as usize;

        let mut unit_coproduct = true;
        let mut unit_counit = true;
        for i in 0..n {
            for j in 0..n {
                let lhs = Self::apply(&self.coproduct, self.matrix_unit(i, j));
                // e_ik ⊗_B e_kj = π_i(1) ⊗ π_k(1) π_k(1) ⊗ π_j(1)
                let mut rhs = BTreeMap::new();
                for k in 0..n {
                    let term = t.project(&[
                        t.patch_unit(i).clone(),
                        t.patch_unit(k).clone(),
                        t.patch_unit(j).clone(),
                    ]);
                    add_scaled(&mut rhs, &t.field().one(), &term);
                }
                unit_coproduct &= lhs == rhs.into_iter().collect::<SparseVec>();
                let eps = Self::apply(&self.counit, self.matrix_unit(i, j));
                let expected = if i == j {
                    t.patch_unit(i).clone()
                } else {
                    Vec::new()
                };
                unit_counit &= eps == expected;
            }
        }

        let second = t.insertion_map(3, 1).mul(&self.coproduct).expect("shapes");
        let first = t.insertion_map(3, 2).mul(&self.coproduct).expect("shapes");
        let id = Matrix::identity(t.field(), self.dim());
        let left = t
            .multiplication_map(3, 0)
            .mul(&self.coproduct)
            .expect("shapes");
        let right = t
            .multiplication_map(3, 1)
            .mul(&self.coproduct)
            .expect("shapes");
        CoringReport {
            matrix_unit_coproduct: unit_coproduct,
            matrix_unit_counit: unit_counit,
            coassociative: first == second,
            left_counit: left == id,
            right_counit: right == id,
        }
    }
}
