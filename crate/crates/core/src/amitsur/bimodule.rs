use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::Algebra;
use crate::covering::Covering;
use crate::error::{Error, Result};
use crate::exactla::{add_scaled, sparsify, Echelon, Field, Matrix, QuotientProjection, SparseVec};

/// How a bimodule's coordinate space came about.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Explicit,
    /// `B = ⊕ A/I_i` for a covering with this many ideals.
    Extension {
        patches: usize,
    },
    /// `left ⊗_A right` on the complement coordinates of the balancing relations.
    Tensor(Box<Provenance>, Box<Provenance>),
}

/// A finite-dimensional `A`-bimodule given by the action matrices of the
/// basis elements of `A`.
#[derive(Clone, Debug)]
pub struct Bimodule {
    algebra: Arc<Algebra>,
    dim: usize,
    left: Vec<Matrix>,
    right: Vec<Matrix>,
    provenance: Provenance,
}

impl Bimodule {
    /// Checks unitality, associativity of both actions and that they commute,
    /// on all pairs of basis elements.
    pub fn new(
        algebra: Arc<Algebra>,
        dim: usize,
        left: Vec<Matrix>,
        right: Vec<Matrix>,
        provenance: Provenance,
    ) -> Result<Self> {
        let m = Bimodule {
            algebra,
            dim,
            left,
            right,
            provenance,
        };
        m.validate()?;
        Ok(m)
    }

    /// `B = ⊕ A_i`, with `a` acting on the block `A_i` by multiplication with
    /// `π_i(a)` on either side.
    pub fn extension(c: &Covering) -> Self {
        let a = c.algebra();
        let b = c.extension_ring();
        let pi = c.pi();
        let (left, right) = (0..a.dim())
            .map(|g| {
                let image = pi.column(g);
                (b.left_mul_matrix(&image), b.right_mul_matrix(&image))
            })
            .unzip();
        Bimodule {
            algebra: a.clone(),
            dim: b.dim(),
            left,
            right,
            provenance: Provenance::Extension { patches: c.len() },
        }
    }

    pub fn zero(algebra: Arc<Algebra>) -> Self {
        let field = algebra.field();
        let empty = vec![Matrix::zeros(field, 0, 0); algebra.dim()];
        Bimodule {
            algebra,
            dim: 0,
            left: empty.clone(),
            right: empty,
            provenance: Provenance::Explicit,
        }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Action of the basis element `a` on the left.
    pub fn left_action(&self, a: usize) -> &Matrix {
        &self.left[a]
    }

    pub fn right_action(&self, a: usize) -> &Matrix {
        &self.right[a]
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    fn combination(
        &self,
        actions: &[Matrix],
        coeffs: &[(usize, crate::exactla::Scalar)],
    ) -> Result<Matrix> {
        let mut acc = Matrix::zeros(self.field(), self.dim, self.dim);
        for (k, c) in coeffs {
            acc.add_block(0, 0, c, &actions[*k]);
        }
        Ok(acc)
    }

    pub fn validate(&self) -> Result<()> {
        let a = &self.algebra;
        let n = a.dim();
        let shape = (self.dim, self.dim);
        if self.left.len() != n || self.right.len() != n {
            return Err(Error::ShapeMismatch {
                op: "bimodule actions",
                left: (n, n),
                right: (self.left.len(), self.right.len()),
            });
        }
        if let Some(bad) = self
            .left
            .iter()
            .chain(&self.right)
            .find(|m| m.shape() != shape)
        {
            return Err(Error::ShapeMismatch {
                op: "bimodule action",
                left: shape,
                right: bad.shape(),
            });
        }
        let id = Matrix::identity(self.field(), self.dim);
        let unit = sparsify(a.unit());
        if self.combination(&self.left, &unit)? != id {
            return Err(Error::BimoduleAxiom {
                law: "left unit",
                a: 0,
                b: 0,
            });
        }
        if self.combination(&self.right, &unit)? != id {
            return Err(Error::BimoduleAxiom {
                law: "right unit",
                a: 0,
                b: 0,
            });
        }
        for x in 0..n {
            for y in 0..n {
                let xy = a.product_of_basis(x, y);
                // (xy)·m = x·(y·m)
                if self.left[x].mul(&self.left[y])? != self.combination(&self.left, xy)? {
                    return Err(Error::BimoduleAxiom {
                        law: "left associativity",
                        a: x,
                        b: y,
                    });
                }
                // m·(xy) = (m·x)·y
                if self.right[y].mul(&self.right[x])? != self.combination(&self.right, xy)? {
                    return Err(Error::BimoduleAxiom {
                        law: "right associativity",
                        a: x,
                        b: y,
                    });
                }
                if self.left[x].mul(&self.right[y])? != self.right[y].mul(&self.left[x])? {
                    return Err(Error::BimoduleAxiom {
                        law: "actions commute",
                        a: x,
                        b: y,
                    });
                }
            }
        }
        Ok(())
    }
}

/// `m ⊗_A n` with its projection from `m ⊗_k n`, whose basis vector
/// `e_x ⊗ e_y` has index `x * n.dim() + y`.
pub(crate) fn balanced_tensor(
    m: &Bimodule,
    n: &Bimodule,
) -> Result<(Bimodule, QuotientProjection)> {
    if !(Arc::ptr_eq(&m.algebra, &n.algebra) || m.algebra == n.algebra) {
        return Err(Error::AlgebraMismatch);
    }
    let field = m.field();
    let (dm, dn) = (m.dim, n.dim);
    let ambient = dm * dn;
    let adim = m.algebra.dim();
    let one = field.one();

    let right_cols: Vec<Vec<SparseVec>> = (0..adim)
        .map(|a| (0..dm).map(|x| m.right[a].sparse_column(x)).collect())
        .collect();
    let left_cols: Vec<Vec<SparseVec>> = (0..adim)
        .map(|a| (0..dn).map(|y| n.left[a].sparse_column(y)).collect())
        .collect();

    // (x·a) ⊗ y - x ⊗ (a·y)
    let mut ech = Echelon::new(field, ambient);
    for (xa, ay) in right_cols.iter().zip(&left_cols) {
        for (x, x_times_a) in xa.iter().enumerate() {
            for (y, a_times_y) in ay.iter().enumerate() {
                let mut acc = BTreeMap::new();
                for (p, c) in x_times_a {
                    add_scaled(&mut acc, c, &[(p * dn + y, one.clone())]);
                }
                for (q, c) in a_times_y {
                    add_scaled(&mut acc, &-c, &[(x * dn + q, one.clone())]);
                }
                if !acc.is_empty() {
                    ech.insert(acc.into_iter().collect());
                }
            }
        }
    }
    let proj = QuotientProjection::from_rref_rows(field, ambient, &ech.into_rref());
    let dim = proj.dim();

    let mut left = Vec::with_capacity(adim);
    let mut right = Vec::with_capacity(adim);
    for a in 0..adim {
        let mut lcols = Vec::with_capacity(dim);
        let mut rcols = Vec::with_capacity(dim);
        for &j in proj.complement() {
            let (x, y) = (j / dn, j % dn);
            let lv: SparseVec = m.left[a]
                .sparse_column(x)
                .into_iter()
                .map(|(p, c)| (p * dn + y, c))
                .collect();
            let rv: SparseVec = n.right[a]
                .sparse_column(y)
                .into_iter()
                .map(|(q, c)| (x * dn + q, c))
                .collect();
            lcols.push(proj.apply_sparse(&lv));
            rcols.push(proj.apply_sparse(&rv));
        }
        left.push(Matrix::from_sparse_columns(field, dim, &lcols));
        right.push(Matrix::from_sparse_columns(field, dim, &rcols));
    }
    let module = Bimodule {
        algebra: m.algebra.clone(),
        dim,
        left,
        right,
        provenance: Provenance::Tensor(
            Box::new(m.provenance.clone()),
            Box::new(n.provenance.clone()),
        ),
    };
    Ok((module, proj))
}

/// Balanced tensor product `m ⊗_A n` and the matrix of the quotient map
/// `m ⊗_k n -> m ⊗_A n`.
pub fn tensor_over_a(m: &Bimodule, n: &Bimodule) -> Result<(Bimodule, Matrix)> {
    let (module, proj) = balanced_tensor(m, n)?;
    Ok((module, proj.matrix()))
}
