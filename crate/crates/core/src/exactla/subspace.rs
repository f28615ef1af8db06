use std::collections::BTreeMap;

use super::echelon::{add_scaled, Echelon, SparseVec};
use super::matrix::Matrix;
use super::scalar::{Field, Scalar};
use crate::error::{Error, Result};

/// A linear subspace of `k^ambient_dim`, represented by the nonzero rows of
/// its reduced row-echelon basis. Two subspaces are equal exactly when these
/// bases are identical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn zero(field: Field, ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::zeros(field, 0, ambient_dim),
        }
    }

    pub fn full(field: Field, ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(field, ambient_dim),
        }
    }

    /// Span of the rows of `m`.
    pub fn from_rows(m: &Matrix) -> Self {
        let rows = m.rref_rows();
        Self::from_rref_rows(m.field(), m.cols(), &rows)
    }

    pub(crate) fn from_rref_rows(field: Field, ambient_dim: usize, rows: &[SparseVec]) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::from_sparse_rows(field, ambient_dim, rows),
        }
    }

    /// Span of the given coordinate vectors.
    pub fn span(field: Field, ambient_dim: usize, vectors: &[Vec<Scalar>]) -> Result<Self> {
        let m = Matrix::from_rows(field, ambient_dim, vectors.to_vec())?;
        Ok(Self::from_rows(&m))
    }

    pub(crate) fn span_sparse(
        field: Field,
        ambient_dim: usize,
        vectors: impl IntoIterator<Item = SparseVec>,
    ) -> Self {
        let mut ech = Echelon::new(field, ambient_dim);
        for v in vectors {
            ech.insert(v);
        }
        Self::from_rref_rows(field, ambient_dim, &ech.into_rref())
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    /// RREF basis, one vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim())
            .map(|i| self.basis.row(i).to_vec())
            .collect()
    }

    pub(crate) fn sparse_basis(&self) -> Vec<SparseVec> {
        (0..self.dim()).map(|i| self.basis.sparse_row(i)).collect()
    }

    /// Pivot column of each basis row.
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.dim())
            .map(|i| {
                self.basis
                    .row(i)
                    .iter()
                    .position(|v| !v.is_zero())
                    .expect("basis rows are nonzero")
            })
            .collect()
    }

    fn echelon(&self) -> Echelon {
        let mut ech = Echelon::new(self.field(), self.ambient_dim);
        for row in self.sparse_basis() {
            ech.insert(row);
        }
        ech
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient_dim, "vector length");
        let row = v
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(j, x)| (j, x.clone()))
            .collect();
        self.echelon().contains(row)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim && {
            let ech = other.echelon();
            self.sparse_basis().into_iter().all(|r| ech.contains(r))
        }
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch {
                left: self.field(),
                right: other.field(),
            });
        }
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::AmbientMismatch {
                left: self.ambient_dim,
                right: other.ambient_dim,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        Ok(Self::span_sparse(
            self.field(),
            self.ambient_dim,
            self.sparse_basis().into_iter().chain(other.sparse_basis()),
        ))
    }

    /// Intersection by the Zassenhaus algorithm: reduce the rows `[u | u]`
    /// and `[v | 0]`; rows whose left half vanishes carry the intersection.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let n = self.ambient_dim;
        let mut ech = Echelon::new(self.field(), 2 * n);
        for u in self.sparse_basis() {
            let doubled = u
                .iter()
                .cloned()
                .chain(u.iter().map(|(j, x)| (j + n, x.clone())))
                .collect();
            ech.insert(doubled);
        }
        for v in other.sparse_basis() {
            ech.insert(v);
        }
        let rows: Vec<SparseVec> = ech
            .into_rref()
            .into_iter()
            .filter(|r| r.first().is_some_and(|(j, _)| *j >= n))
            .map(|r| r.into_iter().map(|(j, x)| (j - n, x)).collect())
            .collect();
        Ok(Self::span_sparse(self.field(), n, rows))
    }

    /// Deterministic projection onto `k^ambient / self`.
    pub fn quotient_projection(&self) -> QuotientProjection {
        QuotientProjection::new(self)
    }
}

/// The canonical surjection `k^n -> k^n / W`.
///
/// Coordinates of the quotient are the non-pivot columns of `W`'s RREF, in
/// increasing order. A pivot coordinate `p` is sent to `-(row_p restricted to
/// the non-pivot columns)`, so the kernel is exactly `W` and the section
/// "embed the non-pivot coordinates" is a right inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientProjection {
    field: Field,
    ambient_dim: usize,
    complement: Vec<usize>,
    /// image of each ambient basis vector, in quotient coordinates
    columns: Vec<SparseVec>,
}

impl QuotientProjection {
    fn new(w: &Subspace) -> Self {
        Self::from_rref_rows(w.field(), w.ambient_dim, &w.sparse_basis())
    }

    /// Same construction straight from sparse RREF rows.
    pub(crate) fn from_rref_rows(field: Field, n: usize, rows: &[SparseVec]) -> Self {
        let pivots: Vec<usize> = rows.iter().map(|r| r[0].0).collect();
        let mut is_pivot = vec![false; n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let complement: Vec<usize> = (0..n).filter(|&j| !is_pivot[j]).collect();
        let mut position = vec![usize::MAX; n];
        for (q, &j) in complement.iter().enumerate() {
            position[j] = q;
        }
        let mut columns: Vec<SparseVec> = (0..n)
            .map(|j| {
                if is_pivot[j] {
                    Vec::new()
                } else {
                    vec![(position[j], field.one())]
                }
            })
            .collect();
        for (row, &p) in rows.iter().zip(&pivots) {
            columns[p] = row
                .iter()
                .filter(|(j, _)| !is_pivot[*j])
                .map(|(j, x)| (position[*j], -x))
                .collect();
        }
        QuotientProjection {
            field,
            ambient_dim: n,
            complement,
            columns,
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        Subspace::zero(field, n).quotient_projection()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Dimension of the quotient.
    pub fn dim(&self) -> usize {
        self.complement.len()
    }

    /// Ambient coordinates chosen as the quotient basis.
    pub fn complement(&self) -> &[usize] {
        &self.complement
    }

    pub(crate) fn column(&self, j: usize) -> &SparseVec {
        &self.columns[j]
    }

    /// Applies the projection to a sparse ambient vector.
    pub(crate) fn apply_sparse(&self, v: &[(usize, Scalar)]) -> SparseVec {
        let mut acc = BTreeMap::new();
        for (j, x) in v {
            add_scaled(&mut acc, x, &self.columns[*j]);
        }
        acc.into_iter().collect()
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        let sparse: SparseVec = v
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(j, x)| (j, x.clone()))
            .collect();
        densify(self.field, self.dim(), &self.apply_sparse(&sparse))
    }

    /// `dim x ambient_dim` matrix of the projection.
    pub fn matrix(&self) -> Matrix {
        Matrix::from_sparse_columns(self.field, self.dim(), &self.columns)
    }

    /// `ambient_dim x dim` matrix embedding the complement coordinates.
    pub fn section(&self) -> Matrix {
        let mut s = Matrix::zeros(self.field, self.ambient_dim, self.dim());
        for (q, &j) in self.complement.iter().enumerate() {
            s.set(j, q, self.field.one());
        }
        s
    }
}

pub(crate) fn densify(field: Field, n: usize, v: &[(usize, Scalar)]) -> Vec<Scalar> {
    let mut out = vec![field.zero(); n];
    for (j, x) in v {
        out[*j] = x.clone();
    }
    out
}

pub(crate) fn sparsify(v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(j, x)| (j, x.clone()))
        .collect()
}

/// `ker m` as a subspace of the domain `k^cols`.
pub fn kernel_basis(m: &Matrix) -> Subspace {
    let field = m.field();
    let n = m.cols();
    let rref = m.rref_rows();
    let pivots: Vec<usize> = rref.iter().map(|r| r[0].0).collect();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let vectors = (0..n).filter(|&f| !is_pivot[f]).map(|f| {
        let mut v: SparseVec = rref
            .iter()
            .filter_map(|row| {
                row.iter()
                    .find(|(j, _)| *j == f)
                    .map(|(_, x)| (row[0].0, -x))
            })
            .collect();
        v.push((f, field.one()));
        v.sort_by_key(|(j, _)| *j);
        v
    });
    Subspace::span_sparse(field, n, vectors)
}

/// Column space of `m` as a subspace of the codomain `k^rows`.
pub fn image_basis(m: &Matrix) -> Subspace {
    let field = m.field();
    Subspace::span_sparse(field, m.rows(), (0..m.cols()).map(|j| m.sparse_column(j)))
}

pub fn subspace_sum(u: &Subspace, v: &Subspace) -> Result<Subspace> {
    u.sum(v)
}

pub fn subspace_intersect(u: &Subspace, v: &Subspace) -> Result<Subspace> {
    u.intersect(v)
}

/// Matrix of the canonical projection `k^ambient_dim -> k^ambient_dim / w`.
pub fn quotient_map(ambient_dim: usize, w: &Subspace) -> Result<Matrix> {
    if w.ambient_dim() != ambient_dim {
        return Err(Error::AmbientMismatch {
            left: ambient_dim,
            right: w.ambient_dim(),
        });
    }
    Ok(w.quotient_projection().matrix())
}

/// `dim ker(d_out) - rank(d_in)` after checking `d_out * d_in = 0`.
pub fn homology_dim(d_in: &Matrix, d_out: &Matrix) -> Result<usize> {
    let comp = d_out.mul(d_in)?;
    if !comp.is_zero() {
        return Err(Error::NonzeroComposition);
    }
    Ok(d_out.cols() - d_out.rank() - d_in.rank())
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn e(n: usize, i: usize) -> Vec<Scalar> {
        (0..n).map(|j| Q.from_i64((i == j) as i64)).collect()
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_basis(&Matrix::zeros(Q, 3, 3)).dim(), 3);
        assert_eq!(kernel_basis(&Matrix::identity(Q, 3)).dim(), 0);
        let k = kernel_basis(&Matrix::from_i64(Q, &[&[1, -1]]));
        assert_eq!(k, Subspace::span(Q, 2, &[vec![Q.one(), Q.one()]]).unwrap());
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = Matrix::from_i64(Q, &[&[1, 2, 3, 4], &[2, 4, 7, 9], &[0, 0, 1, 1]]);
        let k = kernel_basis(&m);
        assert_eq!(k.dim(), 4 - m.rank());
        for v in k.basis_vectors() {
            assert!(m.mul_vec(&v).unwrap().iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn sum_and_intersection_examples() {
        let s1 = Subspace::span(Q, 2, &[e(2, 0)]).unwrap();
        let s2 = Subspace::span(Q, 2, &[e(2, 1)]).unwrap();
        assert_eq!(s1.intersect(&s2).unwrap().dim(), 0);
        let diag = Subspace::span(Q, 2, &[vec![Q.one(), Q.one()]]).unwrap();
        assert_eq!(s1.sum(&diag).unwrap(), Subspace::full(Q, 2));

        let u = Subspace::span(Q, 3, &[e(3, 0), e(3, 1)]).unwrap();
        let v = Subspace::span(Q, 3, &[e(3, 1), e(3, 2)]).unwrap();
        assert_eq!(
            u.intersect(&v).unwrap(),
            Subspace::span(Q, 3, &[e(3, 1)]).unwrap()
        );
    }

    #[test]
    fn ambient_mismatch_is_reported() {
        let a = Subspace::zero(Q, 2);
        let b = Subspace::zero(Q, 3);
        assert_eq!(a.sum(&b), Err(Error::AmbientMismatch { left: 2, right: 3 }));
        assert!(quotient_map(3, &a).is_err());
    }

    #[test]
    fn quotient_map_examples() {
        assert_eq!(
            quotient_map(2, &Subspace::zero(Q, 2)).unwrap(),
            Matrix::identity(Q, 2)
        );
        assert_eq!(
            quotient_map(2, &Subspace::full(Q, 2)).unwrap().shape(),
            (0, 2)
        );
        // span{(1,1)}: pivot column 0, the surviving coordinate is column 1
        let w = Subspace::span(Q, 2, &[vec![Q.one(), Q.one()]]).unwrap();
        let q = quotient_map(2, &w).unwrap();
        assert_eq!(q, Matrix::from_i64(Q, &[&[-1, 1]]));
        assert_eq!(kernel_basis(&q), w);
    }

    #[test]
    fn homology_dim_examples() {
        let n = 3;
        assert_eq!(
            homology_dim(&Matrix::zeros(Q, n, n), &Matrix::zeros(Q, n, n)).unwrap(),
            n
        );
        assert_eq!(
            homology_dim(&Matrix::identity(Q, n), &Matrix::zeros(Q, n, n)).unwrap(),
            0
        );
        let d_in = Matrix::from_i64(Q, &[&[1], &[1]]);
        let d_out = Matrix::from_i64(Q, &[&[1, -1]]);
        assert_eq!(homology_dim(&d_in, &d_out).unwrap(), 0);
        let bad = Matrix::from_i64(Q, &[&[1, 1]]);
        assert_eq!(homology_dim(&d_in, &bad), Err(Error::NonzeroComposition));
    }
}
