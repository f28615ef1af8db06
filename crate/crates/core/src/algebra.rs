//! Finite-dimensional unital associative algebras given by structure
//! constants, together with two-sided ideals, quotients and homomorphisms.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactla::{add_scaled, densify, sparsify, Field, Matrix, Scalar, SparseVec, Subspace};

/// An algebra with basis `b_0, ..., b_{dim-1}` and products
/// `b_i b_j = Σ_k c[i][j][k] b_k`.
#[derive(Clone)]
pub struct Algebra {
    field: Field,
    dim: usize,
    /// `products[i * dim + j]` = sparse coordinates of `b_i b_j`
    products: Vec<SparseVec>,
    unit: Vec<Scalar>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.dim == other.dim
            && self.products == other.products
            && self.unit == other.unit
    }
}

impl Eq for Algebra {}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("field", &self.field)
            .field("dim", &self.dim)
            .field("labels", &self.labels)
            .finish_non_exhaustive()
    }
}

/// Validates a structure-constant table given as sparse triples
/// `(i, j, k, c)` meaning `c[i][j][k] = c`; repeated triples add up.
pub fn make_algebra(
    field: Field,
    dim: usize,
    triples: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    unit: Vec<Scalar>,
) -> Result<Algebra> {
    let mut table: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); dim * dim];
    for (i, j, k, c) in triples {
        for (what, index) in [("i", i), ("j", j), ("k", k)] {
            if index >= dim {
                return Err(Error::IndexOutOfRange { what, index, dim });
            }
        }
        if c.field() != field {
            return Err(Error::FieldMismatch {
                left: field,
                right: c.field(),
            });
        }
        add_scaled(&mut table[i * dim + j], &c, &[(k, field.one())]);
    }
    let products = table.into_iter().map(|m| m.into_iter().collect()).collect();
    Algebra::new(field, dim, products, unit)
}

impl Algebra {
    /// Checked constructor: associativity on all basis triples and both unit
    /// laws on all basis elements.
    pub fn new(
        field: Field,
        dim: usize,
        products: Vec<SparseVec>,
        unit: Vec<Scalar>,
    ) -> Result<Self> {
        let a = Self::new_unchecked(field, dim, products, unit)?;
        a.check_axioms()?;
        Ok(a)
    }

    /// Shape checks only; used for constructions that are associative and
    /// unital by design (quotients, products).
    pub(crate) fn new_unchecked(
        field: Field,
        dim: usize,
        products: Vec<SparseVec>,
        unit: Vec<Scalar>,
    ) -> Result<Self> {
        if products.len() != dim * dim {
            return Err(Error::ShapeMismatch {
                op: "structure constants",
                left: (dim, dim),
                right: (products.len(), 1),
            });
        }
        if unit.len() != dim {
            return Err(Error::ShapeMismatch {
                op: "unit",
                left: (dim, 1),
                right: (unit.len(), 1),
            });
        }
        if let Some(bad) = unit.iter().find(|v| v.field() != field) {
            return Err(Error::FieldMismatch {
                left: field,
                right: bad.field(),
            });
        }
        Ok(Algebra {
            field,
            dim,
            products,
            unit,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim, "one label per basis element");
        self.labels = Some(labels);
        self
    }

    fn check_axioms(&self) -> Result<()> {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = &self.products[i * self.dim + j];
                for k in 0..self.dim {
                    let left = self.mul_sparse_basis(ij, k);
                    let jk = &self.products[j * self.dim + k];
                    let right = self.mul_basis_sparse(i, jk);
                    if left != right {
                        return Err(Error::NonAssociative { i, j, k });
                    }
                }
            }
        }
        let unit = sparsify(&self.unit);
        for i in 0..self.dim {
            let expected = vec![(i, self.field.one())];
            if self.mul_sparse_basis(&unit, i) != expected {
                return Err(Error::UnitLaw {
                    side: "left",
                    index: i,
                });
            }
            if self.mul_basis_sparse(i, &unit) != expected {
                return Err(Error::UnitLaw {
                    side: "right",
                    index: i,
                });
            }
        }
        Ok(())
    }

    fn mul_sparse_basis(&self, x: &[(usize, Scalar)], k: usize) -> SparseVec {
        let mut acc = BTreeMap::new();
        for (m, c) in x {
            add_scaled(&mut acc, c, &self.products[m * self.dim + k]);
        }
        acc.into_iter().collect()
    }

    fn mul_basis_sparse(&self, i: usize, y: &[(usize, Scalar)]) -> SparseVec {
        let mut acc = BTreeMap::new();
        for (m, c) in y {
            add_scaled(&mut acc, c, &self.products[i * self.dim + m]);
        }
        acc.into_iter().collect()
    }

    pub(crate) fn mul_sparse(&self, x: &[(usize, Scalar)], y: &[(usize, Scalar)]) -> SparseVec {
        let mut acc = BTreeMap::new();
        for (i, a) in x {
            for (j, b) in y {
                add_scaled(&mut acc, &(a * b), &self.products[i * self.dim + j]);
            }
        }
        acc.into_iter().collect()
    }

    /// The zero ring (dimension 0, where `1 = 0`).
    pub fn zero(field: Field) -> Self {
        Self::new_unchecked(field, 0, Vec::new(), Vec::new()).expect("zero algebra")
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground(field: Field) -> Self {
        Self::split(field, 1)
    }

    /// `k^n` with orthogonal idempotents `e_i e_j = δ_ij e_i`.
    pub fn split(field: Field, n: usize) -> Self {
        let products = (0..n * n)
            .map(|ij| {
                let (i, j) = (ij / n, ij % n);
                if i == j {
                    vec![(i, field.one())]
                } else {
                    Vec::new()
                }
            })
            .collect();
        let labels = (1..=n).map(|i| format!("e{i}")).collect();
        Self::new_unchecked(field, n, products, vec![field.one(); n])
            .expect("split algebra")
            .with_labels(labels)
    }

    /// Full matrix algebra `M_n(k)` on matrix units `e_ab`, basis index `a*n + b`.
    pub fn matrix(field: Field, n: usize) -> Self {
        Self::matrix_units(field, n, |_, _| true, "e")
    }

    /// Upper-triangular `n x n` matrices on the units `e_ab`, `a <= b`.
    pub fn upper_triangular(field: Field, n: usize) -> Self {
        Self::matrix_units(field, n, |a, b| a <= b, "e")
    }

    fn matrix_units(
        field: Field,
        n: usize,
        keep: impl Fn(usize, usize) -> bool,
        prefix: &str,
    ) -> Self {
        let units: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| keep(a, b))
            .collect();
        let index: BTreeMap<(usize, usize), usize> =
            units.iter().enumerate().map(|(i, &u)| (u, i)).collect();
        let dim = units.len();
        let mut products = vec![Vec::new(); dim * dim];
        for (i, &(a, b)) in units.iter().enumerate() {
            for (j, &(c, d)) in units.iter().enumerate() {
                if b == c {
                    products[i * dim + j] = vec![(index[&(a, d)], field.one())];
                }
            }
        }
        let mut unit = vec![field.zero(); dim];
        for a in 0..n {
            unit[index[&(a, a)]] = field.one();
        }
        let labels = units
            .iter()
            .map(|(a, b)| format!("{prefix}{}{}", a + 1, b + 1))
            .collect();
        Self::new_unchecked(field, dim, products, unit)
            .expect("matrix units")
            .with_labels(labels)
    }

    /// Truncated polynomials `k[x]/(x^n)` on the monomial basis.
    pub fn truncated_polynomial(field: Field, n: usize) -> Self {
        let products = (0..n * n)
            .map(|ij| {
                let (i, j) = (ij / n, ij % n);
                if i + j < n {
                    vec![(i + j, field.one())]
                } else {
                    Vec::new()
                }
            })
            .collect();
        let mut unit = vec![field.zero(); n];
        if n > 0 {
            unit[0] = field.one();
        }
        let labels = (0..n).map(|i| format!("x^{i}")).collect();
        Self::new_unchecked(field, n, products, unit)
            .expect("truncated polynomials")
            .with_labels(labels)
    }

    /// Direct product `A_1 × ... × A_m` with block-concatenated bases.
    pub fn direct_product(field: Field, factors: &[&Algebra]) -> Result<Self> {
        if let Some(bad) = factors.iter().find(|a| a.field != field) {
            return Err(Error::FieldMismatch {
                left: field,
                right: bad.field,
            });
        }
        let dim: usize = factors.iter().map(|a| a.dim).sum();
        let mut products = vec![Vec::new(); dim * dim];
        let mut unit = Vec::with_capacity(dim);
        let mut offset = 0;
        let mut labels = Vec::with_capacity(dim);
        for (f, a) in factors.iter().enumerate() {
            for i in 0..a.dim {
                for j in 0..a.dim {
                    products[(offset + i) * dim + offset + j] = a.products[i * a.dim + j]
                        .iter()
                        .map(|(k, c)| (offset + k, c.clone()))
                        .collect();
                }
                labels.push(format!("{}@{}", a.label(i), f + 1));
            }
            unit.extend(a.unit.iter().cloned());
            offset += a.dim;
        }
        Ok(Self::new_unchecked(field, dim, products, unit)?.with_labels(labels))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => format!("b{}", i + 1),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Coordinates of `b_i b_j`.
    pub fn product_of_basis(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.products[i * self.dim + j]
    }

    /// Nonzero structure constants as `(i, j, k, c)`.
    pub fn structure_triples(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for (k, c) in self.product_of_basis(i, j) {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        (0..self.dim)
            .map(|j| self.field.from_i64((i == j) as i64))
            .collect()
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        assert!(x.len() == self.dim && y.len() == self.dim, "element length");
        densify(
            self.field,
            self.dim,
            &self.mul_sparse(&sparsify(x), &sparsify(y)),
        )
    }

    /// Matrix of `y -> x y`.
    pub fn left_mul_matrix(&self, x: &[Scalar]) -> Matrix {
        let xs = sparsify(x);
        let cols: Vec<SparseVec> = (0..self.dim)
            .map(|j| self.mul_sparse(&xs, &[(j, self.field.one())]))
            .collect();
        Matrix::from_sparse_columns(self.field, self.dim, &cols)
    }

    /// Matrix of `y -> y x`.
    pub fn right_mul_matrix(&self, x: &[Scalar]) -> Matrix {
        let xs = sparsify(x);
        let cols: Vec<SparseVec> = (0..self.dim)
            .map(|j| self.mul_sparse(&[(j, self.field.one())], &xs))
            .collect();
        Matrix::from_sparse_columns(self.field, self.dim, &cols)
    }
}

/// A two-sided ideal of a particular algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    algebra: Arc<Algebra>,
    space: Subspace,
}

impl Ideal {
    /// Checks that `space` is closed under multiplication by basis elements on
    /// both sides.
    pub fn new(algebra: Arc<Algebra>, space: Subspace) -> Result<Self> {
        if space.ambient_dim() != algebra.dim {
            return Err(Error::AmbientMismatch {
                left: algebra.dim,
                right: space.ambient_dim(),
            });
        }
        if space.field() != algebra.field {
            return Err(Error::FieldMismatch {
                left: algebra.field,
                right: space.field(),
            });
        }
        for v in space.basis_vectors() {
            let vs = sparsify(&v);
            for g in 0..algebra.dim {
                let e = [(g, algebra.field.one())];
                if !space.contains(&densify(
                    algebra.field,
                    algebra.dim,
                    &algebra.mul_sparse(&e, &vs),
                )) {
                    return Err(Error::NotAnIdeal {
                        side: "left",
                        generator: g,
                    });
                }
                if !space.contains(&densify(
                    algebra.field,
                    algebra.dim,
                    &algebra.mul_sparse(&vs, &e),
                )) {
                    return Err(Error::NotAnIdeal {
                        side: "right",
                        generator: g,
                    });
                }
            }
        }
        Ok(Ideal { algebra, space })
    }

    pub fn zero(algebra: Arc<Algebra>) -> Self {
        let space = Subspace::zero(algebra.field, algebra.dim);
        Ideal { algebra, space }
    }

    pub fn whole(algebra: Arc<Algebra>) -> Self {
        let space = Subspace::full(algebra.field, algebra.dim);
        Ideal { algebra, space }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    fn same_algebra(&self, other: &Ideal) -> Result<()> {
        if Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra == other.algebra {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn is_contained_in(&self, other: &Ideal) -> bool {
        self.space.is_subspace_of(&other.space)
    }
}

/// Smallest two-sided ideal containing `gens`: the span is enlarged by
/// `A·span + span·A` until its dimension stops growing.
pub fn ideal_closure(a: &Arc<Algebra>, gens: &[Vec<Scalar>]) -> Result<Ideal> {
    if let Some(g) = gens.iter().find(|g| g.len() != a.dim) {
        return Err(Error::AmbientMismatch {
            left: a.dim,
            right: g.len(),
        });
    }
    let mut space = Subspace::span(a.field, a.dim, gens)?;
    loop {
        let basis: Vec<SparseVec> = (0..space.dim())
            .map(|i| sparsify(space.basis().row(i)))
            .collect();
        let mut vectors: Vec<Vec<Scalar>> = space.basis_vectors();
        for v in &basis {
            for g in 0..a.dim {
                let e = [(g, a.field.one())];
                vectors.push(densify(a.field, a.dim, &a.mul_sparse(&e, v)));
                vectors.push(densify(a.field, a.dim, &a.mul_sparse(v, &e)));
            }
        }
        let next = Subspace::span(a.field, a.dim, &vectors)?;
        if next.dim() == space.dim() {
            return Ok(Ideal {
                algebra: a.clone(),
                space,
            });
        }
        space = next;
    }
}

/// `I_1 + I_2`; a sum of ideals is again an ideal.
pub fn ideal_sum(i1: &Ideal, i2: &Ideal) -> Result<Ideal> {
    i1.same_algebra(i2)?;
    Ok(Ideal {
        algebra: i1.algebra.clone(),
        space: i1.space.sum(&i2.space)?,
    })
}

/// Intersection of all listed ideals. An empty list is rejected because the
/// ambient algebra would be unknown.
pub fn ideal_intersection(ideals: &[Ideal]) -> Result<Subspace> {
    let (first, rest) = ideals.split_first().ok_or(Error::EmptyCovering)?;
    let mut acc = first.space.clone();
    for i in rest {
        first.same_algebra(i)?;
        acc = acc.intersect(&i.space)?;
    }
    Ok(acc)
}

/// A unital algebra homomorphism, stored as its matrix on coordinates
/// (`codomain.dim x domain.dim`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraHom {
    domain: Arc<Algebra>,
    codomain: Arc<Algebra>,
    matrix: Matrix,
}

impl AlgebraHom {
    /// Checks shape, unit preservation and multiplicativity on basis pairs.
    pub fn new(domain: Arc<Algebra>, codomain: Arc<Algebra>, matrix: Matrix) -> Result<Self> {
        let f = AlgebraHom {
            domain,
            codomain,
            matrix,
        };
        f.check()?;
        Ok(f)
    }

    pub(crate) fn new_unchecked(
        domain: Arc<Algebra>,
        codomain: Arc<Algebra>,
        matrix: Matrix,
    ) -> Self {
        debug_assert_eq!(matrix.shape(), (codomain.dim, domain.dim));
        AlgebraHom {
            domain,
            codomain,
            matrix,
        }
    }

    pub fn identity(a: Arc<Algebra>) -> Self {
        let m = Matrix::identity(a.field, a.dim);
        AlgebraHom {
            domain: a.clone(),
            codomain: a,
            matrix: m,
        }
    }

    /// Re-verifies the homomorphism axioms, naming a witness pair on failure.
    pub fn check(&self) -> Result<()> {
        let (dom, cod) = (&self.domain, &self.codomain);
        if dom.field != cod.field || self.matrix.field() != dom.field {
            return Err(Error::FieldMismatch {
                left: dom.field,
                right: cod.field,
            });
        }
        if self.matrix.shape() != (cod.dim, dom.dim) {
            return Err(Error::ShapeMismatch {
                op: "homomorphism",
                left: (cod.dim, dom.dim),
                right: self.matrix.shape(),
            });
        }
        if self.matrix.mul_vec(&dom.unit)? != cod.unit {
            return Err(Error::NotUnital);
        }
        let images: Vec<SparseVec> = (0..dom.dim).map(|j| self.matrix.sparse_column(j)).collect();
        for i in 0..dom.dim {
            for j in 0..dom.dim {
                let lhs = self.apply_sparse(dom.product_of_basis(i, j));
                let rhs = cod.mul_sparse(&images[i], &images[j]);
                if lhs != rhs {
                    return Err(Error::NotMultiplicative { i, j });
                }
            }
        }
        Ok(())
    }

    pub fn domain(&self) -> &Arc<Algebra> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<Algebra> {
        &self.codomain
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.matrix.mul_vec(x).expect("element of the domain")
    }

    pub(crate) fn apply_sparse(&self, x: &[(usize, Scalar)]) -> SparseVec {
        let mut acc = BTreeMap::new();
        for (j, c) in x {
            add_scaled(&mut acc, c, &self.matrix.sparse_column(*j));
        }
        acc.into_iter().collect()
    }
}

/// `f ∘ g`, re-verified.
pub fn hom_compose(f: &AlgebraHom, g: &AlgebraHom) -> Result<AlgebraHom> {
    if !(Arc::ptr_eq(&g.codomain, &f.domain) || g.codomain == f.domain) {
        return Err(Error::DomainMismatch);
    }
    AlgebraHom::new(
        g.domain.clone(),
        f.codomain.clone(),
        f.matrix.mul(&g.matrix)?,
    )
}

/// Checks the homomorphism axioms of an arbitrary linear map between two
/// algebras.
pub fn hom_check(
    domain: Arc<Algebra>,
    codomain: Arc<Algebra>,
    matrix: Matrix,
) -> Result<AlgebraHom> {
    AlgebraHom::new(domain, codomain, matrix)
}

/// `A/J` on the complement coordinates of `J`, with its projection and the
/// coordinate section `A/J -> A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub algebra: Arc<Algebra>,
    pub projection: AlgebraHom,
    pub section: Matrix,
    pub ideal: Ideal,
}

pub fn quotient(a: &Arc<Algebra>, j: &Ideal) -> Result<Quotient> {
    if !(Arc::ptr_eq(a, &j.algebra) || **a == *j.algebra) {
        return Err(Error::AlgebraMismatch);
    }
    let proj = j.space.quotient_projection();
    let complement = proj.complement();
    let d = complement.len();
    let mut products = Vec::with_capacity(d * d);
    for &x in complement {
        for &y in complement {
            products.push(proj.apply_sparse(a.product_of_basis(x, y)));
        }
    }
    let unit = proj.apply(&a.unit);
    let labels = complement.iter().map(|&x| a.label(x)).collect();
    let qa = Arc::new(Algebra::new_unchecked(a.field, d, products, unit)?.with_labels(labels));
    let projection = AlgebraHom::new_unchecked(a.clone(), qa.clone(), proj.matrix());
    Ok(Quotient {
        algebra: qa,
        projection,
        section: proj.section(),
        ideal: j.clone(),
    })
}

impl Quotient {
    /// The induced projection `A/J1 -> A/J2` for `J1 ⊆ J2`.
    pub fn induced(&self, target: &Quotient) -> Result<AlgebraHom> {
        if !self.ideal.is_contained_in(&target.ideal) {
            return Err(Error::NotContained);
        }
        let m = target.projection.matrix().mul(&self.section)?;
        Ok(AlgebraHom::new_unchecked(
            self.algebra.clone(),
            target.algebra.clone(),
            m,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn arc(a: Algebra) -> Arc<Algebra> {
        Arc::new(a)
    }

    fn m2_plus_k() -> Arc<Algebra> {
        let m2 = Algebra::matrix(Q, 2);
        arc(Algebra::direct_product(Q, &[&m2, &Algebra::ground(Q)]).unwrap())
    }

    #[test]
    fn builtin_algebras_satisfy_axioms() {
        for a in [
            Algebra::split(Q, 3),
            Algebra::matrix(Q, 2),
            Algebra::upper_triangular(Q, 3),
            Algebra::truncated_polynomial(Q, 4),
            (*m2_plus_k()).clone(),
            Algebra::zero(Q),
        ] {
            a.check_axioms().unwrap();
        }
    }

    #[test]
    fn make_algebra_accepts_split_k3() {
        let one = Q.one();
        let triples = (0..3).map(|i| (i, i, i, one.clone()));
        let a = make_algebra(Q, 3, triples, vec![one.clone(); 3]).unwrap();
        assert_eq!(a, Algebra::split(Q, 3));
    }

    #[test]
    fn make_algebra_rejects_non_associative_table() {
        // e1 e1 = e2, e2 e1 = 0, e1 e2 = e1: (e1 e1) e1 = 0 but e1 (e1 e1) = e1.
        let one = Q.one();
        let triples = vec![
            (0, 0, 1, one.clone()),
            (0, 1, 0, one.clone()),
            (2, 0, 0, one.clone()),
            (0, 2, 0, one.clone()),
            (2, 1, 1, one.clone()),
            (1, 2, 1, one.clone()),
            (2, 2, 2, one.clone()),
        ];
        let unit = vec![Q.zero(), Q.zero(), Q.one()];
        assert_eq!(
            make_algebra(Q, 3, triples, unit),
            Err(Error::NonAssociative { i: 0, j: 0, k: 0 })
        );
    }

    #[test]
    fn make_algebra_rejects_wrong_unit_and_bad_index() {
        let unit = vec![Q.one(), Q.zero()];
        let a = make_algebra(Q, 2, vec![(0, 0, 0, Q.one()), (1, 1, 1, Q.one())], unit);
        assert_eq!(
            a,
            Err(Error::UnitLaw {
                side: "left",
                index: 1
            })
        );
        let bad = make_algebra(Q, 1, vec![(0, 1, 0, Q.one())], vec![Q.one()]);
        assert!(matches!(bad, Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn ideal_closure_examples() {
        let k3 = arc(Algebra::split(Q, 3));
        assert_eq!(ideal_closure(&k3, &[vec![Q.zero(); 3]]).unwrap().dim(), 0);
        let e3 = k3.basis_vector(2);
        let i = ideal_closure(&k3, std::slice::from_ref(&e3)).unwrap();
        assert_eq!(i.space(), &Subspace::span(Q, 3, &[e3]).unwrap());

        // upper triangular 2x2: basis e11, e12, e22
        let t2 = arc(Algebra::upper_triangular(Q, 2));
        let i = ideal_closure(&t2, &[t2.basis_vector(0)]).unwrap();
        let expected = Subspace::span(Q, 3, &[t2.basis_vector(0), t2.basis_vector(1)]).unwrap();
        assert_eq!(i.space(), &expected);
        assert_eq!(ideal_closure(&t2, &i.space().basis_vectors()).unwrap(), i);
    }

    #[test]
    fn non_ideal_subspace_is_rejected() {
        let t2 = arc(Algebra::upper_triangular(Q, 2));
        let s = Subspace::span(Q, 3, &[t2.basis_vector(0)]).unwrap();
        assert!(matches!(Ideal::new(t2, s), Err(Error::NotAnIdeal { .. })));
    }

    #[test]
    fn quotient_examples() {
        let k3 = arc(Algebra::split(Q, 3));
        let q0 = quotient(&k3, &Ideal::zero(k3.clone())).unwrap();
        assert_eq!(*q0.algebra, *k3);
        assert_eq!(q0.projection.matrix(), &Matrix::identity(Q, 3));

        let j = ideal_closure(&k3, &[k3.basis_vector(2)]).unwrap();
        let q = quotient(&k3, &j).unwrap();
        assert_eq!(*q.algebra, Algebra::split(Q, 2));
        assert_eq!(
            q.projection.matrix(),
            &Matrix::from_i64(Q, &[&[1, 0, 0], &[0, 1, 0]])
        );
        q.projection.check().unwrap();

        let a = m2_plus_k();
        let gens: Vec<_> = (0..4).map(|i| a.basis_vector(i)).collect();
        let j = ideal_closure(&a, &gens).unwrap();
        let q = quotient(&a, &j).unwrap();
        assert_eq!(q.algebra.dim(), 1);
        assert_eq!(q.algebra.unit(), &[Q.one()]);

        let full = quotient(&a, &Ideal::whole(a.clone())).unwrap();
        assert_eq!(full.algebra.dim(), 0);
        full.projection.check().unwrap();
    }

    #[test]
    fn sums_and_intersections() {
        let k3 = arc(Algebra::split(Q, 3));
        let i3 = ideal_closure(&k3, &[k3.basis_vector(2)]).unwrap();
        let i1 = ideal_closure(&k3, &[k3.basis_vector(0)]).unwrap();
        assert_eq!(ideal_sum(&i3, &Ideal::zero(k3.clone())).unwrap(), i3);
        let s = ideal_sum(&i3, &i1).unwrap();
        assert_eq!(
            s.space(),
            &Subspace::span(Q, 3, &[k3.basis_vector(0), k3.basis_vector(2)]).unwrap()
        );
        assert_eq!(ideal_intersection(&[i3.clone(), i1]).unwrap().dim(), 0);

        let other = arc(Algebra::truncated_polynomial(Q, 3));
        assert_eq!(
            ideal_sum(&i3, &Ideal::zero(other)),
            Err(Error::AlgebraMismatch)
        );
    }

    #[test]
    fn composition_and_witnesses() {
        let k3 = arc(Algebra::split(Q, 3));
        let j = ideal_closure(&k3, &[k3.basis_vector(2)]).unwrap();
        let q = quotient(&k3, &j).unwrap();
        let id = AlgebraHom::identity(q.algebra.clone());
        assert_eq!(hom_compose(&id, &q.projection).unwrap(), q.projection);
        assert_eq!(hom_compose(&q.projection, &id), Err(Error::DomainMismatch));

        // e1 -> e1 + e2, e2 -> 0 is a unital homomorphism k^2 -> k^2.
        let k2 = arc(Algebra::split(Q, 2));
        let ok = Matrix::from_i64(Q, &[&[1, 0], &[1, 0]]);
        assert!(hom_check(k2.clone(), k2.clone(), ok).is_ok());
        // e1 -> 2 e1, e2 -> e2 - e1 is unital, but f(e1)^2 = 4 e1 != f(e1).
        let bad = Matrix::from_i64(Q, &[&[2, -1], &[0, 1]]);
        assert_eq!(
            hom_check(k2.clone(), k2.clone(), bad),
            Err(Error::NotMultiplicative { i: 0, j: 0 })
        );
        let not_unital = Matrix::from_i64(Q, &[&[1, 0], &[0, 0]]);
        assert_eq!(hom_check(k2.clone(), k2, not_unital), Err(Error::NotUnital));
    }

    #[test]
    fn induced_projection_requires_containment() {
        let k3 = arc(Algebra::split(Q, 3));
        let i1 = ideal_closure(&k3, &[k3.basis_vector(0)]).unwrap();
        let i3 = ideal_closure(&k3, &[k3.basis_vector(2)]).unwrap();
        let q1 = quotient(&k3, &i1).unwrap();
        let q13 = quotient(&k3, &ideal_sum(&i1, &i3).unwrap()).unwrap();
        let pi = q1.induced(&q13).unwrap();
        pi.check().unwrap();
        let q3 = quotient(&k3, &i3).unwrap();
        assert_eq!(q13.induced(&q3), Err(Error::NotContained));
    }
}
