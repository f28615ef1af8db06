//! Exact linear algebra over ℚ and 𝔽_p: matrices, canonical subspaces,
//! kernels, images, quotients and homology dimensions.

mod complex;
mod echelon;
mod matrix;
mod scalar;
mod subspace;

pub use complex::CochainComplex;
pub use echelon::SparseVec;
pub(crate) use echelon::{add_scaled, Echelon};
pub use matrix::Matrix;
pub use scalar::{Field, Scalar};
pub(crate) use subspace::{densify, sparsify};
pub use subspace::{
    homology_dim, image_basis, kernel_basis, quotient_map, subspace_intersect, subspace_sum,
    QuotientProjection, Subspace,
};

/// Reduced row-echelon form of `m` together with its rank.
pub fn rref(m: &Matrix) -> (Matrix, usize) {
    m.rref()
}
