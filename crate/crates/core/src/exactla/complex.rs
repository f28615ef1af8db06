use super::matrix::Matrix;
use super::scalar::Field;
use crate::error::{Error, Result};

/// A finite cochain complex `C^0 -> C^1 -> ... -> C^m` of coordinate spaces.
///
/// `differentials[n]` maps `C^n -> C^{n+1}`. Degrees without a stored
/// outgoing (or incoming) differential are treated as mapping to (from) zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CochainComplex {
    field: Field,
    dims: Vec<usize>,
    differentials: Vec<Matrix>,
}

impl CochainComplex {
    /// Validates shapes and `d_{n+1} d_n = 0`.
    pub fn new(field: Field, dims: Vec<usize>, differentials: Vec<Matrix>) -> Result<Self> {
        if differentials.len() + 1 != dims.len().max(1) {
            return Err(Error::ShapeMismatch {
                op: "complex",
                left: (dims.len(), 0),
                right: (differentials.len(), 0),
            });
        }
        for (n, d) in differentials.iter().enumerate() {
            if d.field() != field {
                return Err(Error::FieldMismatch {
                    left: field,
                    right: d.field(),
                });
            }
            if d.shape() != (dims[n + 1], dims[n]) {
                return Err(Error::ShapeMismatch {
                    op: "complex",
                    left: (dims[n + 1], dims[n]),
                    right: d.shape(),
                });
            }
        }
        let cx = CochainComplex {
            field,
            dims,
            differentials,
        };
        cx.check_squares()?;
        Ok(cx)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn differentials(&self) -> &[Matrix] {
        &self.differentials
    }

    /// Reports the first degree `n` with `d_{n+1} d_n != 0`.
    pub fn check_squares(&self) -> Result<()> {
        for (n, pair) in self.differentials.windows(2).enumerate() {
            if !pair[1].mul(&pair[0])?.is_zero() {
                return Err(Error::NotAComplex { degree: n });
            }
        }
        Ok(())
    }

    fn rank_of(&self, n: usize) -> usize {
        self.differentials.get(n).map_or(0, Matrix::rank)
    }

    /// `dim ker d_n - rank d_{n-1}`.
    pub fn homology_at(&self, n: usize) -> usize {
        let incoming = if n == 0 { 0 } else { self.rank_of(n - 1) };
        self.dims[n] - self.rank_of(n) - incoming
    }

    /// Homology in every degree; the top degree counts as mapping to zero.
    pub fn homology(&self) -> Vec<usize> {
        let ranks: Vec<usize> = (0..self.differentials.len())
            .map(|n| self.rank_of(n))
            .collect();
        (0..self.dims.len())
            .map(|n| {
                let out = ranks.get(n).copied().unwrap_or(0);
                let inc = if n == 0 { 0 } else { ranks[n - 1] };
                self.dims[n] - out - inc
            })
            .collect()
    }
}
