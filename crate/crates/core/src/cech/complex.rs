use std::collections::BTreeMap;

use super::functor::PosetFunctor;
use super::tuple::IndexTuple;
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix, Scalar};

/// `S^n = ⊕_{|ζ| = n} 𝓡(ζ)` for one degree, with the block layout.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CechDegree {
    pub tuples: Vec<IndexTuple>,
    /// `ζ -> (offset, dim 𝓡(ζ))`
    pub blocks: BTreeMap<IndexTuple, (usize, usize)>,
    pub dim: usize,
}

impl CechDegree {
    pub fn offset(&self, zeta: &IndexTuple) -> usize {
        self.blocks[zeta].0
    }
}

/// The complex `S^0 -> S^1 -> ... -> S^N` of a poset functor.
#[derive(Clone, Debug)]
pub struct CechComplex {
    field: Field,
    n: usize,
    degrees: Vec<CechDegree>,
    differentials: Vec<Matrix>,
}

/// `(d'x)_η = Σ (-1)^pos r^ζ_η(x_ζ)` over `η = ζ ∪ {i}`, `pos` the 0-based
/// position of `i` in `η`.
pub fn build_cech(f: &PosetFunctor) -> Result<CechComplex> {
    let field = f.field();
    let n = f.n();
    let degrees: Vec<CechDegree> = (0..=n)
        .map(|len| {
            let tuples = IndexTuple::of_length(n, len);
            let mut blocks = BTreeMap::new();
            let mut dim = 0;
            for t in &tuples {
                let d = f.ring(t).dim();
                blocks.insert(t.clone(), (dim, d));
                dim += d;
            }
            CechDegree {
                tuples,
                blocks,
                dim,
            }
        })
        .collect();
    let one = field.one();
    let minus = -&one;
    let mut differentials = Vec::with_capacity(n);
    for len in 0..n {
        let (src, dst) = (&degrees[len], &degrees[len + 1]);
        let mut d = Matrix::zeros(field, dst.dim, src.dim);
        for zeta in &src.tuples {
            for i in 0..n {
                let Some((eta, pos)) = zeta.insert(i) else {
                    continue;
                };
                let r = f.restriction(zeta, &eta).expect("validated functor");
                let sign = if pos % 2 == 0 { &one } else { &minus };
                d.add_block(dst.offset(&eta), src.offset(zeta), sign, r.matrix());
            }
        }
        differentials.push(d);
    }
    for (k, pair) in differentials.windows(2).enumerate() {
        if !pair[1].mul(&pair[0])?.is_zero() {
            return Err(Error::NotAComplex { degree: k + 1 });
        }
    }
    Ok(CechComplex {
        field,
        n,
        degrees,
        differentials,
    })
}

impl CechComplex {
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self, len: usize) -> Option<&CechDegree> {
        self.degrees.get(len)
    }

    /// `dim S^len`, zero beyond `N`.
    pub fn dim(&self, len: usize) -> usize {
        self.degrees.get(len).map_or(0, |d| d.dim)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.dim).collect()
    }

    /// `d'_len: S^len -> S^{len+1}`; the zero map out of `S^N` and beyond.
    pub fn differential(&self, len: usize) -> Matrix {
        self.differentials
            .get(len)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(self.field, self.dim(len + 1), self.dim(len)))
    }

    pub fn differentials(&self) -> &[Matrix] {
        &self.differentials
    }

    /// Embeds `x ∈ 𝓡(ζ)` into `S^{|ζ|}`.
    pub fn embed(&self, zeta: &IndexTuple, x: &[Scalar]) -> Vec<Scalar> {
        let deg = &self.degrees[zeta.len()];
        let mut v = vec![self.field.zero(); deg.dim];
        let off = deg.offset(zeta);
        v[off..off + x.len()].clone_from_slice(x);
        v
    }

    /// The `ζ`-block of `v ∈ S^{|ζ|}`.
    pub fn block<'a>(&self, zeta: &IndexTuple, v: &'a [Scalar]) -> &'a [Scalar] {
        let (off, d) = self.degrees[zeta.len()].blocks[zeta];
        &v[off..off + d]
    }
}

/// `Ȟ^n` for `n = 0 .. N-1`, the homology at `S^{n+1}` with `S^0` left out.
/// Trailing degrees whose space `S^{n+1}` is zero are dropped.
pub fn cech_cohomology(cx: &CechComplex) -> Vec<usize> {
    let ranks: Vec<usize> = cx.differentials.iter().map(Matrix::rank).collect();
    let mut out: Vec<usize> = (0..cx.n)
        .map(|k| {
            let len = k + 1;
            let outgoing = ranks.get(len).copied().unwrap_or(0);
            let incoming = if len >= 2 { ranks[len - 1] } else { 0 };
            cx.dim(len) - outgoing - incoming
        })
        .collect();
    while out.len() > 1 && cx.dim(out.len()) == 0 {
        out.pop();
    }
    out
}
