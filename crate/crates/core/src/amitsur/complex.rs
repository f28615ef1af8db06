use super::tower::{TensorTower, DEFAULT_DIM_CAP};
use crate::covering::Covering;
use crate::error::{Error, Result};
use crate::exactla::{CochainComplex, Matrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AmitsurConfig {
    /// Highest degree `n` whose space `C^n = B^{⊗_A (n+1)}` is built.
    pub n_max: usize,
    pub dim_cap: usize,
}

impl Default for AmitsurConfig {
    fn default() -> Self {
        AmitsurConfig {
            n_max: 2,
            dim_cap: DEFAULT_DIM_CAP,
        }
    }
}

/// The Amitsur complex `C^0 = B -> C^1 = B ⊗_A B -> ... -> C^{n_max}` with
/// `d(b_0 ⊗ ... ⊗ b_n) = Σ_{i=0}^{n+1} (-1)^i (1_B inserted at slot i)` and the
/// augmentation `π: A -> B`.
pub struct AmitsurComplex {
    tower: TensorTower,
    n_max: usize,
    differentials: Vec<Matrix>,
    augmentation: Matrix,
}

pub fn build_amitsur(c: &Covering, config: &AmitsurConfig) -> Result<AmitsurComplex> {
    if config.n_max < 1 {
        return Err(Error::InvalidParameter("n_max must be at least 1".into()));
    }
    let mut tower = TensorTower::new(c, config.dim_cap);
    tower.extend_to(config.n_max + 1)?;
    let field = c.field();
    let one = field.one();
    let minus = -&one;
    let differentials: Vec<Matrix> = (0..config.n_max)
        .map(|n| {
            let power = n + 1;
            let mut d = Matrix::zeros(field, tower.dim(power + 1), tower.dim(power));
            for slot in 0..=power {
                let sign = if slot % 2 == 0 { &one } else { &minus };
                d.add_block(0, 0, sign, &tower.insertion_map(power, slot));
            }
            d
        })
        .collect();
    let cx = AmitsurComplex {
        tower,
        n_max: config.n_max,
        differentials,
        augmentation: c.pi(),
    };
    cx.check_d_squared()?;
    Ok(cx)
}

impl AmitsurComplex {
    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn tower(&self) -> &TensorTower {
        &self.tower
    }

    /// `dim C^0, ..., dim C^{n_max}`.
    pub fn dims(&self) -> Vec<usize> {
        (1..=self.n_max + 1).map(|p| self.tower.dim(p)).collect()
    }

    /// `d_n: C^n -> C^{n+1}` for `n < n_max`.
    pub fn differential(&self, n: usize) -> &Matrix {
        &self.differentials[n]
    }

    pub fn differentials(&self) -> &[Matrix] {
        &self.differentials
    }

    pub fn augmentation(&self) -> &Matrix {
        &self.augmentation
    }

    /// `d_0 π = 0` (reported as degree 0) and `d_{n+1} d_n = 0` (degree `n + 1`).
    pub fn check_d_squared(&self) -> Result<()> {
        if let Some(d0) = self.differentials.first() {
            if !d0.mul(&self.augmentation)?.is_zero() {
                return Err(Error::NotAComplex { degree: 0 });
            }
        }
        for (n, pair) in self.differentials.windows(2).enumerate() {
            if !pair[1].mul(&pair[0])?.is_zero() {
                return Err(Error::NotAComplex { degree: n + 1 });
            }
        }
        Ok(())
    }

    pub fn as_cochain_complex(&self) -> CochainComplex {
        CochainComplex::new(self.tower.field(), self.dims(), self.differentials.clone())
            .expect("validated at construction")
    }
}

/// Homology dimensions in degrees `0 .. n_max - 1` (the top space has no
/// outgoing differential and is not reported).
///
/// With `augmented`, the list starts with `dim ker π` (exactness at `A`)
/// followed by `dim ker d_0 - rank π` and the higher degrees.
pub fn amitsur_homology(cx: &AmitsurComplex, augmented: bool) -> Vec<usize> {
    let dims = cx.dims();
    let ranks: Vec<usize> = cx.differentials.iter().map(Matrix::rank).collect();
    let mut out = Vec::with_capacity(cx.n_max + 1);
    let rank_pi = cx.augmentation.rank();
    if augmented {
        out.push(cx.augmentation.cols() - rank_pi);
    }
    for n in 0..cx.n_max {
        let incoming = match n {
            0 if augmented => rank_pi,
            0 => 0,
            _ => ranks[n - 1],
        };
        out.push(dims[n] - ranks[n] - incoming);
    }
    out
}
