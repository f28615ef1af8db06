//! Sparse row reduction. Every dense entry point (rank, RREF, kernels,
//! quotients) funnels through [`Echelon`], which keeps one normalized row per
//! pivot column and only touches nonzero entries.

use std::collections::BTreeMap;

use super::scalar::{Field, Scalar};

/// Sorted `(column, value)` pairs with no zero values.
pub type SparseVec = Vec<(usize, Scalar)>;

pub(crate) fn to_map(row: SparseVec) -> BTreeMap<usize, Scalar> {
    row.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// `acc -= coeff * row`, dropping entries that cancel.
pub(crate) fn sub_scaled(
    acc: &mut BTreeMap<usize, Scalar>,
    coeff: &Scalar,
    row: &[(usize, Scalar)],
) {
    for (j, v) in row {
        let delta = coeff * v;
        match acc.get_mut(j) {
            Some(slot) => {
                let next = &*slot - &delta;
                if next.is_zero() {
                    acc.remove(j);
                } else {
                    *slot = next;
                }
            }
            None => {
                acc.insert(*j, -delta);
            }
        }
    }
}

/// `acc += coeff * row`.
pub(crate) fn add_scaled(
    acc: &mut BTreeMap<usize, Scalar>,
    coeff: &Scalar,
    row: &[(usize, Scalar)],
) {
    sub_scaled(acc, &-coeff, row);
}

#[derive(Clone, Debug)]
pub(crate) struct Echelon {
    field: Field,
    cols: usize,
    /// pivot column -> row whose first entry is `(pivot, 1)`
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new(field: Field, cols: usize) -> Self {
        Echelon {
            field,
            cols,
            rows: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Eliminates pivot columns from `acc`. With `full = false` it stops at the
    /// first entry that has no pivot row.
    fn eliminate(&self, acc: &mut BTreeMap<usize, Scalar>, full: bool) {
        let mut start = 0;
        while let Some(k) = acc.range(start..).next().map(|(k, _)| *k) {
            match self.rows.get(&k) {
                Some(prow) => {
                    let coeff = acc.remove(&k).expect("present");
                    sub_scaled(acc, &coeff, &prow[1..]);
                }
                None if full => {}
                None => break,
            }
            start = k + 1;
        }
    }

    pub fn contains(&self, row: SparseVec) -> bool {
        let mut acc = to_map(row);
        self.eliminate(&mut acc, false);
        acc.is_empty()
    }

    /// Adds `row` to the span. Returns `false` if it was already in it.
    pub fn insert(&mut self, row: SparseVec) -> bool {
        let mut acc = to_map(row);
        self.eliminate(&mut acc, false);
        let Some((&pivot, lead)) = acc.iter().next() else {
            return false;
        };
        debug_assert!(pivot < self.cols);
        let inv = lead.inv().expect("nonzero leading entry");
        let normalized: SparseVec = acc.into_iter().map(|(j, v)| (j, &v * &inv)).collect();
        self.rows.insert(pivot, normalized);
        true
    }

    /// Canonical reduced row-echelon rows, ordered by pivot.
    pub fn into_rref(self) -> Vec<SparseVec> {
        let field = self.field;
        let mut done: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for (&pivot, row) in self.rows.iter().rev() {
            let mut acc = to_map(row.clone());
            let pivot_cols: Vec<usize> = acc
                .range(pivot + 1..)
                .map(|(k, _)| *k)
                .filter(|k| done.contains_key(k))
                .collect();
            for c in pivot_cols {
                let coeff = acc.remove(&c).expect("present");
                sub_scaled(&mut acc, &coeff, &done[&c][1..]);
            }
            debug_assert_eq!(acc.get(&pivot), Some(&field.one()));
            done.insert(pivot, acc.into_iter().collect());
        }
        done.into_values().collect()
    }
}
