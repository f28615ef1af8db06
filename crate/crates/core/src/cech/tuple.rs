use std::fmt;

use crate::error::{Error, Result};

/// A strictly increasing tuple of covering indices.
///
/// Indices are 0-based; [`fmt::Display`] and [`IndexTuple::one_based`] shift
/// them to the 1-based form used in problem files.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexTuple(Vec<usize>);

impl IndexTuple {
    pub fn new(indices: Vec<usize>, n: usize) -> Result<Self> {
        let increasing = indices.windows(2).all(|w| w[0] < w[1]);
        if !increasing || indices.iter().any(|&i| i >= n) {
            return Err(Error::InvalidTuple { tuple: indices, n });
        }
        Ok(IndexTuple(indices))
    }

    /// From 1-based indices.
    pub fn from_one_based(indices: &[usize], n: usize) -> Result<Self> {
        if indices.contains(&0) {
            return Err(Error::InvalidTuple {
                tuple: indices.to_vec(),
                n,
            });
        }
        Self::new(indices.iter().map(|i| i - 1).collect(), n)
    }

    pub fn empty() -> Self {
        IndexTuple(Vec::new())
    }

    pub fn singleton(i: usize) -> Self {
        IndexTuple(vec![i])
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|i| i + 1).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn is_subset_of(&self, other: &IndexTuple) -> bool {
        self.0.iter().all(|&i| other.contains(i))
    }

    /// The tuple with `i` added and the 0-based position `i` lands on, or
    /// `None` if `i` is already present.
    pub fn insert(&self, i: usize) -> Option<(IndexTuple, usize)> {
        match self.0.binary_search(&i) {
            Ok(_) => None,
            Err(pos) => {
                let mut v = self.0.clone();
                v.insert(pos, i);
                Some((IndexTuple(v), pos))
            }
        }
    }

    /// All tuples of the given length over `0..n`, in lexicographic order.
    pub fn of_length(n: usize, len: usize) -> Vec<IndexTuple> {
        let mut out = Vec::new();
        if len > n {
            return out;
        }
        let mut cur: Vec<usize> = (0..len).collect();
        loop {
            out.push(IndexTuple(cur.clone()));
            let Some(k) = (0..len).rev().find(|&k| cur[k] < n - len + k) else {
                return out;
            };
            cur[k] += 1;
            for m in k + 1..len {
                cur[m] = cur[m - 1] + 1;
            }
        }
    }

    /// Every tuple over `0..n`, shortest first.
    pub fn all(n: usize) -> Vec<IndexTuple> {
        (0..=n).flat_map(|len| Self::of_length(n, len)).collect()
    }
}

impl fmt::Display for IndexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_based().iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// `(-1)^pos` for inserting `i` into `zeta`; `None` if `i` is already in it.
pub fn insertion_sign(zeta: &IndexTuple, i: usize) -> Option<i64> {
    zeta.insert(i)
        .map(|(_, pos)| if pos % 2 == 0 { 1 } else { -1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts() {
        assert_eq!(IndexTuple::all(4).len(), 16);
        assert_eq!(IndexTuple::of_length(5, 2).len(), 10);
        assert_eq!(IndexTuple::of_length(2, 3).len(), 0);
        assert_eq!(IndexTuple::of_length(3, 0), vec![IndexTuple::empty()]);
        let pairs: Vec<Vec<usize>> = IndexTuple::of_length(3, 2)
            .iter()
            .map(|t| t.indices().to_vec())
            .collect();
        assert_eq!(pairs, vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
    }

    #[test]
    fn validation() {
        assert!(IndexTuple::new(vec![0, 2], 3).is_ok());
        assert!(IndexTuple::new(vec![2, 0], 3).is_err());
        assert!(IndexTuple::new(vec![1, 1], 3).is_err());
        assert!(IndexTuple::new(vec![3], 3).is_err());
        assert_eq!(
            IndexTuple::from_one_based(&[1, 3], 3).unwrap().indices(),
            &[0, 2]
        );
        assert!(IndexTuple::from_one_based(&[0], 3).is_err());
        assert_eq!(IndexTuple::new(vec![0, 2], 3).unwrap().to_string(), "{1,3}");
    }

    #[test]
    fn insertion_positions() {
        let t = IndexTuple::new(vec![1, 3], 5).unwrap();
        assert_eq!(t.insert(0).unwrap().1, 0);
        assert_eq!(t.insert(2).unwrap().1, 1);
        assert_eq!(t.insert(4).unwrap().1, 2);
        assert!(t.insert(3).is_none());
    }

    #[test]
    fn two_path_signs_cancel() {
        for n in 2..=6 {
            for zeta in IndexTuple::all(n) {
                for i in 0..n {
                    for j in i + 1..n {
                        if zeta.contains(i) || zeta.contains(j) {
                            continue;
                        }
                        let (eta_i, p1) = zeta.insert(i).unwrap();
                        let (_, p1b) = eta_i.insert(j).unwrap();
                        let (eta_j, p2) = zeta.insert(j).unwrap();
                        let (_, p2b) = eta_j.insert(i).unwrap();
                        let s = |p: usize| if p.is_multiple_of(2) { 1i64 } else { -1 };
                        assert_eq!(s(p1) * s(p1b) + s(p2) * s(p2b), 0, "{zeta} {i} {j}");
                    }
                }
            }
        }
    }
}
