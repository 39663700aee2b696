//! Exact sparse linear algebra over ℚ.
//!
//! Vectors are inserted one at a time and reduced against the pivots seen so
//! far, which gives ranks and exact solutions of `Σ x_i v_i = b`.

use crate::ring::{q, Linear, Rational};
use std::collections::BTreeMap;
use std::ops::Bound;

pub type SparseVec<K> = BTreeMap<K, Rational>;

fn axpy<K: Ord + Clone>(y: &mut SparseVec<K>, a: &Rational, x: &SparseVec<K>) {
    for (k, v) in x {
        let entry = y.entry(k.clone()).or_insert_with(|| q(0));
        *entry += a * v;
        if entry.is_zero() {
            y.remove(k);
        }
    }
}

/// Incremental row reduction.
#[derive(Clone, Debug)]
pub struct Reducer<K: Ord + Clone> {
    // pivot key → (row with unit coefficient at the pivot and only larger keys,
    //              its expression in terms of the inserted vectors)
    pivots: BTreeMap<K, (SparseVec<K>, SparseVec<usize>)>,
    inserted: usize,
}

impl<K: Ord + Clone> Default for Reducer<K> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Ord + Clone> Reducer<K> {
    pub fn new() -> Self {
        Reducer {
            pivots: BTreeMap::new(),
            inserted: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn inserted(&self) -> usize {
        self.inserted
    }

    fn reduce(&self, mut w: SparseVec<K>, comb: &mut SparseVec<usize>) -> SparseVec<K> {
        let mut cursor: Option<K> = None;
        loop {
            let lower = match &cursor {
                None => Bound::Unbounded,
                Some(k) => Bound::Excluded(k.clone()),
            };
            let next = w
                .range((lower, Bound::Unbounded))
                .find(|(k, _)| self.pivots.contains_key(*k))
                .map(|(k, v)| (k.clone(), v.clone()));
            let Some((k, a)) = next else { break };
            let (row, rc) = &self.pivots[&k];
            axpy(&mut w, &-a.clone(), row);
            axpy(comb, &-a, rc);
            cursor = Some(k);
        }
        w
    }

    /// Inserts a vector; returns true if it increased the rank.
    pub fn insert(&mut self, v: SparseVec<K>) -> bool {
        let idx = self.inserted;
        self.inserted += 1;
        let mut comb = SparseVec::new();
        comb.insert(idx, q(1));
        let w = self.reduce(v, &mut comb);
        let Some((pk, pv)) = w.iter().next().map(|(k, v)| (k.clone(), v.clone())) else {
            return false;
        };
        let inv = q(1) / pv;
        let row: SparseVec<K> = w.into_iter().map(|(k, v)| (k, v * &inv)).collect();
        let comb: SparseVec<usize> = comb.into_iter().map(|(k, v)| (k, v * &inv)).collect();
        // keep earlier rows reduced at the new pivot so reduction order stays valid
        for (_, (r, c)) in self.pivots.iter_mut() {
            if let Some(a) = r.get(&pk).cloned() {
                axpy(r, &-a.clone(), &row);
                axpy(c, &-a, &comb);
            }
        }
        self.pivots.insert(pk, (row, comb));
        true
    }

    /// Coefficients `x` with `Σ x_i v_i = b`, if `b` is in the span.
    pub fn solve(&self, b: SparseVec<K>) -> Option<SparseVec<usize>> {
        let mut comb = SparseVec::new();
        let r = self.reduce(b, &mut comb);
        if !r.is_empty() {
            return None;
        }
        Some(comb.into_iter().map(|(k, v)| (k, -v)).collect())
    }

    /// Canonical remainder of `b` modulo the span.
    pub fn remainder(&self, b: SparseVec<K>) -> SparseVec<K> {
        let mut comb = SparseVec::new();
        self.reduce(b, &mut comb)
    }

    /// True if `b` lies in the span of the inserted vectors.
    pub fn contains(&self, b: SparseVec<K>) -> bool {
        let mut comb = SparseVec::new();
        self.reduce(b, &mut comb).is_empty()
    }
}

/// Rank of a list of sparse vectors.
pub fn rank<K: Ord + Clone>(vectors: impl IntoIterator<Item = SparseVec<K>>) -> usize {
    let mut r = Reducer::new();
    for v in vectors {
        r.insert(v);
    }
    r.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(entries: &[(u32, i64)]) -> SparseVec<u32> {
        entries.iter().map(|&(k, x)| (k, q(x))).collect()
    }

    #[test]
    fn rank_of_dependent_rows() {
        let rows = vec![v(&[(0, 1), (1, 2)]), v(&[(0, 2), (1, 4)]), v(&[(1, 1), (2, 1)])];
        assert_eq!(rank(rows), 2);
    }

    #[test]
    fn solve_recovers_combination() {
        let basis = vec![v(&[(0, 1), (1, 1)]), v(&[(1, 1), (2, 1)]), v(&[(0, 1), (2, 1)])];
        let mut r = Reducer::new();
        for b in &basis {
            r.insert(b.clone());
        }
        let target = v(&[(0, 3), (1, 5), (2, 4)]);
        let x = r.solve(target.clone()).unwrap();
        let mut check = SparseVec::new();
        for (i, c) in &x {
            axpy(&mut check, c, &basis[*i]);
        }
        assert_eq!(check, target);
    }

    #[test]
    fn solve_rejects_outside_span() {
        let mut r = Reducer::new();
        r.insert(v(&[(0, 1), (1, 1)]));
        assert!(r.solve(v(&[(0, 1)])).is_none());
        assert!(r.contains(v(&[(0, -2), (1, -2)])));
    }
}
