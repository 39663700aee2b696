use crate::cartan::{merge_sign, IndexSet};
use crate::linalg::{rank, SparseVec};
use crate::ring::{q, Linear, Rational};
use serde::Serialize;
use std::collections::BTreeMap;

/// Element of `∧^p(ℚ^d)* ⊗ S^q(ℚ^d)`, keyed by `(P, monomial exponent)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymbolElement {
    dim: usize,
    coords: BTreeMap<(IndexSet, Vec<u32>), Rational>,
}

impl SymbolElement {
    pub fn zero(dim: usize) -> Self {
        SymbolElement {
            dim,
            coords: BTreeMap::new(),
        }
    }

    pub fn basis(dim: usize, set: IndexSet, mono: Vec<u32>) -> Self {
        let mut s = Self::zero(dim);
        s.add(set, mono, q(1));
        s
    }

    pub fn add(&mut self, set: IndexSet, mono: Vec<u32>, c: Rational) {
        debug_assert_eq!(mono.len(), self.dim);
        let entry = self.coords.entry((set.clone(), mono.clone())).or_insert_with(|| q(0));
        *entry += c;
        if entry.is_zero() {
            self.coords.remove(&(set, mono));
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coords(&self) -> impl Iterator<Item = (&(IndexSet, Vec<u32>), &Rational)> {
        self.coords.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }
}

/// `d₀ = Σ_i (dx_i ∧) ⊗ (x_i ·)`, of bidegree `(1, 1)`.
pub fn koszul_symbol_d0(s: &SymbolElement) -> SymbolElement {
    let mut out = SymbolElement::zero(s.dim);
    for ((set, mono), c) in &s.coords {
        for i in 0..s.dim {
            if let Some((sign, new_set)) = merge_sign(&[i], set) {
                let mut m = mono.clone();
                m[i] += 1;
                out.add(new_set, m, c.signed(sign));
            }
        }
    }
    out
}

fn subsets(d: usize, p: usize) -> Vec<IndexSet> {
    if p == 0 {
        return vec![vec![]];
    }
    if p > d {
        return vec![];
    }
    let mut out = Vec::new();
    for mut s in subsets(d - 1, p - 1) {
        s.push(d - 1);
        out.push(s);
    }
    out.extend(subsets(d - 1, p));
    out.sort();
    out
}

fn monomials(d: usize, q_deg: usize) -> Vec<Vec<u32>> {
    if d == 0 {
        return if q_deg == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=q_deg {
        for mut rest in monomials(d - 1, q_deg - first) {
            rest.insert(0, first as u32);
            out.push(rest);
        }
    }
    out
}

fn basis(d: usize, p: usize, q_deg: usize) -> Vec<(IndexSet, Vec<u32>)> {
    let mut out = Vec::new();
    for s in subsets(d, p) {
        for m in monomials(d, q_deg) {
            out.push((s.clone(), m));
        }
    }
    out
}

fn d0_rank(d: usize, p: usize, q_deg: usize) -> usize {
    if p >= d {
        return 0;
    }
    let images = basis(d, p, q_deg).into_iter().map(|(s, m)| {
        let img = koszul_symbol_d0(&SymbolElement::basis(d, s, m));
        img.coords.into_iter().collect::<SparseVec<(IndexSet, Vec<u32>)>>()
    });
    rank(images)
}

/// Cohomology dimension of the symbol complex at one bidegree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LineEntry {
    pub d: usize,
    pub c: i64,
    pub p: usize,
    pub q: usize,
    pub dim_space: usize,
    pub dim_cohomology: usize,
}

/// Cohomology of `d₀` along the line `q − p = c`, for `0 ≤ q ≤ qmax`.
///
/// Bidegrees with `q < 0` are omitted. At `q = qmax` the outgoing map is
/// still computed exactly, since it only needs the basis at `q + 1`.
pub fn koszul_line_cohomology(d: usize, c: i64, qmax: usize) -> Vec<LineEntry> {
    let mut out = Vec::new();
    for p in 0..=d {
        let q_deg = p as i64 + c;
        if q_deg < 0 || q_deg > qmax as i64 {
            continue;
        }
        let q_deg = q_deg as usize;
        let dim_space = basis(d, p, q_deg).len();
        let outgoing = d0_rank(d, p, q_deg);
        let incoming = if p > 0 && q_deg > 0 {
            d0_rank(d, p - 1, q_deg - 1)
        } else {
            0
        };
        out.push(LineEntry {
            d,
            c,
            p,
            q: q_deg,
            dim_space,
            dim_cohomology: dim_space - outgoing - incoming,
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dims(d: usize, c: i64) -> Vec<(usize, usize)> {
        koszul_line_cohomology(d, c, 8)
            .into_iter()
            .map(|e| (e.p, e.dim_cohomology))
            .collect()
    }

    #[test]
    fn d0_at_unit() {
        let s = SymbolElement::basis(2, vec![], vec![0, 0]);
        let mut expected = SymbolElement::zero(2);
        expected.add(vec![0], vec![1, 0], q(1));
        expected.add(vec![1], vec![0, 1], q(1));
        assert_eq!(koszul_symbol_d0(&s), expected);
        let top = SymbolElement::basis(2, vec![0, 1], vec![3, 1]);
        assert!(koszul_symbol_d0(&top).is_zero());
    }

    #[test]
    fn d0_squares_to_zero() {
        let mut s = SymbolElement::zero(3);
        s.add(vec![1], vec![1, 0, 2], q(3));
        s.add(vec![0], vec![0, 1, 0], q(-2));
        assert!(koszul_symbol_d0(&koszul_symbol_d0(&s)).is_zero());
    }

    #[test]
    fn line_examples_in_dimension_two() {
        assert_eq!(dims(2, -2), vec![(2, 1)]);
        assert_eq!(dims(2, 0), vec![(0, 0), (1, 0), (2, 0)]);
        assert_eq!(dims(2, -1), vec![(1, 0), (2, 0)]);
        let spaces: Vec<usize> = koszul_line_cohomology(2, 0, 8).iter().map(|e| e.dim_space).collect();
        assert_eq!(spaces, vec![1, 4, 3]);
    }
}
