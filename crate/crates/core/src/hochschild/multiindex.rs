//! Multi-index bookkeeping for the generalized Leibniz rule.

use crate::ring::{q, Rational};

pub type MultiIndex = Vec<u32>;

fn factorial(n: u32) -> Rational {
    (1..=n as i64).fold(q(1), |acc, k| acc * q(k))
}

/// All ways to write `alpha = β_0 + … + β_{parts-1}` together with the
/// multinomial weight `Π_i α_i! / Π_{p,i} β_{p,i}!`.
pub fn leibniz_splits(alpha: &[u32], parts: usize) -> Vec<(Rational, Vec<MultiIndex>)> {
    assert!(parts >= 1);
    let dim = alpha.len();
    let mut out: Vec<(Rational, Vec<MultiIndex>)> = vec![(q(1), vec![vec![0; dim]; parts])];
    for axis in 0..dim {
        let mut next = Vec::new();
        for (w, split) in &out {
            for dist in compositions(alpha[axis], parts) {
                let mut s = split.clone();
                let mut weight = w * factorial(alpha[axis]);
                for (p, &k) in dist.iter().enumerate() {
                    s[p][axis] = k;
                    weight /= factorial(k);
                }
                next.push((weight, s));
            }
        }
        out = next;
    }
    out
}

/// Weak compositions of `n` into `parts` nonnegative parts.
fn compositions(n: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 1 {
        return vec![vec![n]];
    }
    let mut out = Vec::new();
    for first in 0..=n {
        for mut rest in compositions(n - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub fn add_indices(a: &[u32], b: &[u32]) -> MultiIndex {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn order(a: &[u32]) -> u32 {
    a.iter().sum()
}

pub fn unit_index(dim: usize, axis: usize) -> MultiIndex {
    let mut e = vec![0; dim];
    e[axis] = 1;
    e
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_split_weights() {
        let splits = leibniz_splits(&[2], 2);
        let weights: Vec<Rational> = splits.iter().map(|(w, _)| w.clone()).collect();
        assert_eq!(weights, vec![q(1), q(2), q(1)]);
    }

    #[test]
    fn multinomial_total_weight() {
        // Σ weights = parts^{|α|}
        let total: Rational = leibniz_splits(&[2, 1], 3).into_iter().map(|(w, _)| w).sum();
        assert_eq!(total, q(27));
    }
}
