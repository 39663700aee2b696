use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Cohomological degree of a homogeneous element.
///
/// Multivectors of wedge rank `k` sit in degree `k - 1`, forms of rank `p` in
/// degree `-p`, and every power of `u` adds `2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GradedDegree(pub i64);

impl GradedDegree {
    pub fn multivector(rank: usize) -> Self {
        GradedDegree(rank as i64 - 1)
    }

    pub fn form(rank: usize) -> Self {
        GradedDegree(-(rank as i64))
    }

    pub fn with_u_power(self, j: usize) -> Self {
        GradedDegree(self.0 + 2 * j as i64)
    }

    pub fn is_odd(self) -> bool {
        self.0.rem_euclid(2) == 1
    }
}

/// `(-1)^e`.
pub fn parity_sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Koszul sign of reordering homogeneous elements.
///
/// `permutation[k]` is the index of the input element that ends up in
/// position `k`. Every inversion of two elements contributes the product of
/// their degrees.
pub fn koszul_sign(permutation: &[usize], degrees: &[GradedDegree]) -> Result<i64> {
    if permutation.len() != degrees.len() {
        return Err(Error::LengthMismatch(permutation.len(), degrees.len()));
    }
    let n = permutation.len();
    let mut seen = vec![false; n];
    for &p in permutation {
        if p >= n || seen[p] {
            return Err(Error::Config(format!("not a permutation: {permutation:?}")));
        }
        seen[p] = true;
    }
    let mut exponent = 0i64;
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (permutation[i], permutation[j]);
            if a > b && degrees[a].is_odd() && degrees[b].is_odd() {
                exponent += 1;
            }
        }
    }
    Ok(parity_sign(exponent))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degs(v: &[i64]) -> Vec<GradedDegree> {
        v.iter().map(|&d| GradedDegree(d)).collect()
    }

    #[test]
    fn swap_of_odd_elements_is_negative() {
        assert_eq!(koszul_sign(&[1, 0], &degs(&[1, 1])).unwrap(), -1);
        assert_eq!(koszul_sign(&[1, 0], &degs(&[1, 2])).unwrap(), 1);
    }

    #[test]
    fn identity_is_positive() {
        assert_eq!(koszul_sign(&[0, 1, 2], &degs(&[1, 1, 1])).unwrap(), 1);
    }

    #[test]
    fn cyclic_shift_of_three_odd_elements() {
        // two adjacent swaps
        assert_eq!(koszul_sign(&[1, 2, 0], &degs(&[1, 1, 1])).unwrap(), 1);
    }

    #[test]
    fn length_mismatch_is_an_error() {
        assert!(matches!(
            koszul_sign(&[0, 1], &degs(&[1])),
            Err(Error::LengthMismatch(2, 1))
        ));
    }
}
