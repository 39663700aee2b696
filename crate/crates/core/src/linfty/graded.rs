use crate::cartan::{DiffForm, MultiVector, Skew, UVTop};
use crate::hochschild::{HochChain, MultiDiffOp};
use crate::ring::{Linear, USeries};

/// Homogeneous elements with an integer degree.
///
/// Only parities enter sign computations, so for sums of several degrees the
/// caller must keep the parity uniform. Zero elements report degree 0.
pub trait Graded: Linear {
    fn degree(&self) -> i64;
}

fn first_nonzero<X: Linear>(s: &USeries<X>, deg: impl Fn(&X) -> i64) -> i64 {
    s.coeffs()
        .iter()
        .enumerate()
        .find(|(_, c)| !c.is_zero())
        .map(|(j, c)| deg(c) + 2 * j as i64)
        .unwrap_or(0)
}

impl Graded for MultiVector {
    /// `γ ∈ T^{|γ|+1}`: a rank-`k` field has degree `k − 1`.
    fn degree(&self) -> i64 {
        Skew::ranks(self).first().map(|&k| k as i64 - 1).unwrap_or(0)
    }
}

impl Graded for DiffForm {
    fn degree(&self) -> i64 {
        Skew::ranks(self).first().map(|&k| -(k as i64)).unwrap_or(0)
    }
}

impl Graded for USeries<MultiVector> {
    fn degree(&self) -> i64 {
        first_nonzero(self, |c| Graded::degree(c))
    }
}

impl Graded for USeries<DiffForm> {
    fn degree(&self) -> i64 {
        first_nonzero(self, |c| Graded::degree(c))
    }
}

impl Graded for UVTop {
    /// Identified with the multivector series through the volume form.
    fn degree(&self) -> i64 {
        self.mv.degree()
    }
}

impl Graded for MultiDiffOp {
    fn degree(&self) -> i64 {
        self.degree()
    }
}

impl Graded for HochChain {
    fn degree(&self) -> i64 {
        self.lengths().first().map(|&n| -(n as i64)).unwrap_or(0)
    }
}

impl Graded for USeries<HochChain> {
    fn degree(&self) -> i64 {
        first_nonzero(self, |c| Graded::degree(c))
    }
}

/// `(−1)^e`.
pub fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}
