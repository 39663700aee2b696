use super::Rational;
use std::fmt::Debug;

/// Exact vector-space operations shared by every algebraic object in the crate.
///
/// Zero elements carry shape information (dimension, arity), hence
/// `zero_like` instead of a bare constructor.
pub trait Linear: Clone + PartialEq + Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn scaled(&self, c: &Rational) -> Self;

    fn negated(&self) -> Self {
        self.scaled(&-super::q(1))
    }

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }

    /// `self` scaled by `±1`.
    fn signed(&self, sign: i64) -> Self {
        if sign >= 0 {
            self.clone()
        } else {
            self.negated()
        }
    }
}

impl Linear for Rational {
    fn zero_like(&self) -> Self {
        super::q(0)
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn scaled(&self, c: &Rational) -> Self {
        self * c
    }
}
