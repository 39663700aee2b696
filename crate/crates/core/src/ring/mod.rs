//! Exact scalars, the Laurent coefficient ring, graded signs and truncated
//! power series in the formal parameter `u`.

mod koszul;
pub(crate) mod laurent;
mod linear;
mod tpoly;
mod useries;

pub use koszul::{koszul_sign, parity_sign, GradedDegree};
pub use laurent::{Exponent, LaurentPoly};
pub use linear::Linear;
pub use tpoly::TPoly;
pub use useries::USeries;

pub use num_bigint::BigInt;

/// The ground field.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer rational.
pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `n / d`.
pub fn qf(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}
