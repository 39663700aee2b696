use super::{q, Linear, Rational};
use crate::error::{Error, Result};
use num_traits::{One, Signed};
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

/// Exponent vector of a Laurent monomial `t1^e1 ⋯ td^ed`.
pub type Exponent = Vec<i32>;

/// Exact-rational Laurent polynomial in `dim` variables.
///
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    dim: usize,
    terms: BTreeMap<Exponent, Rational>,
}

impl LaurentPoly {
    pub fn zero(dim: usize) -> Self {
        LaurentPoly {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(dim: usize) -> Self {
        Self::constant(dim, q(1))
    }

    pub fn constant(dim: usize, c: Rational) -> Self {
        Self::monomial(c, vec![0; dim])
    }

    pub fn monomial(c: Rational, exponent: Exponent) -> Self {
        let dim = exponent.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponent, c);
        }
        LaurentPoly { dim, terms }
    }

    /// The coordinate function `t_axis` (0-based axis).
    pub fn var(dim: usize, axis: usize) -> Self {
        let mut e = vec![0; dim];
        e[axis] = 1;
        Self::monomial(q(1), e)
    }

    pub fn from_terms(dim: usize, terms: impl IntoIterator<Item = (Exponent, Rational)>) -> Self {
        let mut p = Self::zero(dim);
        for (e, c) in terms {
            assert_eq!(e.len(), dim, "exponent length must equal the dimension");
            p.add_term(e, c);
        }
        p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: &[i32]) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(|| q(0))
    }

    pub fn add_term(&mut self, e: Exponent, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&vec![0; self.dim])
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    /// The canonical representative of the class in `A / ℚ·1`.
    pub fn strip_constant(&self) -> Self {
        let mut p = self.clone();
        p.terms.remove(&vec![0; self.dim]);
        p
    }

    /// A single monomial `c·t^e`, if the polynomial is one.
    pub fn as_monomial(&self) -> Option<(&Exponent, &Rational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        let mut out = Self::zero(self.dim);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    /// Multiply by the monomial `c·t^e`.
    pub fn mul_monomial(&self, c: &Rational, e: &[i32]) -> Self {
        let mut out = Self::zero(self.dim);
        if c.is_zero() {
            return out;
        }
        for (e1, c1) in &self.terms {
            let ee: Exponent = e1.iter().zip(e).map(|(a, b)| a + b).collect();
            out.terms.insert(ee, c1 * c);
        }
        out
    }

    /// Exact division by a unit `c·t^e` of the Laurent ring.
    pub fn div_monomial(&self, c: &Rational, e: &[i32]) -> Self {
        let neg: Exponent = e.iter().map(|x| -x).collect();
        self.mul_monomial(&(Rational::one() / c), &neg)
    }

    /// Partial derivative along a 0-based axis.
    pub fn partial(&self, axis: usize) -> Result<Self> {
        if axis >= self.dim {
            return Err(Error::AxisOutOfRange {
                axis,
                dim: self.dim,
            });
        }
        let mut out = Self::zero(self.dim);
        for (e, c) in &self.terms {
            let k = e[axis];
            if k != 0 {
                let mut ee = e.clone();
                ee[axis] -= 1;
                out.terms.insert(ee, c * q(k as i64));
            }
        }
        Ok(out)
    }

    /// Mixed partial derivative `∂^alpha`; `alpha.len()` must equal `dim`.
    pub fn diff(&self, alpha: &[u32]) -> Self {
        assert_eq!(alpha.len(), self.dim, "multi-index length must equal the dimension");
        let mut out = Self::zero(self.dim);
        for (e, c) in &self.terms {
            let mut coef = c.clone();
            let mut ee = e.clone();
            for (i, &a) in alpha.iter().enumerate() {
                coef *= falling_factorial(e[i] as i64, a);
                ee[i] -= a as i32;
            }
            if !coef.is_zero() {
                out.terms.insert(ee, coef);
            }
        }
        out
    }

    /// Coefficient-wise map over monomials, splitting into single-term polynomials.
    pub fn monomials(&self) -> impl Iterator<Item = LaurentPoly> + '_ {
        self.terms
            .iter()
            .map(|(e, c)| LaurentPoly::monomial(c.clone(), e.clone()))
    }
}

/// `k (k-1) ⋯ (k-a+1)` as a rational.
pub(crate) fn falling_factorial(k: i64, a: u32) -> Rational {
    let mut r = q(1);
    for i in 0..a as i64 {
        r *= q(k - i);
    }
    r
}

impl Linear for LaurentPoly {
    fn zero_like(&self) -> Self {
        Self::zero(self.dim)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
    fn scaled(&self, c: &Rational) -> Self {
        self.mul_monomial(c, &vec![0; self.dim])
    }
}

impl std::ops::Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.plus(rhs)
    }
}

impl std::ops::Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.minus(rhs)
    }
}

impl std::ops::Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.negated()
    }
}

/// Panics on dimension mismatch; use [`LaurentPoly::checked_mul`] at API boundaries.
impl std::ops::Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs).expect("dimension mismatch")
    }
}

pub(crate) fn fmt_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub(crate) fn fmt_exponent(e: &[i32]) -> String {
    let parts: Vec<String> = e.iter().map(|x| x.to_string()).collect();
    format!("t^[{}]", parts.join(","))
}

/// Writes a sum of `coef * t^[..] * suffix` terms in canonical order.
pub(crate) fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (String, &'a Rational)>,
) -> fmt::Result {
    let mut first = true;
    for (body, c) in terms {
        let mag = fmt_rational(&c.abs());
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else if c.is_negative() {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        write!(f, "{mag} * {body}")?;
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().map(|(e, c)| (fmt_exponent(e), c)))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(dim: usize, i: usize) -> LaurentPoly {
        LaurentPoly::var(dim, i)
    }

    #[test]
    fn inverse_monomials_multiply_to_one() {
        let a = t(2, 0);
        let b = LaurentPoly::monomial(q(1), vec![-1, 0]);
        assert_eq!(&a * &b, LaurentPoly::one(2));
    }

    #[test]
    fn product_with_zero() {
        let a = &t(2, 0) + &t(2, 1);
        assert!((&a * &LaurentPoly::zero(2)).is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let (t1, t2) = (t(2, 0), t(2, 1));
        let lhs = &(&t1 + &t2) * &(&t1 - &t2);
        let rhs = LaurentPoly::from_terms(2, [(vec![2, 0], q(1)), (vec![0, 2], q(-1))]);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        assert_eq!(
            t(2, 0).checked_mul(&t(3, 0)),
            Err(Error::DimensionMismatch(2, 3))
        );
    }

    #[test]
    fn power_rule() {
        let cube = LaurentPoly::monomial(q(1), vec![3, 0]);
        assert_eq!(cube.partial(0).unwrap(), LaurentPoly::monomial(q(3), vec![2, 0]));
        assert!(t(2, 1).partial(0).unwrap().is_zero());
        let p = LaurentPoly::monomial(q(1), vec![-1, 1]);
        assert_eq!(p.partial(0).unwrap(), LaurentPoly::monomial(q(-1), vec![-2, 1]));
    }

    #[test]
    fn axis_out_of_range() {
        assert!(matches!(
            t(2, 0).partial(2),
            Err(Error::AxisOutOfRange { axis: 2, dim: 2 })
        ));
    }

    #[test]
    fn mixed_derivative_matches_iterated_partials() {
        let p = LaurentPoly::from_terms(2, [(vec![3, -2], q(5)), (vec![1, 1], qf(1, 2))]);
        let iter = p.partial(0).unwrap().partial(0).unwrap().partial(1).unwrap();
        assert_eq!(p.diff(&[2, 1]), iter);
    }

    use super::super::qf;
}
