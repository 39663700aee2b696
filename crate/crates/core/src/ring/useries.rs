use super::{Linear, Rational};
use crate::error::{Error, Result};

/// Power series in `u` truncated after `u^ucap`.
///
/// `coeffs[j]` is the coefficient of `u^j`; the vector always has length
/// `ucap + 1`, and every identity is read modulo `u^(ucap+1)`.
#[derive(Clone, PartialEq, Debug)]
pub struct USeries<X> {
    coeffs: Vec<X>,
}

impl<X: Linear> USeries<X> {
    /// Panics when `coeffs` is empty.
    pub fn from_coeffs(coeffs: Vec<X>) -> Self {
        assert!(!coeffs.is_empty(), "a u-series needs at least the u^0 coefficient");
        USeries { coeffs }
    }

    /// `x·u^0`, padded with zeros up to `ucap`.
    pub fn constant(x: X, ucap: usize) -> Self {
        Self::monomial(x, 0, ucap)
    }

    /// `x·u^j` (zero if `j > ucap`).
    pub fn monomial(x: X, j: usize, ucap: usize) -> Self {
        let z = x.zero_like();
        let mut coeffs = vec![z; ucap + 1];
        if j <= ucap {
            coeffs[j] = x;
        }
        USeries { coeffs }
    }

    pub fn ucap(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, j: usize) -> &X {
        &self.coeffs[j]
    }

    pub fn coeffs(&self) -> &[X] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<X> {
        self.coeffs
    }

    /// Keeps coefficients up to `u^ucap`, padding with zeros when growing.
    pub fn with_ucap(&self, ucap: usize) -> Self {
        let z = self.coeffs[0].zero_like();
        let mut coeffs: Vec<X> = self.coeffs.iter().take(ucap + 1).cloned().collect();
        coeffs.resize(ucap + 1, z);
        USeries { coeffs }
    }

    /// Multiplication by `u`, keeping the cap.
    pub fn mul_u(&self) -> Self {
        let z = self.coeffs[0].zero_like();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        coeffs.push(z);
        coeffs.extend(self.coeffs[..self.coeffs.len() - 1].iter().cloned());
        USeries { coeffs }
    }

    /// Division by `u`. The top coefficient becomes indeterminate, so the
    /// cap drops by one.
    pub fn div_u(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        if self.coeffs.len() < 2 {
            return Err(Error::UCapExhausted);
        }
        Ok(USeries {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    pub fn map<Y: Linear>(&self, f: impl Fn(&X) -> Y) -> USeries<Y> {
        USeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// `u`-bilinear extension of `f`, truncated at `min` of both caps.
    pub fn bilinear<Y: Linear, Z: Linear>(
        &self,
        other: &USeries<Y>,
        f: impl Fn(&X, &Y) -> Z,
    ) -> USeries<Z> {
        let cap = self.ucap().min(other.ucap());
        let mut out: Vec<Option<Z>> = (0..=cap).map(|_| None).collect();
        for (j, x) in self.coeffs.iter().enumerate().take(cap + 1) {
            if x.is_zero() {
                continue;
            }
            for (k, y) in other.coeffs.iter().enumerate().take(cap + 1 - j) {
                if y.is_zero() {
                    continue;
                }
                let z = f(x, y);
                let slot = &mut out[j + k];
                *slot = Some(match slot.take() {
                    Some(acc) => acc.plus(&z),
                    None => z,
                });
            }
        }
        let zero = f(&self.coeffs[0], &other.coeffs[0]).zero_like();
        USeries {
            coeffs: out.into_iter().map(|o| o.unwrap_or_else(|| zero.clone())).collect(),
        }
    }

    /// Sum of `f(coefficient)·u^j`, where `f` produces series itself; used
    /// when an operator is `u`-linear.
    pub fn apply_linear<Y: Linear>(&self, f: impl Fn(&X) -> USeries<Y>, zero: Y) -> USeries<Y> {
        let cap = self.ucap();
        let mut acc = USeries::constant(zero, cap);
        for (j, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let mut y = f(x).with_ucap(cap);
            for _ in 0..j {
                y = y.mul_u();
            }
            acc = acc.plus(&y);
        }
        acc
    }
}

impl<X: Linear> Linear for USeries<X> {
    fn zero_like(&self) -> Self {
        self.map(|x| x.zero_like())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
    fn plus(&self, other: &Self) -> Self {
        let cap = self.ucap().min(other.ucap());
        USeries {
            coeffs: (0..=cap).map(|j| self.coeffs[j].plus(&other.coeffs[j])).collect(),
        }
    }
    fn scaled(&self, c: &Rational) -> Self {
        self.map(|x| x.scaled(c))
    }
}

#[cfg(test)]
mod tests {
    use super::super::{q, LaurentPoly};
    use super::*;

    fn x() -> LaurentPoly {
        LaurentPoly::var(2, 0)
    }
    fn y() -> LaurentPoly {
        LaurentPoly::var(2, 1)
    }

    #[test]
    fn div_u_of_u_times_x() {
        let s = USeries::monomial(x(), 1, 4);
        let d = s.div_u().unwrap();
        assert_eq!(d.ucap(), 3);
        assert_eq!(d, USeries::constant(x(), 3));
    }

    #[test]
    fn div_u_of_zero() {
        let s = USeries::constant(LaurentPoly::zero(2), 4);
        assert!(s.div_u().unwrap().is_zero());
    }

    #[test]
    fn div_u_shifts_indices() {
        let s = USeries::monomial(x(), 2, 4).plus(&USeries::monomial(y(), 3, 4));
        let expect = USeries::monomial(x(), 1, 3).plus(&USeries::monomial(y(), 2, 3));
        assert_eq!(s.div_u().unwrap(), expect);
    }

    #[test]
    fn div_u_rejects_constant_term() {
        let s = USeries::constant(x(), 2);
        assert_eq!(s.div_u(), Err(Error::NonzeroConstantTerm));
    }

    #[test]
    fn div_u_inverts_mul_u() {
        let s = USeries::from_coeffs(vec![x(), y(), x().scaled(&q(3)), y(), x()]);
        assert_eq!(s.mul_u().div_u().unwrap(), s.with_ucap(3));
    }
}
