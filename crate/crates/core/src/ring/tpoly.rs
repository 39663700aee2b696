use super::{q, Linear, Rational};

/// Polynomial in an auxiliary scalar parameter `t` with coefficients in `X`.
///
/// Used to state identities that hold for all `t` as polynomial identities,
/// and to differentiate in `t` exactly.
#[derive(Clone, Debug)]
pub struct TPoly<X> {
    coeffs: Vec<X>,
}

impl<X: Linear> TPoly<X> {
    pub fn constant(x: X) -> Self {
        TPoly { coeffs: vec![x] }
    }

    /// `x·t^m`.
    pub fn monomial(x: X, m: usize) -> Self {
        let mut coeffs = vec![x.zero_like(); m + 1];
        coeffs[m] = x;
        TPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[X] {
        &self.coeffs
    }

    pub fn degree_bound(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() == 1 {
            return TPoly::constant(self.coeffs[0].zero_like());
        }
        TPoly {
            coeffs: self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(m, x)| x.scaled(&q(m as i64 + 1)))
                .collect(),
        }
    }

    pub fn eval(&self, t: &Rational) -> X {
        let mut acc = self.coeffs[self.coeffs.len() - 1].clone();
        for x in self.coeffs.iter().rev().skip(1) {
            acc = acc.scaled(t).plus(x);
        }
        acc
    }

    pub fn map<Y: Linear>(&self, f: impl Fn(&X) -> Y) -> TPoly<Y> {
        TPoly {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Applies a `t`-dependent operator `f` (returning a polynomial in `t`)
    /// to every coefficient and collects powers of `t`.
    pub fn then<Y: Linear>(&self, f: impl Fn(&X) -> TPoly<Y>) -> TPoly<Y> {
        let mut acc: Option<TPoly<Y>> = None;
        for (m, x) in self.coeffs.iter().enumerate() {
            let y = f(x).shift(m);
            acc = Some(match acc {
                Some(a) => a.plus(&y),
                None => y,
            });
        }
        acc.expect("nonempty")
    }

    /// Fallible [`TPoly::then`].
    pub fn try_then<Y: Linear, E>(&self, f: impl Fn(&X) -> Result<TPoly<Y>, E>) -> Result<TPoly<Y>, E> {
        let mut acc: Option<TPoly<Y>> = None;
        for (m, x) in self.coeffs.iter().enumerate() {
            let y = f(x)?.shift(m);
            acc = Some(match acc {
                Some(a) => a.plus(&y),
                None => y,
            });
        }
        Ok(acc.expect("nonempty"))
    }

    /// Multiplication by `t^m`.
    pub fn shift(&self, m: usize) -> Self {
        let z = self.coeffs[0].zero_like();
        let mut coeffs = vec![z; m];
        coeffs.extend(self.coeffs.iter().cloned());
        TPoly { coeffs }
    }
}

impl<X: Linear> PartialEq for TPoly<X> {
    fn eq(&self, other: &Self) -> bool {
        self.minus(other).is_zero()
    }
}

impl<X: Linear> Linear for TPoly<X> {
    fn zero_like(&self) -> Self {
        TPoly::constant(self.coeffs[0].zero_like())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
    fn plus(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = self.coeffs[0].zero_like();
        TPoly {
            coeffs: (0..n)
                .map(|m| {
                    let a = self.coeffs.get(m).unwrap_or(&z);
                    let b = other.coeffs.get(m).unwrap_or(&z);
                    a.plus(b)
                })
                .collect(),
        }
    }
    fn scaled(&self, c: &Rational) -> Self {
        self.map(|x| x.scaled(c))
    }
}

#[cfg(test)]
mod tests {
    use super::super::qf;
    use super::*;

    #[test]
    fn derivative_and_eval() {
        // 1 + 2t + 3t^2
        let p = TPoly::constant(q(1))
            .plus(&TPoly::monomial(q(2), 1))
            .plus(&TPoly::monomial(q(3), 2));
        assert_eq!(p.eval(&qf(1, 2)), qf(11, 4));
        assert_eq!(p.derivative().eval(&q(1)), q(8));
    }
}
