use super::ops::{MultiDiffOp, ValueTag};
use crate::cartan::{de_rham, wedge, DiffForm};
use crate::error::{Error, Result};
use crate::ring::{laurent::fmt_rational, q, Exponent, LaurentPoly, Linear, Rational, USeries};
use num_traits::{One, Signed};
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

/// Normalized Hochschild chain, stored as a sum of monomial tensors
/// `c · t^{e_0} ⊗ t^{e_1} ⊗ … ⊗ t^{e_n}`.
///
/// Terms with a constant monomial in any slot past the first are zero in
/// `A ⊗ Ā^{⊗n}` and are dropped on insertion. Terms of different lengths may
/// coexist.
#[derive(Clone, PartialEq, Eq)]
pub struct HochChain {
    dim: usize,
    terms: BTreeMap<Vec<Exponent>, Rational>,
}

pub type UHochChain = USeries<HochChain>;

fn is_unit(e: &[i32]) -> bool {
    e.iter().all(|&x| x == 0)
}

fn add_exp(a: &[i32], b: &[i32]) -> Exponent {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

impl HochChain {
    pub fn zero(dim: usize) -> Self {
        HochChain {
            dim,
            terms: BTreeMap::new(),
        }
    }

    /// The elementary tensor `a_0 ⊗ ā_1 ⊗ … ⊗ ā_n`, expanded multilinearly.
    pub fn tensor(slots: &[LaurentPoly]) -> Result<Self> {
        let first = slots.first().ok_or(Error::LengthMismatch(1, 0))?;
        let dim = first.dim();
        if let Some(a) = slots.iter().find(|a| a.dim() != dim) {
            return Err(Error::DimensionMismatch(dim, a.dim()));
        }
        let mut out = Self::zero(dim);
        out.add_tensor(&q(1), slots);
        Ok(out)
    }

    /// Adds `c · a_0 ⊗ … ⊗ a_n` for polynomial slots.
    pub fn add_tensor(&mut self, c: &Rational, slots: &[LaurentPoly]) {
        let mut partial: Vec<(Vec<Exponent>, Rational)> = vec![(Vec::new(), c.clone())];
        for (k, a) in slots.iter().enumerate() {
            let mut next = Vec::new();
            for (key, coef) in &partial {
                for (e, x) in a.terms() {
                    if k > 0 && is_unit(e) {
                        continue;
                    }
                    let mut key = key.clone();
                    key.push(e.clone());
                    next.push((key, coef * x));
                }
            }
            partial = next;
        }
        for (key, coef) in partial {
            self.add_monomial(key, coef);
        }
    }

    /// Adds `c · t^{e_0} ⊗ …`; normalization is applied here.
    pub fn add_monomial(&mut self, key: Vec<Exponent>, c: Rational) {
        if c.is_zero() || key.iter().skip(1).any(|e| is_unit(e)) {
            return;
        }
        debug_assert!(key.iter().all(|e| e.len() == self.dim));
        match self.terms.entry(key) {
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

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Exponent>, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Distinct lengths `n` (number of slots minus one) present.
    pub fn lengths(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.terms.keys().map(|k| k.len() - 1).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn is_normalized(&self) -> bool {
        self.terms
            .keys()
            .all(|k| k.iter().skip(1).all(|e| !is_unit(e)))
    }

    fn mono(&self, e: &[i32]) -> LaurentPoly {
        LaurentPoly::monomial(q(1), e.to_vec())
    }
}

fn sign(odd: bool) -> Rational {
    if odd {
        q(-1)
    } else {
        q(1)
    }
}

/// `b_H(a_0⊗…⊗a_n) = Σ_{i<n} (−1)^i …⊗a_i a_{i+1}⊗… + (−1)^n a_n a_0 ⊗ a_1 ⊗ …`.
pub fn chain_boundary(c: &HochChain) -> HochChain {
    let mut out = HochChain::zero(c.dim);
    for (key, coef) in &c.terms {
        let n = key.len() - 1;
        for i in 0..n {
            let mut k = Vec::with_capacity(n);
            k.extend_from_slice(&key[..i]);
            k.push(add_exp(&key[i], &key[i + 1]));
            k.extend_from_slice(&key[i + 2..]);
            out.add_monomial(k, sign(i % 2 == 1) * coef);
        }
        if n > 0 {
            let mut k = Vec::with_capacity(n);
            k.push(add_exp(&key[n], &key[0]));
            k.extend_from_slice(&key[1..n]);
            out.add_monomial(k, sign(n % 2 == 1) * coef);
        }
    }
    out
}

/// Action of a scalar multidifferential operator on chains.
///
/// Wrap-around terms feed `a_{j+1},…,a_n,a_0,…` into the operator and put the
/// result in slot 0; interior terms replace a consecutive block.
pub fn cochain_action(d_op: &MultiDiffOp, c: &HochChain) -> Result<HochChain> {
    if d_op.value() != ValueTag::Scalar {
        return Err(Error::ValueTagMismatch("chain action needs a scalar-valued operator"));
    }
    if d_op.dim() != c.dim {
        return Err(Error::DimensionMismatch(d_op.dim(), c.dim));
    }
    let d = d_op.arity();
    let mut out = HochChain::zero(c.dim);
    for (key, coef) in &c.terms {
        let n = key.len() - 1;
        if d > n + 1 {
            continue;
        }
        let slots: Vec<LaurentPoly> = key.iter().map(|e| c.mono(e)).collect();
        // wrap-around part, j = n−d+1 … n
        if d >= 1 {
            for j in (n + 1 - d)..=n {
                let wrap = d + j - n; // a_0 … a_{wrap−1} enter the operator
                let mut args: Vec<LaurentPoly> = slots[j + 1..].to_vec();
                args.extend_from_slice(&slots[..wrap]);
                let v = d_op.apply(&args)?;
                let mut tensor = vec![v];
                tensor.extend_from_slice(&slots[wrap..=j]);
                let s = sign((n * (j + 1)) % 2 == 1) * coef;
                out.add_tensor(&s, &tensor);
            }
        }
        // interior part, i = 0 … n−d
        if n + 1 > d {
            for i in 0..=(n - d) {
                let v = d_op.apply(&slots[i + 1..i + 1 + d])?;
                let mut tensor: Vec<LaurentPoly> = slots[..=i].to_vec();
                tensor.push(v);
                tensor.extend_from_slice(&slots[i + 1 + d..]);
                let odd = ((d + 1) * (i + 1)) % 2 == 1;
                out.add_tensor(&(sign(odd) * coef), &tensor);
            }
        }
    }
    Ok(out)
}

/// Connes' `B(a_0⊗…⊗a_n) = Σ_j (−1)^{jn} 1⊗a_j⊗…⊗a_n⊗a_0⊗…⊗a_{j−1}`.
pub fn connes_b(c: &HochChain) -> HochChain {
    let mut out = HochChain::zero(c.dim);
    let unit = vec![0; c.dim];
    for (key, coef) in &c.terms {
        let n = key.len() - 1;
        for j in 0..=n {
            let mut k = Vec::with_capacity(n + 2);
            k.push(unit.clone());
            k.extend_from_slice(&key[j..]);
            k.extend_from_slice(&key[..j]);
            out.add_monomial(k, sign((j * n) % 2 == 1) * coef);
        }
    }
    out
}

/// `a_0⊗ā_1⊗…⊗ā_n ↦ (1/n!) a_0 da_1∧…∧da_n`.
pub fn hkr_chains(c: &HochChain) -> DiffForm {
    let mut out = DiffForm::zero(c.dim);
    for (key, coef) in &c.terms {
        let n = key.len() - 1;
        let mut form = DiffForm::scalar(c.mono(&key[0]));
        for e in &key[1..] {
            let da = de_rham(&DiffForm::scalar(c.mono(e)));
            form = wedge(&form, &da).expect("dimensions agree");
        }
        let fact: Rational = (1..=n as i64).fold(q(1), |acc, k| acc * q(k));
        out = out.plus(&form.scaled(&(coef / fact)));
    }
    out
}

impl Linear for HochChain {
    fn zero_like(&self) -> Self {
        Self::zero(self.dim)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn plus(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_monomial(k.clone(), c.clone());
        }
        out
    }

    fn scaled(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return self.zero_like();
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v *= c;
        }
        out
    }
}

fn fmt_monomial(e: &[i32]) -> String {
    let mut parts = Vec::new();
    for (i, &x) in e.iter().enumerate() {
        match x {
            0 => {}
            1 => parts.push(format!("t{}", i + 1)),
            _ => parts.push(format!("t{}^{}", i + 1, x)),
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

impl fmt::Display for HochChain {
    /// Terms in descending key order, e.g. `1 (x) t1 (x) t2 - 1 (x) t2 (x) t1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (key, c)) in self.terms.iter().rev().enumerate() {
            let body: Vec<String> = key.iter().map(|e| fmt_monomial(e)).collect();
            let body = body.join(" (x) ");
            let neg = c.is_negative();
            let mag = c.abs();
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if mag.is_one() {
                write!(f, "{}", body)?;
            } else {
                write!(f, "{} * {}", fmt_rational(&mag), body)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for HochChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HochChain({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::DiffForm;

    fn t(e: &[i32]) -> LaurentPoly {
        LaurentPoly::monomial(q(1), e.to_vec())
    }

    #[test]
    fn boundary_examples() {
        let c = HochChain::tensor(&[t(&[1]), t(&[2])]).unwrap();
        assert!(chain_boundary(&c).is_zero());
        let c0 = HochChain::tensor(&[t(&[3])]).unwrap();
        assert!(chain_boundary(&c0).is_zero());
        let (a0, a1, a2) = (t(&[1, 0]), t(&[0, 1]), t(&[2, 1]));
        let c = HochChain::tensor(&[a0.clone(), a1.clone(), a2.clone()]).unwrap();
        let mut expected = HochChain::tensor(&[&a0 * &a1, a2.clone()]).unwrap();
        expected.add_tensor(&q(-1), &[a0.clone(), &a1 * &a2]);
        expected.add_tensor(&q(1), &[&a2 * &a0, a1.clone()]);
        assert_eq!(chain_boundary(&c), expected);
    }

    #[test]
    fn normalization_drops_constants() {
        let c = HochChain::tensor(&[t(&[1]), LaurentPoly::constant(1, q(5))]).unwrap();
        assert!(c.is_zero());
        let c = HochChain::tensor(&[t(&[1]), &t(&[1]) + &LaurentPoly::one(1)]).unwrap();
        assert_eq!(c, HochChain::tensor(&[t(&[1]), t(&[1])]).unwrap());
    }

    #[test]
    fn m0_action_is_boundary() {
        let c = HochChain::tensor(&[t(&[1, 0]), t(&[0, 1]), t(&[2, 1]), t(&[-1, 0])]).unwrap();
        let l = cochain_action(&MultiDiffOp::m0(2), &c).unwrap();
        assert_eq!(l, chain_boundary(&c));
    }

    #[test]
    fn derivation_action() {
        let c = HochChain::tensor(&[t(&[2]), t(&[3])]).unwrap();
        let d = MultiDiffOp::derivation(LaurentPoly::one(1), 0).unwrap();
        let mut expected = HochChain::zero(1);
        expected.add_tensor(&q(2), &[t(&[1]), t(&[3])]);
        expected.add_tensor(&q(3), &[t(&[2]), t(&[2])]);
        assert_eq!(cochain_action(&d, &c).unwrap(), expected);
        let c0 = HochChain::tensor(&[t(&[2])]).unwrap();
        assert!(cochain_action(&MultiDiffOp::m0(1), &c0).unwrap().is_zero());
    }

    #[test]
    fn connes_examples() {
        let c = HochChain::tensor(&[t(&[1, 0]), t(&[0, 1])]).unwrap();
        assert_eq!(connes_b(&c).to_string(), "1 (x) t1 (x) t2 - 1 (x) t2 (x) t1");
        assert!(connes_b(&HochChain::tensor(&[LaurentPoly::one(2)]).unwrap()).is_zero());
        let c = HochChain::tensor(&[t(&[0, 3])]).unwrap();
        assert_eq!(connes_b(&c).to_string(), "1 (x) t2^3");
    }

    #[test]
    fn hkr_examples() {
        let c = HochChain::tensor(&[t(&[1, 0]), t(&[0, 1])]).unwrap();
        assert_eq!(hkr_chains(&c), DiffForm::term(t(&[1, 0]), &[1]).unwrap());
        let c = HochChain::tensor(&[t(&[1, 2]), t(&[0, 1]), t(&[1, 0])]).unwrap();
        assert!(hkr_chains(&chain_boundary(&c)).is_zero());
        assert_eq!(hkr_chains(&connes_b(&c)), de_rham(&hkr_chains(&c)));
    }
}
