use super::multiindex::{add_indices, leibniz_splits, order, unit_index, MultiIndex};
use crate::error::{Error, Result};
use crate::ring::{laurent::write_terms, LaurentPoly, Linear, Rational};
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

/// Where an operator takes its values.
///
/// `TopForm` operators store the coefficient of `dt1∧…∧dtd`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ValueTag {
    Scalar,
    TopForm,
}

/// A multidifferential operator `(a_1,…,a_n) ↦ Σ c · Π_j ∂^{α_j} a_j`.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiDiffOp {
    dim: usize,
    arity: usize,
    value: ValueTag,
    terms: BTreeMap<Vec<MultiIndex>, LaurentPoly>,
}

impl MultiDiffOp {
    pub fn zero(dim: usize, arity: usize, value: ValueTag) -> Self {
        MultiDiffOp {
            dim,
            arity,
            value,
            terms: BTreeMap::new(),
        }
    }

    /// The 0-cochain given by a function.
    pub fn function(f: LaurentPoly) -> Self {
        let mut op = Self::zero(f.dim(), 0, ValueTag::Scalar);
        op.add_term(vec![], f);
        op
    }

    /// Pointwise multiplication `m₀(a, b) = ab`.
    pub fn m0(dim: usize) -> Self {
        let mut op = Self::zero(dim, 2, ValueTag::Scalar);
        op.add_term(vec![vec![0; dim], vec![0; dim]], LaurentPoly::one(dim));
        op
    }

    /// The derivation `f ∂_axis`.
    pub fn derivation(f: LaurentPoly, axis: usize) -> Result<Self> {
        let dim = f.dim();
        if axis >= dim {
            return Err(Error::AxisOutOfRange { axis, dim });
        }
        let mut op = Self::zero(dim, 1, ValueTag::Scalar);
        op.add_term(vec![unit_index(dim, axis)], f);
        Ok(op)
    }

    /// Single-term operator `f · Π_j ∂^{α_j}`.
    pub fn single(f: LaurentPoly, slots: Vec<MultiIndex>, value: ValueTag) -> Result<Self> {
        let dim = f.dim();
        if let Some(a) = slots.iter().find(|a| a.len() != dim) {
            return Err(Error::DimensionMismatch(dim, a.len()));
        }
        let mut op = Self::zero(dim, slots.len(), value);
        op.add_term(slots, f);
        Ok(op)
    }

    pub fn with_value(mut self, value: ValueTag) -> Self {
        self.value = value;
        self
    }

    pub fn add_term(&mut self, slots: Vec<MultiIndex>, coeff: LaurentPoly) {
        debug_assert_eq!(slots.len(), self.arity);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(slots) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Degree in the shifted grading: `arity − 1`.
    pub fn degree(&self) -> i64 {
        self.arity as i64 - 1
    }

    pub fn value(&self) -> ValueTag {
        self.value
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<MultiIndex>, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Highest total derivative order in any slot.
    pub fn max_order(&self) -> u32 {
        self.terms
            .keys()
            .flat_map(|s| s.iter().map(|a| order(a)))
            .max()
            .unwrap_or(0)
    }

    /// True when the operator vanishes as soon as any argument is constant.
    pub fn is_normalized(&self) -> bool {
        self.terms
            .keys()
            .all(|slots| slots.iter().all(|a| order(a) > 0))
    }

    pub fn apply(&self, args: &[LaurentPoly]) -> Result<LaurentPoly> {
        if args.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: args.len(),
            });
        }
        if let Some(a) = args.iter().find(|a| a.dim() != self.dim) {
            return Err(Error::DimensionMismatch(self.dim, a.dim()));
        }
        let mut out = LaurentPoly::zero(self.dim);
        for (slots, c) in &self.terms {
            let mut prod = c.clone();
            for (alpha, a) in slots.iter().zip(args) {
                if prod.is_zero() {
                    break;
                }
                prod = &prod * &a.diff(alpha);
            }
            out = &out + &prod;
        }
        Ok(out)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        Ok(())
    }

    /// Insertion `φ ∘_pos ψ`: `ψ` fills slot `pos` of `φ`.
    pub fn compose_at(&self, pos: usize, psi: &Self) -> Result<Self> {
        self.check_compatible(psi)?;
        if psi.value != ValueTag::Scalar {
            return Err(Error::ValueTagMismatch("inserted operator must be scalar-valued"));
        }
        if pos >= self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: pos + 1,
            });
        }
        let q_ar = psi.arity;
        let mut out = Self::zero(self.dim, self.arity + q_ar - 1, self.value);
        for (phi_slots, phi_c) in &self.terms {
            let alpha = &phi_slots[pos];
            let splits = leibniz_splits(alpha, q_ar + 1);
            for (psi_slots, psi_c) in &psi.terms {
                for (w, parts) in &splits {
                    let dc = psi_c.diff(&parts[0]);
                    if dc.is_zero() {
                        continue;
                    }
                    let coeff = (&(phi_c * &dc)).scaled(w);
                    let mut slots = Vec::with_capacity(out.arity);
                    slots.extend_from_slice(&phi_slots[..pos]);
                    for (j, beta) in psi_slots.iter().enumerate() {
                        slots.push(add_indices(beta, &parts[j + 1]));
                    }
                    slots.extend_from_slice(&phi_slots[pos + 1..]);
                    out.add_term(slots, coeff);
                }
            }
        }
        Ok(out)
    }

    /// `φ ∘ ψ = Σ_i (−1)^{i(q−1)} φ ∘_i ψ` with `q = arity(ψ)`.
    pub fn pre_lie(&self, psi: &Self) -> Result<Self> {
        self.check_compatible(psi)?;
        let mut out = Self::zero(
            self.dim,
            (self.arity + psi.arity).saturating_sub(1),
            self.value,
        );
        if self.arity == 0 {
            return Ok(out);
        }
        for i in 0..self.arity {
            let term = self.compose_at(i, psi)?;
            let sign = if (i * (psi.arity + 1)) % 2 == 1 { -1 } else { 1 };
            out = out.plus(&term.signed(sign));
        }
        Ok(out)
    }

    /// Slot `k` receives the product `a_k a_{k+1}`; arity grows by one.
    pub(crate) fn split_slot(&self, k: usize) -> Self {
        let mut out = Self::zero(self.dim, self.arity + 1, self.value);
        for (slots, c) in &self.terms {
            for (w, parts) in leibniz_splits(&slots[k], 2) {
                let mut s = Vec::with_capacity(self.arity + 1);
                s.extend_from_slice(&slots[..k]);
                s.push(parts[0].clone());
                s.push(parts[1].clone());
                s.extend_from_slice(&slots[k + 1..]);
                out.add_term(s, c.scaled(&w));
            }
        }
        out
    }

    /// Inserts an undifferentiated slot at `pos`, i.e. multiplies the value by a new argument.
    pub(crate) fn insert_plain_slot(&self, pos: usize) -> Self {
        let mut out = Self::zero(self.dim, self.arity + 1, self.value);
        for (slots, c) in &self.terms {
            let mut s = slots.clone();
            s.insert(pos, vec![0; self.dim]);
            out.add_term(s, c.clone());
        }
        out
    }
}

/// Gerstenhaber bracket `[φ,ψ] = φ∘ψ − (−1)^{(p−1)(q−1)} ψ∘φ`.
pub fn gerstenhaber(phi: &MultiDiffOp, psi: &MultiDiffOp) -> Result<MultiDiffOp> {
    if phi.value != ValueTag::Scalar || psi.value != ValueTag::Scalar {
        return Err(Error::ValueTagMismatch("Gerstenhaber bracket needs scalar-valued operators"));
    }
    let a = phi.pre_lie(psi)?;
    let b = psi.pre_lie(phi)?;
    let sign = if (phi.degree() * psi.degree()).rem_euclid(2) == 1 {
        -1
    } else {
        1
    };
    Ok(a.minus(&b.signed(sign)))
}

/// `b^H φ = [m₀, φ]`.
pub fn cochain_differential(phi: &MultiDiffOp) -> Result<MultiDiffOp> {
    gerstenhaber(&MultiDiffOp::m0(phi.dim), phi)
}

/// Hochschild differential with values in a symmetric bimodule:
/// `a_1 φ(a_2,…) + Σ_i (−1)^i φ(…,a_i a_{i+1},…) + (−1)^{n+1} φ(…,a_n) a_{n+1}`.
///
/// For scalar operators this is `(−1)^{n−1} [m₀, φ]`.
pub fn valued_differential(phi: &MultiDiffOp) -> MultiDiffOp {
    let n = phi.arity;
    let mut out = phi.insert_plain_slot(0);
    for i in 0..n {
        let sign = if i % 2 == 0 { -1 } else { 1 };
        out = out.plus(&phi.split_slot(i).signed(sign));
    }
    let sign = if n % 2 == 0 { -1 } else { 1 };
    out.plus(&phi.insert_plain_slot(n).signed(sign))
}

impl Linear for MultiDiffOp {
    fn zero_like(&self) -> Self {
        Self::zero(self.dim, self.arity, self.value)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Panics on mismatched arity or value tag; such sums are meaningless.
    fn plus(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        assert_eq!(self.arity, other.arity, "arity mismatch");
        assert_eq!(self.value, other.value, "value tag mismatch");
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_term(s.clone(), c.clone());
        }
        out
    }

    fn scaled(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return self.zero_like();
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = v.scaled(c);
        }
        out
    }
}

fn fmt_slots(slots: &[MultiIndex]) -> String {
    let parts: Vec<String> = slots
        .iter()
        .map(|a| {
            let inner: Vec<String> = a.iter().map(|x| x.to_string()).collect();
            format!("D[{}]", inner.join(","))
        })
        .collect();
    format!("({})", parts.join(", "))
}

impl fmt::Display for MultiDiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Each coefficient polynomial is expanded into its monomials.
        let mut pieces: Vec<(String, Rational)> = Vec::new();
        for (slots, c) in &self.terms {
            for (e, coef) in c.terms() {
                let mono = crate::ring::laurent::fmt_exponent(e);
                pieces.push((format!("{} {}", mono, fmt_slots(slots)), coef.clone()));
            }
        }
        write_terms(f, pieces.iter().map(|(b, c)| (b.clone(), c)))
    }
}

impl fmt::Debug for MultiDiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiDiffOp[arity {}, {:?}]({})", self.arity, self.value, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::q;

    fn t(_dim: usize, e: &[i32]) -> LaurentPoly {
        LaurentPoly::monomial(q(1), e.to_vec())
    }

    #[test]
    fn m0_bracket_vanishes() {
        let m = MultiDiffOp::m0(2);
        assert!(gerstenhaber(&m, &m).unwrap().is_zero());
        assert!(cochain_differential(&m).unwrap().is_zero());
    }

    #[test]
    fn derivation_on_function() {
        let d = MultiDiffOp::derivation(LaurentPoly::one(1), 0).unwrap();
        let f = MultiDiffOp::function(t(1, &[3]));
        let br = gerstenhaber(&d, &f).unwrap();
        assert_eq!(br, MultiDiffOp::function(LaurentPoly::monomial(q(3), vec![2])));
    }

    #[test]
    fn commuting_derivations() {
        let d1 = MultiDiffOp::derivation(LaurentPoly::one(2), 0).unwrap();
        let d2 = MultiDiffOp::derivation(LaurentPoly::one(2), 1).unwrap();
        assert!(gerstenhaber(&d1, &d2).unwrap().is_zero());
    }

    #[test]
    fn derivation_is_closed() {
        let d = MultiDiffOp::derivation(t(2, &[1, -1]), 0).unwrap();
        assert!(cochain_differential(&d).unwrap().is_zero());
    }

    #[test]
    fn second_derivative_differential() {
        let d2 = MultiDiffOp::single(LaurentPoly::one(1), vec![vec![2]], ValueTag::Scalar).unwrap();
        let b = cochain_differential(&d2).unwrap();
        let expected =
            MultiDiffOp::single(LaurentPoly::constant(1, q(-2)), vec![vec![1], vec![1]], ValueTag::Scalar)
                .unwrap();
        assert_eq!(b, expected);
        // valued_differential agrees up to (−1)^{n−1}
        assert_eq!(valued_differential(&d2), expected);
    }

    #[test]
    fn apply_evaluates() {
        let op = MultiDiffOp::single(t(1, &[1]), vec![vec![1], vec![0]], ValueTag::Scalar).unwrap();
        let v = op.apply(&[t(1, &[2]), t(1, &[-1])]).unwrap();
        assert_eq!(v, LaurentPoly::monomial(q(2), vec![1]));
        assert!(op.apply(&[t(1, &[2])]).is_err());
    }

    #[test]
    fn normalization_flag() {
        assert!(!MultiDiffOp::m0(1).is_normalized());
        assert!(MultiDiffOp::derivation(LaurentPoly::one(1), 0).unwrap().is_normalized());
    }
}
