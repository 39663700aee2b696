//! Integration pairings that involve Hochschild (co)chains.

use super::volume::VolumeForm;
use crate::error::{Error, Result};
use crate::hochschild::{multiindex::leibniz_splits, HochChain, MultiDiffOp, ValueTag};
use crate::ring::{q, LaurentPoly, Linear, Rational};

/// `⟨φ, a_0⊗…⊗a_n⟩ = ∫ a_0 φ(a_1,…,a_n)`, with `φ` valued in top forms.
pub fn pair_cochain_chain(phi: &MultiDiffOp, c: &HochChain) -> Result<Rational> {
    if phi.value() != ValueTag::TopForm {
        return Err(Error::ValueTagMismatch("pairing needs a top-form valued cochain"));
    }
    if phi.dim() != c.dim() {
        return Err(Error::DimensionMismatch(phi.dim(), c.dim()));
    }
    let dim = c.dim();
    let residue = vec![-1; dim];
    let mut total = q(0);
    for (key, coef) in c.terms() {
        if key.len() != phi.arity() + 1 {
            return Err(Error::ArityMismatch {
                expected: phi.arity(),
                found: key.len() - 1,
            });
        }
        let args: Vec<LaurentPoly> = key[1..]
            .iter()
            .map(|e| LaurentPoly::monomial(q(1), e.clone()))
            .collect();
        let value = phi.apply(&args)?;
        total += value.mul_monomial(coef, &key[0]).coeff(&residue);
    }
    Ok(total)
}

/// The operator `D†` with `∫ (Df) g Ω = ∫ f (D†g) Ω`.
///
/// `D†g = ρ⁻¹ Σ_α (−1)^{|α|} ∂^α(c_α ρ g)`, expanded by Leibniz.
pub fn formal_adjoint_diffop(d_op: &MultiDiffOp, vol: &VolumeForm) -> Result<MultiDiffOp> {
    if d_op.arity() != 1 {
        return Err(Error::ArityMismatch {
            expected: 1,
            found: d_op.arity(),
        });
    }
    if d_op.dim() != vol.dim() {
        return Err(Error::DimensionMismatch(d_op.dim(), vol.dim()));
    }
    let rho = vol.density();
    let mut out = MultiDiffOp::zero(d_op.dim(), 1, d_op.value());
    for (slots, c) in d_op.terms() {
        let alpha = &slots[0];
        let odd = alpha.iter().sum::<u32>() % 2 == 1;
        let h = c * &rho;
        for (w, parts) in leibniz_splits(alpha, 2) {
            let coeff = vol
                .divide_by_density(&h.diff(&parts[0]))
                .scaled(&if odd { -w } else { w });
            out = out.plus(&MultiDiffOp::single(coeff, vec![parts[1].clone()], d_op.value())?);
        }
    }
    Ok(out)
}
