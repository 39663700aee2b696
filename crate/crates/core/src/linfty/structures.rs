//! Concrete L∞ structures used by the identity checks.

use super::family::{dgla_to_linfty, module_to_linfty, AlgebraFamily, FamilyKind, TaylorFamily};
use super::graded::{sign, Graded};
use crate::cartan::{
    de_rham, divergence, lie_derivative, schouten, DiffForm, MultiVector, UVTop, VTop, VolumeForm,
};
use crate::error::{Error, Result};
use crate::extended::hkr_vt;
use crate::hochschild::{
    chain_boundary, cochain_action, cochain_differential, connes_b, gerstenhaber, hkr_chains, HochChain,
    MultiDiffOp, UHochChain, ValueTag,
};
use crate::ring::{q, Linear, Rational, USeries};
use crate::uactions::{action_lt, action_lt_dual, action_lt_poly_without_div, dual_differential, iota_plus_over_u, UDiffForm, UMultiVector};
use std::sync::Arc;

fn u_div(vol: &VolumeForm, x: &UMultiVector) -> Result<UMultiVector> {
    let coeffs: Result<Vec<MultiVector>> = x.coeffs().iter().map(|c| divergence(vol, c)).collect();
    Ok(USeries::from_coeffs(coeffs?).mul_u())
}

fn u_schouten(a: &UMultiVector, b: &UMultiVector) -> Result<UMultiVector> {
    let (da, db) = (a.coeff(0).dim(), b.coeff(0).dim());
    if da != db {
        return Err(Error::DimensionMismatch(da, db));
    }
    Ok(a.bilinear(b, |x, y| schouten(x, y).expect("dimensions checked")))
}

/// `(T[[u]], u div, [ , ])` for the given volume form.
pub fn polyvector_dgla(vol: &VolumeForm) -> AlgebraFamily<UMultiVector> {
    let vol = vol.clone();
    dgla_to_linfty(
        Some(Arc::new(move |x: &UMultiVector| u_div(&vol, x))),
        Some(Arc::new(|a: &UMultiVector, b: &UMultiVector| u_schouten(a, b))),
    )
}

/// Negative control: `Q_2 = −[x_1,x_2]` without the parity factor.
pub fn polyvector_dgla_without_parity(vol: &VolumeForm) -> AlgebraFamily<UMultiVector> {
    let vol = vol.clone();
    AlgebraFamily::new()
        .with(1, Arc::new(move |xs: &[UMultiVector]| u_div(&vol, &xs[0])))
        .with(2, Arc::new(|xs: &[UMultiVector]| Ok(u_schouten(&xs[0], &xs[1])?.negated())))
}

/// `(T, 0, [ , ])` without `u`.
pub fn polyvector_dgla_flat() -> AlgebraFamily<MultiVector> {
    dgla_to_linfty(None, Some(Arc::new(|a: &MultiVector, b: &MultiVector| schouten(a, b))))
}

/// Scalar multidifferential cochains with `d = [m_0, ·]` and the Gerstenhaber bracket.
pub fn cochain_dgla() -> AlgebraFamily<MultiDiffOp> {
    dgla_to_linfty(
        Some(Arc::new(|x: &MultiDiffOp| cochain_differential(x))),
        Some(Arc::new(|a: &MultiDiffOp, b: &MultiDiffOp| gerstenhaber(a, b))),
    )
}

/// `u d` on form series.
pub fn u_de_rham(a: &UDiffForm) -> UDiffForm {
    a.map(de_rham).mul_u()
}

/// `(Ω[[u]], u d)` with the action `L^(t)`.
pub fn forms_module(t: Rational, vol: &VolumeForm) -> TaylorFamily<UMultiVector, UDiffForm, UDiffForm> {
    let vol = vol.clone();
    module_to_linfty(
        Some(Arc::new(|a: &UDiffForm| Ok(u_de_rham(a)))),
        Some(Arc::new(move |g: &UMultiVector, a: &UDiffForm| action_lt(&t, &vol, g, a))),
    )
}

/// Negative control: `L^(1)` without its divergence term.
pub fn forms_module_without_div(vol: &VolumeForm) -> TaylorFamily<UMultiVector, UDiffForm, UDiffForm> {
    let vol = vol.clone();
    module_to_linfty(
        Some(Arc::new(|a: &UDiffForm| Ok(u_de_rham(a)))),
        Some(Arc::new(move |g: &UMultiVector, a: &UDiffForm| {
            Ok(action_lt_poly_without_div(&vol, g, a)?.eval(&q(1)))
        })),
    )
}

/// `(Ω[[u]], u d)` over `(T, 0, [ , ])` with the Lie derivative applied coefficientwise.
pub fn forms_module_flat() -> TaylorFamily<MultiVector, UDiffForm, UDiffForm> {
    module_to_linfty(
        Some(Arc::new(|a: &UDiffForm| Ok(u_de_rham(a)))),
        Some(Arc::new(|g: &MultiVector, a: &UDiffForm| {
            let parts: Result<Vec<DiffForm>> = a.coeffs().iter().map(|c| lie_derivative(g, c)).collect();
            Ok(USeries::from_coeffs(parts?))
        })),
    )
}

/// The `u = 0` evaluation `T[[u]] → T`, a strict dgla morphism.
pub fn u_zero_projection() -> Arc<dyn Fn(&UMultiVector) -> Result<MultiVector> + Send + Sync> {
    Arc::new(|x: &UMultiVector| Ok(x.coeff(0).clone()))
}

/// `(VT[[u]], δ)` with the dual action of `L^(t)`.
pub fn dual_vtop_module(t: Rational, vol: &VolumeForm) -> TaylorFamily<UMultiVector, UVTop, UVTop> {
    let vol = vol.clone();
    module_to_linfty(
        Some(Arc::new(dual_differential)),
        Some(Arc::new(move |g: &UMultiVector, x: &UVTop| action_lt_dual(&t, &vol, g, x))),
    )
}

/// `(T[[u]], u div)` as a module with no action.
pub fn trivial_module(vol: &VolumeForm) -> TaylorFamily<UMultiVector, UMultiVector, UMultiVector> {
    let vol = vol.clone();
    module_to_linfty(Some(Arc::new(move |x: &UMultiVector| u_div(&vol, x))), None)
}

/// `b_H + u B` on chain series.
pub fn chain_differential(c: &UHochChain) -> UHochChain {
    let b = c.map(chain_boundary);
    let big_b = c.map(connes_b).mul_u();
    b.plus(&big_b)
}

fn act_u(op: &MultiDiffOp, c: &UHochChain) -> Result<UHochChain> {
    let parts: Result<Vec<HochChain>> = c.coeffs().iter().map(|x| cochain_action(op, x)).collect();
    Ok(USeries::from_coeffs(parts?))
}

/// `(C_•(A)[[u]], b_H + uB)` over the scalar cochains acting by `L_D`.
pub fn chains_module_cochain() -> TaylorFamily<MultiDiffOp, UHochChain, UHochChain> {
    module_to_linfty(
        Some(Arc::new(|c: &UHochChain| Ok(chain_differential(c)))),
        Some(Arc::new(act_u)),
    )
}

/// Antisymmetrized multiderivation `(a_1,…,a_k) ↦ ι_γ(da_1∧…∧da_k)` of a
/// multivector, one cochain per rank.
pub fn hkr_cochains(gamma: &MultiVector) -> Result<Vec<MultiDiffOp>> {
    let dim = gamma.dim();
    let flat = VolumeForm::new(q(1), vec![1; dim])?;
    gamma
        .homogeneous_parts()
        .into_iter()
        .map(|(_, part)| Ok(hkr_vt(&VTop::new(part, flat.clone())?)?.with_value(ValueTag::Scalar)))
        .collect()
}

/// Chains over `T[[u]]`: `P̃_0 = b_H + uB` and `P̃_1(x; c) = −(−1)^{|x|} L_{HKR(x_0)} c`.
///
/// The action goes through the `u = 0` part and the HKR cochain map, which is
/// not a Lie morphism, so this is a module only up to the arity-1 level.
pub fn chains_module_hkr() -> TaylorFamily<UMultiVector, UHochChain, UHochChain> {
    module_to_linfty(
        Some(Arc::new(|c: &UHochChain| Ok(chain_differential(c)))),
        Some(Arc::new(|g: &UMultiVector, c: &UHochChain| {
            let mut acc = c.zero_like();
            for op in hkr_cochains(g.coeff(0))? {
                acc = acc.plus(&act_u(&op, c)?);
            }
            Ok(acc)
        })),
    )
}

/// Chains over `T[[u]]` with `b_H + uB` and no action.
pub fn chains_module_trivial() -> TaylorFamily<UMultiVector, UHochChain, UHochChain> {
    module_to_linfty(Some(Arc::new(|c: &UHochChain| Ok(chain_differential(c)))), None)
}

/// `φ_0 = HKR` from chains to forms, extended `u`-linearly; no higher terms.
pub fn hkr_morphism() -> TaylorFamily<UMultiVector, UHochChain, UDiffForm> {
    TaylorFamily::new(FamilyKind::ModuleMorphism).with(
        0,
        Arc::new(|_: &[UMultiVector], c: &UHochChain| Ok(c.map(hkr_chains))),
    )
}

/// Normalization of the exponential Taylor coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExpNormalization {
    /// Multilinear coefficients `H_n = h_1∘…∘h_1`.
    Plain,
    /// Operator coefficients carrying `1/n!`.
    Factorial,
}

/// Taylor coefficients of `H^(1)` as a module morphism `(Ω, L^(0)) → (Ω, L^(1))`:
/// `H_n(γ_1,…,γ_n; α) = c_n Π_k (−(−1)^{|γ_k|} s ι⁺_{γ_k}/u) α`, with
/// `c_n = 1` or `1/n!`.
///
/// Each factor loses one power of `u`, so `H_n` is exact only below `u^{cap+1−n}`.
pub fn h1_morphism(s: i64, norm: ExpNormalization, max_arity: usize) -> TaylorFamily<UMultiVector, UDiffForm, UDiffForm> {
    let mut fam = TaylorFamily::new(FamilyKind::ModuleMorphism).with(0, Arc::new(|_: &[UMultiVector], a: &UDiffForm| Ok(a.clone())));
    for n in 1..=max_arity {
        fam = fam.with(
            n,
            Arc::new(move |gs: &[UMultiVector], a: &UDiffForm| {
                let cap = a.ucap();
                let mut acc = a.clone();
                for g in gs.iter().rev() {
                    let f = iota_plus_over_u(g, &acc)?.with_ucap(cap);
                    acc = f.signed(-sign(g.degree()) * s);
                }
                let c = match norm {
                    ExpNormalization::Plain => q(1),
                    ExpNormalization::Factorial => q(1) / (1..=n as i64).fold(q(1), |p, k| p * q(k)),
                };
                Ok(acc.scaled(&c))
            }),
        );
    }
    fam
}
