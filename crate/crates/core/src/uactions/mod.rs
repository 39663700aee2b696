//! The family `L^(t)` of `u`-dependent actions of multivector fields on forms,
//! its dual on multivector-valued top forms, the infinitesimal morphisms
//! `h^(t)` and the Taylor coefficients of `H^(1) = exp(±ι⁺/u)`.
//!
//! Operators that depend polynomially on `t` have `_poly` variants returning
//! [`TPoly`] values, so `t`-derivatives are exact.

use crate::cartan::{contract, divergence, lie_derivative, schouten, wedge, DiffForm, MultiVector, UVTop, VolumeForm};
use crate::error::{Error, Result};
use crate::ring::{parity_sign, q, Linear, Rational, TPoly, USeries};

pub type UMultiVector = USeries<MultiVector>;
pub type UDiffForm = USeries<DiffForm>;

/// The scaling parameter `t` of `S^(t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalingParam(pub Rational);

impl ScalingParam {
    pub fn new(t: Rational) -> Self {
        ScalingParam(t)
    }
}

fn pow(t: &Rational, j: usize) -> Rational {
    (0..j).fold(q(1), |acc, _| acc * t)
}

/// Degree parity of a multivector series: `|γ| = rank − 1`, unaffected by `u`.
///
/// Returns `Some(true)` for odd degree, `None` if ranks of both parities occur.
pub fn degree_parity(gamma: &UMultiVector) -> Option<bool> {
    let mut parity = None;
    for c in gamma.coeffs() {
        for r in c.ranks() {
            let odd = r % 2 == 0;
            match parity {
                None => parity = Some(odd),
                Some(p) if p != odd => return None,
                _ => {}
            }
        }
    }
    Some(parity.unwrap_or(false))
}

/// Degree parity of a form series, with forms in nonpositive degrees.
pub fn form_parity(alpha: &UDiffForm) -> Option<bool> {
    let mut parity = None;
    for c in alpha.coeffs() {
        for r in c.ranks() {
            let odd = r % 2 == 1;
            match parity {
                None => parity = Some(odd),
                Some(p) if p != odd => return None,
                _ => {}
            }
        }
    }
    Some(parity.unwrap_or(false))
}

fn check(gamma: &UMultiVector, alpha: &UDiffForm) -> Result<()> {
    let dg = gamma.coeff(0).dim();
    let da = alpha.coeff(0).dim();
    if dg != da {
        return Err(Error::DimensionMismatch(dg, da));
    }
    Ok(())
}

/// `S^(t) γ = Σ (tu)^j γ_j`.
pub fn scale_u(t: &Rational, gamma: &UMultiVector) -> UMultiVector {
    USeries::from_coeffs(
        gamma
            .coeffs()
            .iter()
            .enumerate()
            .map(|(j, g)| g.scaled(&pow(t, j)))
            .collect(),
    )
}

/// `u`-bilinear contraction.
pub fn iota_u(gamma: &UMultiVector, alpha: &UDiffForm) -> Result<UDiffForm> {
    check(gamma, alpha)?;
    Ok(gamma.bilinear(alpha, |g, a| contract(g, a).expect("dimensions checked")))
}

/// `ι^(t)_γ α = ι_{S^(t)γ} α`.
pub fn iota_t(t: &Rational, gamma: &UMultiVector, alpha: &UDiffForm) -> Result<UDiffForm> {
    iota_u(&scale_u(t, gamma), alpha)
}

/// Collects `Σ_{j,k} u^{j+k} Σ_m t^m f(j, γ_j, α_k)_m` truncated at the common cap.
fn t_bilinear(
    gamma: &UMultiVector,
    alpha: &UDiffForm,
    f: impl Fn(usize, &MultiVector, &DiffForm) -> Result<Vec<(usize, DiffForm)>>,
) -> Result<TPoly<UDiffForm>> {
    check(gamma, alpha)?;
    let cap = gamma.ucap().min(alpha.ucap());
    let dim = alpha.coeff(0).dim();
    let zero = USeries::constant(DiffForm::zero(dim), cap);
    let mut acc = TPoly::constant(zero);
    for (j, g) in gamma.coeffs().iter().enumerate().take(cap + 1) {
        if g.is_zero() {
            continue;
        }
        for (k, a) in alpha.coeffs().iter().enumerate().take(cap + 1 - j) {
            if a.is_zero() {
                continue;
            }
            for (m, form) in f(j, g, a)? {
                acc = acc.plus(&TPoly::monomial(USeries::monomial(form, j + k, cap), m));
            }
        }
    }
    Ok(acc)
}

/// `L^(t)_γ α = Σ_j (ut)^j (L_{γ_j} + t ι_{div γ_j}) α` as a polynomial in `t`.
pub fn action_lt_poly(vol: &VolumeForm, gamma: &UMultiVector, alpha: &UDiffForm) -> Result<TPoly<UDiffForm>> {
    action_lt_poly_impl(vol, gamma, alpha, true)
}

/// `L^(t)` with the divergence term dropped (negative control).
pub fn action_lt_poly_without_div(
    vol: &VolumeForm,
    gamma: &UMultiVector,
    alpha: &UDiffForm,
) -> Result<TPoly<UDiffForm>> {
    action_lt_poly_impl(vol, gamma, alpha, false)
}

fn action_lt_poly_impl(
    vol: &VolumeForm,
    gamma: &UMultiVector,
    alpha: &UDiffForm,
    with_div: bool,
) -> Result<TPoly<UDiffForm>> {
    t_bilinear(gamma, alpha, |j, g, a| {
        let mut out = vec![(j, lie_derivative(g, a)?)];
        if with_div {
            out.push((j + 1, contract(&divergence(vol, g)?, a)?));
        }
        Ok(out)
    })
}

pub fn action_lt(t: &Rational, vol: &VolumeForm, gamma: &UMultiVector, alpha: &UDiffForm) -> Result<UDiffForm> {
    Ok(action_lt_poly(vol, gamma, alpha)?.eval(t))
}

/// `L^(t)_γ α = (1/u)([ud, ι^(t)_γ] + ι^(t)_{u div γ}) α`, computed with one
/// extra power of `u` and an exact division.
///
/// `γ` must have a definite degree parity.
pub fn action_lt_via_div_u(
    t: &Rational,
    vol: &VolumeForm,
    gamma: &UMultiVector,
    alpha: &UDiffForm,
) -> Result<UDiffForm> {
    check(gamma, alpha)?;
    let odd = degree_parity(gamma).ok_or(Error::Unsupported("γ must have a definite degree parity"))?;
    let cap = gamma.ucap().min(alpha.ucap());
    let g = gamma.with_ucap(cap + 1);
    let a = alpha.with_ucap(cap + 1);
    // ι_γ has the parity of rank γ, opposite to |γ|
    let iota_parity = if odd { 0 } else { 1 };
    let ud = |x: &UDiffForm| x.map(crate::cartan::de_rham).mul_u();
    let first = ud(&iota_t(t, &g, &a)?);
    let second = iota_t(t, &g, &ud(&a))?.signed(parity_sign(iota_parity));
    let div_g = g.map(|c| divergence(vol, c).expect("dimensions checked")).mul_u();
    let third = iota_t(t, &div_g, &a)?;
    first.minus(&second).plus(&third).div_u()
}

/// `h^(t)_γ α = −Σ_{j≥1} j t^{j−1} u^{j−1} ι_{γ_j} α` as a polynomial in `t`.
pub fn h_t_poly(gamma: &UMultiVector, alpha: &UDiffForm) -> Result<TPoly<UDiffForm>> {
    check(gamma, alpha)?;
    let cap = gamma.ucap().min(alpha.ucap());
    let g = gamma.with_ucap(cap + 1);
    let a = alpha.with_ucap(cap + 1);
    // −(d/dt) ι^(t)_γ α, then divide by u coefficientwise in t
    let iota = t_bilinear(&g, &a, |j, gj, ak| Ok(vec![(j, contract(gj, ak)?)]))?;
    let deriv = iota.derivative().scaled(&q(-1));
    let coeffs: Result<Vec<UDiffForm>> = deriv.coeffs().iter().map(|c| c.div_u()).collect();
    let coeffs = coeffs?;
    let mut out = TPoly::constant(coeffs[0].clone());
    for (m, c) in coeffs.into_iter().enumerate().skip(1) {
        out = out.plus(&TPoly::monomial(c, m));
    }
    Ok(out)
}

pub fn h_t(t: &Rational, gamma: &UMultiVector, alpha: &UDiffForm) -> Result<UDiffForm> {
    Ok(h_t_poly(gamma, alpha)?.eval(t))
}

/// `ι⁺_γ α / u` with `ι⁺_γ = Σ_{j≥1} u^j ι_{γ_j}`.
pub fn iota_plus_over_u(gamma: &UMultiVector, alpha: &UDiffForm) -> Result<UDiffForm> {
    check(gamma, alpha)?;
    let cap = gamma.ucap().min(alpha.ucap());
    let mut g = gamma.with_ucap(cap + 1).into_coeffs();
    g[0] = g[0].zero_like();
    let g = USeries::from_coeffs(g);
    iota_u(&g, &alpha.with_ucap(cap + 1))?.div_u()
}

/// Operator Taylor coefficient of `exp(s ι⁺/u)`:
/// `(1/n!) sⁿ (ι⁺_{γ_1}/u)∘…∘(ι⁺_{γ_n}/u) α`.
pub fn h1_taylor(gammas: &[UMultiVector], alpha: &UDiffForm, s: i64) -> Result<UDiffForm> {
    let n = gammas.len();
    let mut acc = alpha.clone();
    for g in gammas.iter().rev() {
        acc = iota_plus_over_u(g, &acc)?;
    }
    let fact = (1..=n as i64).fold(q(1), |a, k| a * q(k));
    Ok(acc.scaled(&(q(s.pow(n as u32)) / fact)))
}

/// `Σ_{j,k} u^{j+k} t^j ([γ_j, ν_k] + (−1)^{|γ_j|}(1 − t) div γ_j ∧ ν_k) Ω`.
pub fn action_lt_dual_poly(vol: &VolumeForm, gamma: &UMultiVector, x: &UVTop) -> Result<TPoly<UMultiVector>> {
    if &x.vol != vol {
        return Err(Error::VolumeMismatch);
    }
    let dim = vol.dim();
    let cap = gamma.ucap().min(x.mv.ucap());
    let zero = USeries::constant(MultiVector::zero(dim), cap);
    let mut acc = TPoly::constant(zero);
    for (j, g) in gamma.coeffs().iter().enumerate().take(cap + 1) {
        for (k, nu) in x.mv.coeffs().iter().enumerate().take(cap + 1 - j) {
            if g.is_zero() || nu.is_zero() {
                continue;
            }
            let put = |acc: &mut TPoly<UMultiVector>, m: usize, v: MultiVector| {
                *acc = acc.plus(&TPoly::monomial(USeries::monomial(v, j + k, cap), m));
            };
            put(&mut acc, j, schouten(g, nu)?);
            for (r, part) in g.homogeneous_parts() {
                let sign = parity_sign(r as i64 - 1);
                let dw = wedge(&divergence(vol, &part)?, nu)?.signed(sign);
                put(&mut acc, j, dw.clone());
                put(&mut acc, j + 1, dw.scaled(&q(-1)));
            }
        }
    }
    Ok(acc)
}

pub fn action_lt_dual(t: &Rational, vol: &VolumeForm, gamma: &UMultiVector, x: &UVTop) -> Result<UVTop> {
    let mv = action_lt_dual_poly(vol, gamma, x)?.eval(t);
    Ok(UVTop::new(mv, vol.clone()))
}

/// `δ(νΩ) = u (div ν) Ω`.
pub fn dual_differential(x: &UVTop) -> Result<UVTop> {
    let vol = x.vol.clone();
    let coeffs: Result<Vec<MultiVector>> = x.mv.coeffs().iter().map(|nu| divergence(&vol, nu)).collect();
    Ok(UVTop::new(USeries::from_coeffs(coeffs?).mul_u(), vol))
}

#[cfg(test)]
mod tests;
