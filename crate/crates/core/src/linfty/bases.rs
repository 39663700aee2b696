//! Monomial bases over exponent windows and the standard pairings, as inputs
//! for exact adjoint solves.

use super::adjoint::PairingHandle;
use crate::cartan::{pair_cochain_chain, pair_vt_form_u, DiffForm, IndexSet, MultiVector, Skew, SkewKind, UVTop, VolumeForm};
use crate::extended::Window;
use crate::hochschild::{HochChain, MultiDiffOp, MultiIndex, UHochChain, ValueTag};
use crate::ring::{q, LaurentPoly, USeries};
use std::sync::Arc;

/// All strictly increasing subsets of `0..dim`.
pub fn index_sets(dim: usize) -> Vec<IndexSet> {
    (0..1usize << dim)
        .map(|mask| (0..dim).filter(|i| mask & (1 << i) != 0).collect())
        .collect()
}

fn skew_basis<K: SkewKind>(dim: usize, window: &Window, ucap: usize) -> Vec<USeries<Skew<K>>> {
    let mut out = Vec::new();
    for j in 0..=ucap {
        for idx in index_sets(dim) {
            for e in window.exponents(dim) {
                let x = Skew::term(LaurentPoly::monomial(q(1), e), &idx).expect("valid index set");
                out.push(USeries::monomial(x, j, ucap));
            }
        }
    }
    out
}

/// `t^e dt_I u^j` over the window.
pub fn uform_basis(dim: usize, window: &Window, ucap: usize) -> Vec<USeries<DiffForm>> {
    skew_basis(dim, window, ucap)
}

/// `t^e ∂_I Ω u^j` over the window.
pub fn uvtop_basis(vol: &VolumeForm, window: &Window, ucap: usize) -> Vec<UVTop> {
    skew_basis::<crate::cartan::Vectors>(vol.dim(), window, ucap)
        .into_iter()
        .map(|mv: USeries<MultiVector>| UVTop::new(mv, vol.clone()))
        .collect()
}

/// Normalized monomial chains `t^{e_0} ⊗ … ⊗ t^{e_n}` over the window, as
/// constant series.
pub fn chain_basis(dim: usize, n: usize, window: &Window, ucap: usize) -> Vec<UHochChain> {
    let exps = window.exponents(dim);
    let mut keys: Vec<Vec<Vec<i32>>> = vec![vec![]];
    for slot in 0..=n {
        keys = keys
            .into_iter()
            .flat_map(|k| {
                exps.iter()
                    .filter(move |e| slot == 0 || e.iter().any(|&x| x != 0))
                    .map(move |e| {
                        let mut k = k.clone();
                        k.push(e.clone());
                        k
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    keys.into_iter()
        .map(|k| {
            let mut c = HochChain::zero(dim);
            c.add_monomial(k, q(1));
            USeries::constant(c, ucap)
        })
        .collect()
}

/// Top-form valued cochains `t^e ∂^{α_1} ⊗ … ⊗ ∂^{α_k}` with nonzero slot
/// multi-indices of total order at most `max_order` each.
pub fn topform_cochain_basis(dim: usize, arity: usize, window: &Window, max_order: u32) -> Vec<MultiDiffOp> {
    let mut indices: Vec<MultiIndex> = vec![vec![]];
    for _ in 0..dim {
        indices = indices
            .into_iter()
            .flat_map(|a| {
                (0..=max_order).map(move |x| {
                    let mut a = a.clone();
                    a.push(x);
                    a
                })
            })
            .collect();
    }
    indices.retain(|a| {
        let o: u32 = a.iter().sum();
        o > 0 && o <= max_order
    });
    let mut slots: Vec<Vec<MultiIndex>> = vec![vec![]];
    for _ in 0..arity {
        slots = slots
            .into_iter()
            .flat_map(|s| {
                indices.iter().map(move |a| {
                    let mut s = s.clone();
                    s.push(a.clone());
                    s
                })
            })
            .collect();
    }
    let mut out = Vec::new();
    for s in slots {
        for e in window.exponents(dim) {
            let f = LaurentPoly::monomial(q(1), e);
            out.push(MultiDiffOp::single(f, s.clone(), ValueTag::TopForm).expect("valid slots"));
        }
    }
    out
}

/// `⟨νΩ, α⟩` expanded in `u`.
pub fn vt_form_pairing() -> PairingHandle<UVTop, USeries<DiffForm>> {
    Arc::new(|x, a| Ok(pair_vt_form_u(x, a)?.into_coeffs()))
}

/// `⟨φ, c⟩` for a top-form valued cochain against each `u`-coefficient of a
/// chain series.
pub fn cochain_chain_pairing() -> PairingHandle<MultiDiffOp, UHochChain> {
    Arc::new(|phi, c| {
        c.coeffs()
            .iter()
            .map(|x| {
                // chains of other lengths pair to zero
                if x.lengths().contains(&phi.arity()) {
                    pair_cochain_chain(phi, x)
                } else {
                    Ok(q(0))
                }
            })
            .collect()
    })
}
