//! L∞ algebras, modules and module morphisms given by Taylor coefficients,
//! the structure identities they must satisfy, adjoints with respect to
//! pairings, and the dual reading of morphisms into chains.
//!
//! All Taylor coefficients are evaluators on concrete elements. Identities are
//! checked on explicit inputs, which is conclusive only on the sampled inputs.

mod adjoint;
mod bases;
mod family;
mod graded;
mod psm;
mod residual;
mod structures;

pub use adjoint::{adjoint_module, adjoint_morphism, transpose_pairing, AdjointWindow, PairingHandle};
pub use bases::{
    chain_basis, cochain_chain_pairing, index_sets, topform_cochain_basis, uform_basis, uvtop_basis, vt_form_pairing,
};
pub use family::{
    adjoint_action_module, dgla_to_linfty, identity_morphism, module_to_linfty, pullback_module, scale_family,
    AlgFn, AlgebraFamily, FamilyKind, ModFn, TaylorFamily,
};
pub use graded::{sign, Graded};
pub use psm::{
    functional_component, functional_module, reinterpret_psm, symbolize, toy_psm, vtop_adjoint_module, ChainMap,
    LambdaMap,
};
pub use residual::{
    coderivation_square_residual, module_axiom_residual, morphism_residual, shifted_degree, symmetry_defect,
    unshuffle, vanishes,
};
pub use structures::*;
