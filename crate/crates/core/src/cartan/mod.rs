//! Polyvector fields and differential forms on the algebraic torus with the
//! Cartan calculus, divergence and integration.

mod adjoint;
mod calculus;
mod skew;
mod volume;

pub use adjoint::{formal_adjoint_diffop, pair_cochain_chain};
pub use calculus::{contract, de_rham, iota_basis, lie_derivative, schouten, wedge};
pub use skew::{merge_sign, DiffForm, Forms, IndexSet, MultiVector, Skew, SkewKind, Vectors};
pub use volume::{
    complement, divergence, dualize_form, full_index, integrate_top, pair_vt_form, pair_vt_form_u,
    residue_integral, UVTop, VTop, VolumeForm,
};
