//! Normalized multidifferential Hochschild cochains with the Gerstenhaber
//! bracket, normalized Hochschild chains with `b_H`, the cochain action and
//! Connes' `B`.

mod chains;
pub(crate) mod multiindex;
mod ops;

pub use chains::{chain_boundary, cochain_action, connes_b, hkr_chains, HochChain, UHochChain};
pub use multiindex::MultiIndex;
pub use ops::{cochain_differential, gerstenhaber, valued_differential, MultiDiffOp, ValueTag};
