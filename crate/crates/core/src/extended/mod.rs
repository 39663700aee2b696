//! The extended complex of form-valued multidifferential operators with its
//! bar differential, flat connection, cyclic action and Connes operator, plus
//! the Koszul symbol complex and window-based quotients.

mod element;
mod ops;
mod project;
mod symbol;

pub use element::{EElement, EKey};
pub use ops::{
    connes_b_extended, cyclic_sigma, embed_cochain, extended_b, extended_b_with_wrap_sign,
    extended_nabla, hkr_vt,
};
pub use project::{project_top_mod_exact, Window};
pub use symbol::{koszul_line_cohomology, koszul_symbol_d0, LineEntry, SymbolElement};
