//! Exact verification of the algebraic structures around cyclic chains:
//! multivector calculus on the algebraic torus, Hochschild and cyclic
//! (co)chains, the extended complex with its flat connection, the family of
//! `u`-dependent actions on forms, and L∞ coderivation conventions.
//!
//! All arithmetic is over ℚ, so every identity is checked as a literal
//! equality.

pub mod cartan;
pub mod error;
pub mod expr;
pub mod extended;
pub mod hochschild;
pub mod linalg;
pub mod linfty;
pub mod ring;
pub mod sample;
pub mod suite;
pub mod uactions;

pub use error::{Error, Result};
