//! Plactic and shifted plactic monoids on truncated alphabets: words and
//! their structural maps, pattern rewriting, insertion tableaux, free Schur
//! functions, and a verifier that re-derives the axiom systems at small
//! scale.

pub mod algebra;
pub mod error;
pub mod json;
pub mod rewrite;
pub mod tableau;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
