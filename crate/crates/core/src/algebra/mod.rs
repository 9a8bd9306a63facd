//! The truncated noncommutative polynomial algebra, free Schur functions
//! and their images.

mod lr;
mod poly;
mod schur;

pub use lr::lr_expand;
pub use poly::{commutator_in_quotient, CPoly, NcPoly, PolyContext, QuotientPoly};
pub use schur::{
    free_schur, free_schur_by_filter, is_free_schur_word, p_schur_poly, schur_poly,
    shifted_free_schur,
};
