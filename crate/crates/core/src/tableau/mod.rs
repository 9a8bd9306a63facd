//! Tableaux and insertion algorithms: the canonical-form side of both
//! monoids.

mod hook;
mod partition;
mod shifted;
mod ssyt;

pub use hook::{
    enumerate_hook, hook_factorization_check, hook_words, is_hook, is_hook_word, longest_hook,
    longest_hook_subword,
};
pub use partition::{Partition, StrictPartition};
pub use shifted::{enumerate_shssyt, mixed_insert_word, PrimedLetter, ShiftedTableau};
pub use ssyt::{enumerate_ssyt, p_tableau, schensted_insert, Tableau};
