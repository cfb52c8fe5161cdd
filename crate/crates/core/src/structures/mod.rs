//! The four Catalan families as validated value types, plus the zero-based
//! trajectory view of a code, with their per-family statistics.
//!
//! Every type is immutable once constructed and has a canonical text form
//! (`Display`) with a strict parser (`FromStr`).

mod code;
mod dyck;
mod perm;
mod tableau;
mod text;
mod trajectory;

pub use code::{code_last, validate_code, Code};
pub use dyck::{dyck_irreducible_factors, dyck_trailing_descents, validate_dyck, DyckWord, Step};
pub use perm::{
    is_123_avoiding, lis_length, perm_decreasing_prefix, perm_last_letter, validate_permutation,
    Permutation,
};
pub use tableau::{tableau_h, validate_tableau, TwoRowTableau};
pub use trajectory::{validate_trajectory, Trajectory};
