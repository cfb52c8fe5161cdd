//! Growth-constrained codes and the Catalan families they address.
//!
//! A *code* is a sequence `a_1 … a_n` with `a_1 = 1` and `a_{i+1} <= a_i + 1`.
//! There are `C_n` (Catalan) codes of length `n`, and each is the address of
//! exactly one Dyck word of semilength `n`, one 123-avoiding permutation of
//! `n` letters and one standard Young tableau of shape `(n, n)`.
//!
//! - [`structures`]: validated value types and their statistics.
//! - [`counting`]: exact Catalan and ballot numbers.
//! - [`enumeration`]: lexicographic enumeration, rank/unrank, uniform sampling.
//! - [`bijections`]: the derivation/statistic coding framework and its codecs.
//! - [`dynamics`]: the reserve-account model built on codes.

pub mod bijections;
pub mod counting;
pub mod dynamics;
pub mod enumeration;
pub mod error;
pub mod structures;

pub use bijections::{
    chi_decode, chi_encode, convert, verify_family, verify_theorem1, CodeCodec, DyckCodec, Family,
    FamilyCodec, Object, PermCodec, TableauCodec, Theorem1Report,
};
pub use counting::{
    ballot_closed, ballot_table, binomial, catalan, subdiagonal_table, two_row_count, BallotTable,
    SubdiagonalTable,
};
pub use dynamics::{
    exact_stats, monte_carlo_stats, monte_carlo_stats_sharded, render_trajectories,
    render_trajectory, trajectory_from_code, withdrawals, RenderFormat, StatsReport, StatsSource,
    WithdrawalSchedule,
};
pub use enumeration::{
    enum_avoiding_perms, enum_codes, enum_family, extension_counts, family_iter, rank_code,
    sample_code, unrank_code, CodeIter, CodeRanker, CodeSampler, ExtensionTable,
};
pub use error::{Error, Result};
pub use structures::{
    code_last, dyck_irreducible_factors, dyck_trailing_descents, is_123_avoiding, lis_length,
    perm_decreasing_prefix, perm_last_letter, tableau_h, validate_code, validate_dyck,
    validate_permutation, validate_tableau, validate_trajectory, Code, DyckWord, Permutation, Step,
    Trajectory, TwoRowTableau,
};

pub use num_bigint::BigUint;
pub use num_rational::BigRational;
