//! Exact arithmetic for symmetric-group characters built on border-strip
//! walks.
//!
//! The crate is organized bottom-up:
//!
//! - [`partitions`]: integer partitions, the fixed enumeration order,
//!   conjugacy-class bookkeeping.
//! - [`strips`]: border strips, gluing and removing them, and the walk of a
//!   strip around a fixed shape ([`going_around`]).
//! - [`characters`]: irreducible character values by the border-strip
//!   recursion, dimensions, character tables, column orthogonality.
//! - [`oracle`]: an independent brute-force character evaluator via
//!   symmetric-polynomial expansion, for cross-checking.
//! - [`virtual_characters`]: alternating sums of characters indexed by walk
//!   stations, their closed-form evaluation, and exhaustive verification
//!   sweeps.
//! - [`polynomial`] and [`identities`]: dimension generating polynomials
//!   along walks, closed-form dimension sums, and conjecture reports.
//!
//! All arithmetic is exact: `i64` with checked operations and big-integer
//! fallback for character values, `BigUint`/`BigInt` everywhere growth is
//! unbounded. Nothing in the crate rounds or approximates.

pub mod characters;
pub mod identities;
pub mod oracle;
pub mod partitions;
pub mod polynomial;
pub mod strips;
pub mod virtual_characters;

pub use characters::{
    dimension, mn_character, mn_character_big, mn_character_uncached, mn_character_with,
    two_rowed_hook_dimension, verify_column_orthogonality, CharCache, CharacterError,
    CharacterTable, OrthogonalityReport,
};
pub use identities::{
    alternating_dim_sum, alternating_hook_binomial_sum, around_one_dim_sum, check_conjectures,
    dimension_poly, dimension_poly_shifted, middle_station_dim_sum, verify_identities,
    verify_middle_station_recurrence, ConjectureLine, IdentitiesReport, IdentityError,
    IdentityMismatch,
};
pub use oracle::{reference_character, reference_character_column, REFERENCE_MAX_SIZE};
pub use partitions::{
    centralizer_order, enumerate_partitions, CycleType, InvalidPartition, Partition,
};
pub use polynomial::{IntPolynomial, PolynomialError};
pub use strips::{
    add_strips, decompose_unique, going_around, remove_strips, strip_between, BorderStrip,
    GoingAround, StripDefect, StripError,
};
pub use virtual_characters::{
    closed_form, closed_form_with, verify_centralizer_split, verify_closed_form,
    verify_decomposition, verify_matrix_form, CentralizerSplitReport, Mismatch, RangeChecked,
    SplitMismatch, Term, VerificationReport, VirtualCharacter,
};
