//! Hamming distance between the conjugates `xy` and `yx`.
//!
//! For words `x`, `y` the quantity `f(x, y) = h(xy, yx)` counts the
//! positions where the two concatenation orders disagree. This crate
//! decides which values of `f` are reachable for given lengths and
//! alphabet size, builds a verified witness for each reachable value, and
//! carries a brute-force oracle that cross-checks both at small sizes.

pub mod constructor;
pub mod cycles;
pub mod error;
pub mod feasibility;
pub mod oracle;
pub mod witness;
pub mod word;

pub use constructor::{construct, ternary_rule, ternary_word, TernaryRule};
pub use cycles::{cycle_disagreements, CycleDecomposition};
pub use error::{Error, Result};
pub use feasibility::{capacity, feasible, ProblemInstance, Reason, Verdict};
pub use oracle::{
    achievable_set, lexmin_witness, x_zero_achievable, AchievabilityRecord, OracleConfig,
    DEFAULT_BUDGET,
};
pub use witness::Witness;
pub use word::{
    conjugate_mismatch, hamming, have_common_power, primitive_root, rotation_mismatch, Alphabet,
    Word,
};
