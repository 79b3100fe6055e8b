use thiserror::Error;

use crate::feasibility::Verdict;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("symbol {symbol:?} at position {position} is not in the alphabet {{0, 1, 2}}")]
    InvalidSymbol { symbol: char, position: usize },

    #[error("string lengths must be positive (got m = {m}, n = {n})")]
    ZeroLength { m: usize, n: usize },

    #[error("alphabet size {0} is not supported (need at least 2)")]
    UnsupportedAlphabet(u32),

    #[error("instance is infeasible: {}", .0.reason)]
    Infeasible(Verdict),

    #[error("witness does not realize k = {expected} (actual distance {actual})")]
    WitnessMismatch { expected: usize, actual: usize },

    #[error("construction bug: {0}")]
    ConstructionBug(String),

    #[error(
        "enumeration of {sigma}^{exponent} candidates exceeds the oracle budget of {budget}"
    )]
    BudgetExceeded {
        sigma: u32,
        exponent: usize,
        budget: u64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
