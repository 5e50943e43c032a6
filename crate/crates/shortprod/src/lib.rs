//! Exact short products from truncated multipliers.
//!
//! A truncated multiplier is an integer `z` standing in for some real value in
//! `[z, z + 1)`: the digits we kept, plus an unknown tail. For a multiplicand
//! `w`, the `d` most significant digits of the product `w * z` are *exact* when
//! they are the same for every tail, i.e. when `w * z` and `w * (z + 1) - 1`
//! share their first `d` digits. This crate computes the half-open interval
//! `[lb, ub)` of multiplicands for which that holds, without scanning: the
//! first failure is always a running maximum of `w -> (w * z) mod base^k`, and
//! running extrema can be enumerated in logarithmically many steps.
//!
//! Modules:
//! - [`arith`]: floor division, modular distance, digit counts, the exactness
//!   condition.
//! - [`extrema`]: gap sequences and compressed runs of running extrema.
//! - [`range`]: digit bands and the validity-range search.
//! - [`multipliers`]: construction of truncated multipliers (digit prefixes of
//!   embedded constants, leading digits of rationals).
//! - [`oracle`]: deliberately naive reference implementations used by tests.

pub mod arith;
pub mod extrema;
pub mod multipliers;
pub mod oracle;
pub mod range;

pub use extrema::{ExtremaRuns, ExtremumRun, GapSequence};
pub use range::{DigitBand, RangeQuery, ValidityRange};

/// Domain errors shared by all modules.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("modulus must be nonzero")]
    ZeroModulus,

    #[error("base must be at least 2")]
    InvalidBase,

    #[error("{0} must be at least 1")]
    ZeroArgument(&'static str),

    #[error("multiplier is a multiple of the modulus")]
    MultipleOfModulus,

    #[error("value has {have} digits, {wanted} requested")]
    NotEnoughDigits { wanted: u64, have: u64 },

    #[error("scan start exceeds scan end")]
    StartAfterEnd,

    #[error("scan limit {limit} exceeds the brute-force guard {guard}")]
    ScanTooLarge { limit: u64, guard: u64 },

    #[error("no violating multiplicand found within {0} digit bands")]
    BandCapExceeded(u64),

    #[error("scan inconclusive: no violation found for w <= {0}")]
    Inconclusive(u64),

    #[error("only {available} digits of {name} are embedded, {requested} requested")]
    ConstantDigitsExhausted {
        name: &'static str,
        requested: u64,
        available: u64,
    },
}
