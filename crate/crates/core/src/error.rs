use thiserror::Error;

use crate::Nat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("base {0} is out of range (expected 2..={max})", max = crate::radix::MAX_BASE)]
    InvalidBase(u32),

    #[error("digit {digit} is not valid in base {base}")]
    DigitOutOfRange { digit: u32, base: u32 },

    #[error("digit vector is empty")]
    EmptyDigits,

    #[error("digit vector has a leading zero")]
    LeadingZero,

    #[error("digit count is undefined for zero")]
    ZeroDigitCount,

    #[error("power table is for base {table} but digits are in base {digits}")]
    BaseMismatch { table: u32, digits: u32 },

    #[error("digit multiset is invalid: {0}")]
    InvalidMultiset(String),

    #[error("value does not fit the selected integer width for base {base}")]
    Overflow { base: u32 },

    #[error(
        "linear scan of base {base} needs {candidates} candidates, above the ceiling of {ceiling}; \
         use the multiset engine or raise the linear ceiling"
    )]
    LinearCeiling {
        base: u32,
        candidates: Nat,
        ceiling: u64,
    },

    #[error(
        "multiset search is capped at base {cap} (requested {base}); \
         pass the large-base override to run it anyway"
    )]
    MultisetCap { base: u32, cap: u32 },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
