//! Base-b digit arithmetic and exhaustive search for Munchausen numbers.
//!
//! A number `n` is a Munchausen number in base `b` when it equals the sum of
//! its base-b digits each raised to its own power, with `0^0 = 1` by default:
//! `3435 = 3^3 + 4^4 + 3^3 + 5^5`. No such number exceeds `2 * b^b`, so each
//! base has finitely many and they can be found exhaustively.
//!
//! The arithmetic in [`radix`], [`powersum`] and [`bounds`] is generic over
//! [`Natural`]; engines pick the narrowest machine width that holds every
//! intermediate value and fall back to [`Nat`] otherwise.
//!
//! ```
//! use munchausen::{find, Base, SearchOptions};
//!
//! let report = find(Base::new(4).unwrap(), &SearchOptions::default()).unwrap();
//! let values: Vec<String> = report.hits.iter().map(|h| h.value.to_string()).collect();
//! assert_eq!(values, ["1", "29", "55"]);
//! ```

pub mod bounds;
pub mod error;
pub mod num;
pub mod powersum;
pub mod radix;
pub mod report;
pub mod search;

pub use bounds::{exceeds_bound, lemma1_bound, search_bound, SearchBound};
pub use error::{Error, Result};
pub use num::Natural;
pub use powersum::{
    build_power_table, digit_power_sum, digit_power_sum_of_digits, PowerTable, ZeroPowerConvention,
};
pub use radix::{digit_count, from_digits, increment, to_digits, Base, DigitVec, MAX_BASE};
pub use report::{
    parse_json, render_bfile, render_csv, render_json, render_json_many, render_table, render_text,
    reverify, SearchReport,
};
pub use search::{
    check_multiset, find, find_linear, find_multiset, verify, DigitMultiset, EngineKind, Hit,
    SearchOptions, Verdict,
};

/// Unbounded nonnegative integer used for reported values and bounds.
pub type Nat = num_bigint::BigUint;

/// Exact power table, never overflows.
pub type NatPowerTable = PowerTable<Nat>;

/// Power table for the search hot loops, bases up to 16.
pub type U64PowerTable = PowerTable<u64>;

/// Power table for bases up to 27.
pub type U128PowerTable = PowerTable<u128>;
