//! Exhaustive search engines and the single-number verifier.
//!
//! Two engines cover the interval `[1, 2b^b]`:
//!
//! * [`linear`] walks every candidate with an odometer, keeping the digit
//!   power sum up to date across carries.
//! * [`multiset`] enumerates digit multisets instead. `P_b` only depends on
//!   the multiset of digits, so each multiset yields one candidate sum, which
//!   is accepted when its own digits form that same multiset.
//!
//! Both return the same hits; `crosscheck` in the CLI relies on it.

pub mod linear;
pub mod multiset;

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::bounds::{search_bound, SearchBound};
use crate::error::{Error, Result};
use crate::powersum::{nat_table, term_breakdown, PowerTable, ZeroPowerConvention};
use crate::radix::{to_digits, Base, DigitVec};
use crate::report::SearchReport;
use crate::Nat;

pub use linear::{find_linear, Odometer};
pub use multiset::{check_multiset, find_multiset, multiset_count, multiset_space, DigitMultiset};

/// Linear scans refuse bounds above this many candidates unless overridden.
pub const DEFAULT_LINEAR_CEILING: u64 = 1_000_000_000;

/// Largest base the multiset engine accepts without an explicit override.
pub const DEFAULT_MULTISET_MAX_BASE: u32 = 16;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EngineKind {
    Linear,
    Multiset,
    /// Whichever of the two examines fewer candidates.
    #[default]
    Auto,
}

impl EngineKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EngineKind::Linear => "linear",
            EngineKind::Multiset => "multiset",
            EngineKind::Auto => "auto",
        }
    }
}

impl fmt::Display for EngineKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for EngineKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "linear" => Ok(EngineKind::Linear),
            "multiset" => Ok(EngineKind::Multiset),
            "auto" => Ok(EngineKind::Auto),
            _ => Err(Error::Parse(format!("unknown engine {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOptions {
    pub convention: ZeroPowerConvention,
    /// Also test 0, which lies outside `[1, 2b^b]`.
    pub include_zero: bool,
    pub engine: EngineKind,
    /// Worker threads; `None` uses the global rayon pool.
    pub jobs: Option<usize>,
    pub linear_ceiling: u64,
    /// Lift the multiset base cap.
    pub allow_large_base: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            convention: ZeroPowerConvention::One,
            include_zero: false,
            engine: EngineKind::Auto,
            jobs: None,
            linear_ceiling: DEFAULT_LINEAR_CEILING,
            allow_large_base: false,
        }
    }
}

impl SearchOptions {
    pub fn with_convention(convention: ZeroPowerConvention) -> Self {
        SearchOptions {
            convention,
            ..Self::default()
        }
    }
}

/// A Munchausen number with its representation and per-digit terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hit {
    pub value: Nat,
    pub representation: DigitVec,
    /// `(digit, digit^digit)` in representation order.
    pub terms: Vec<(u8, Nat)>,
}

impl Hit {
    pub(crate) fn from_table(value: Nat, table: &PowerTable<Nat>) -> Self {
        let representation = to_digits(&value, table.base());
        let terms = representation
            .digits()
            .iter()
            .map(|&d| (d, table.term(d).clone()))
            .collect();
        Hit {
            value,
            representation,
            terms,
        }
    }

    pub fn term_sum(&self) -> Nat {
        self.terms.iter().map(|(_, t)| t).sum()
    }
}

/// `3^3 + 4^4 + 3^3 + 5^5`
pub fn render_terms(terms: &[(u8, Nat)]) -> String {
    terms
        .iter()
        .map(|(d, _)| format!("{d}^{d}"))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Outcome of testing one number, with its breakdown whatever the result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub value: Nat,
    pub base: Base,
    pub convention: ZeroPowerConvention,
    pub representation: DigitVec,
    pub terms: Vec<(u8, Nat)>,
    pub sum: Nat,
}

impl Verdict {
    pub fn is_munchausen(&self) -> bool {
        self.sum == self.value
    }

    /// `3^3 + 4^4 + 3^3 + 5^5 = 3435`
    pub fn render_breakdown(&self) -> String {
        format!("{} = {}", render_terms(&self.terms), self.sum)
    }
}

pub fn verify(n: &Nat, base: Base, convention: ZeroPowerConvention) -> Verdict {
    let (representation, terms) = term_breakdown(n, base, convention);
    let sum = terms.iter().map(|(_, t)| t).sum();
    Verdict {
        value: n.clone(),
        base,
        convention,
        representation,
        terms,
        sum,
    }
}

/// The concrete engine `options.engine` stands for at `base`.
pub fn resolve_engine(base: Base, options: &SearchOptions) -> EngineKind {
    match options.engine {
        EngineKind::Auto => {
            if multiset_space(base) < search_bound(base).bound {
                EngineKind::Multiset
            } else {
                EngineKind::Linear
            }
        }
        kind => kind,
    }
}

/// Runs the engine selected by `options`.
pub fn find(base: Base, options: &SearchOptions) -> Result<SearchReport> {
    match resolve_engine(base, options) {
        EngineKind::Linear => find_linear(base, options),
        _ => find_multiset(base, options),
    }
}

pub(crate) fn run_in_pool<R, F>(jobs: Option<usize>, f: F) -> R
where
    R: Send,
    F: FnOnce() -> R + Send,
{
    match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .expect("failed to build worker pool")
            .install(f),
        None => f(),
    }
}

/// Builds the report from sorted raw hits.
pub(crate) fn assemble_report(
    sb: &SearchBound,
    options: &SearchOptions,
    engine: EngineKind,
    values: Vec<Nat>,
    candidates_examined: u64,
    started: std::time::Instant,
) -> SearchReport {
    debug_assert!(values.windows(2).all(|w| w[0] < w[1]));
    let table = nat_table(sb.base, options.convention);
    let mut notes = Vec::new();
    if values.first().is_some_and(Zero::is_zero) {
        notes.push(format!(
            "0 is reported because zero was explicitly included; it lies outside the search interval [1, {}]",
            sb.bound
        ));
    }
    let hits = values
        .into_iter()
        .map(|v| Hit::from_table(v, &table))
        .collect();
    SearchReport {
        base: sb.base,
        convention: options.convention,
        engine,
        bound: sb.bound.clone(),
        hits,
        elapsed_ms: started.elapsed().as_millis() as u64,
        candidates_examined,
        notes,
    }
}

/// Zero is a hit only when it was requested and `0^0 = 0`.
pub(crate) fn zero_hit(options: &SearchOptions) -> Option<Nat> {
    (options.include_zero && options.convention.zero_term() == 0).then(Nat::zero)
}
