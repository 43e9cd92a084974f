//! Finite search bound for Munchausen numbers.
//!
//! Every term `c^c` is at most `(b-1)^(b-1)`, so an `m`-digit number has
//! `P_b(n) <= m * (b-1)^(b-1)`. Above `2 * b^b` that product falls below `n`,
//! so no Munchausen number exceeds `2 * b^b` and the search over
//! `[1, 2 * b^b]` (inclusive) is exhaustive.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::num::Natural;
use crate::radix::{digit_count, Base};
use crate::Nat;

/// The inclusive upper end `2 * b^b` of the search interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchBound {
    pub base: Base,
    pub bound: Nat,
    /// Digit count of `bound` in base `b`; no candidate is longer.
    pub max_digit_count: usize,
}

impl SearchBound {
    pub fn contains(&self, n: &Nat) -> bool {
        !n.is_zero() && !exceeds_bound(n, self)
    }

    /// The bound as a fixed-width scalar, if it fits.
    pub fn bound_as<T: Natural>(&self) -> Option<T> {
        T::from_biguint(&self.bound)
    }
}

pub fn search_bound(base: Base) -> SearchBound {
    let b = Nat::from(base.get());
    let bound = num_traits::pow(b, base.get() as usize) * 2u32;
    let max_digit_count = digit_count(&bound, base).expect("bound is positive");
    SearchBound {
        base,
        bound,
        max_digit_count,
    }
}

/// `m * (b-1)^(b-1)` for the `m`-digit number `n`, the exact-integer form of
/// the per-digit bound on `P_b(n)`.
pub fn lemma1_bound<T: Natural>(n: &T, base: Base) -> Result<T> {
    let m = digit_count(n, base)?;
    let overflow = || Error::Overflow { base: base.get() };
    let top = T::from(base.get() - 1);
    let mut per_digit = T::one();
    for _ in 0..base.get() - 1 {
        per_digit = per_digit.checked_mul(&top).ok_or_else(overflow)?;
    }
    let m = T::from(u32::try_from(m).map_err(|_| overflow())?);
    per_digit.checked_mul(&m).ok_or_else(overflow)
}

/// True iff `n` lies strictly above the search interval.
pub fn exceeds_bound<T: Natural>(n: &T, sb: &SearchBound) -> bool {
    n.to_biguint() > sb.bound
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::powersum::{digit_power_sum, ZeroPowerConvention};
    use crate::radix::to_digits;

    fn b(v: u32) -> Base {
        Base::new(v).unwrap()
    }

    #[test]
    fn bound_examples() {
        let sb = search_bound(b(2));
        assert_eq!(sb.bound, Nat::from(8u32));
        assert_eq!(sb.max_digit_count, 4);
        assert_eq!(search_bound(b(4)).bound, Nat::from(512u32));
        let ten = search_bound(b(10));
        // 2 * 10^10 by repeated multiplication
        let expected = (0..10).fold(Nat::from(2u32), |acc, _| acc * 10u32);
        assert_eq!(ten.bound, expected);
        assert_eq!(ten.bound.to_string(), "20000000000");
        assert_eq!(ten.max_digit_count, 11);
        assert_eq!(ten.bound_as::<u64>(), Some(20_000_000_000));
        assert_eq!(search_bound(b(16)).bound_as::<u64>(), None);
    }

    #[test]
    fn max_digit_count_matches_representation() {
        for base in 2..=36 {
            let sb = search_bound(b(base));
            assert_eq!(sb.max_digit_count, to_digits(&sb.bound, b(base)).len());
        }
    }

    #[test]
    fn lemma1_examples() {
        let nine_pow_nine = (0..9).fold(1u64, |acc, _| acc * 9);
        assert_eq!(lemma1_bound(&3435u64, b(10)), Ok(4 * nine_pow_nine));
        assert_eq!(lemma1_bound(&3435u64, b(10)), Ok(1_549_681_956));
        assert_eq!(lemma1_bound(&1u32, b(2)), Ok(1));
        assert_eq!(lemma1_bound(&8u32, b(3)), Ok(8));
        assert_eq!(lemma1_bound(&0u32, b(3)), Err(Error::ZeroDigitCount));
        assert_eq!(
            lemma1_bound(&1u32, b(11)),
            Err(Error::Overflow { base: 11 })
        );
        assert_eq!(
            lemma1_bound(&Nat::from(1u32), b(11)),
            Ok(Nat::from(10_000_000_000u64))
        );
    }

    #[test]
    fn lemma1_tight_on_all_max_digits() {
        for base in 2..=12u32 {
            for m in 1..6u32 {
                let n = Nat::from(base).pow(m) - 1u32;
                assert_eq!(
                    digit_power_sum(&n, b(base), ZeroPowerConvention::One),
                    lemma1_bound(&n, b(base)).unwrap()
                );
            }
        }
    }

    #[test]
    fn exceeds_is_strict() {
        let two = search_bound(b(2));
        assert!(exceeds_bound(&9u32, &two));
        assert!(!exceeds_bound(&8u32, &two));
        assert!(two.contains(&Nat::from(8u32)));
        assert!(!two.contains(&Nat::from(0u32)));
        assert!(exceeds_bound(&20_000_000_001u64, &search_bound(b(10))));
        assert!(!exceeds_bound(&20_000_000_000u64, &search_bound(b(10))));
    }
}
