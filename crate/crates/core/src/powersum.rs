//! The digit power sum `P_b(n) = sum c_i^c_i` over the base-b digits of `n`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::num::Natural;
use crate::radix::{to_digits, Base, DigitVec};
use crate::Nat;

/// Value given to the `0^0` term.
///
/// `One` is the standard convention (`0^0 = 1`) and the default everywhere.
/// `Zero` is a variant that changes membership: `[1,0]_2` sums to 2 under
/// `One` but to 1 under `Zero`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ZeroPowerConvention {
    #[default]
    One,
    Zero,
}

impl ZeroPowerConvention {
    pub const ALL: [ZeroPowerConvention; 2] = [ZeroPowerConvention::One, ZeroPowerConvention::Zero];

    /// The value of `0^0`.
    pub fn zero_term(self) -> u32 {
        match self {
            ZeroPowerConvention::One => 1,
            ZeroPowerConvention::Zero => 0,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ZeroPowerConvention::One => "one",
            ZeroPowerConvention::Zero => "zero",
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            ZeroPowerConvention::One => "0^0 = 1",
            ZeroPowerConvention::Zero => "0^0 = 0 (variant)",
        }
    }
}

impl fmt::Display for ZeroPowerConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ZeroPowerConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "one" | "1" => Ok(ZeroPowerConvention::One),
            "zero" | "0" => Ok(ZeroPowerConvention::Zero),
            _ => Err(Error::Parse(format!("unknown 0^0 convention {s:?}"))),
        }
    }
}

/// `d^d` for every digit of a base, with entry 0 fixed by the convention.
///
/// Built once per (base, convention) and shared read-only by the searches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerTable<T> {
    base: Base,
    convention: ZeroPowerConvention,
    entries: Vec<T>,
}

impl<T: Natural> PowerTable<T> {
    /// Fails with [`Error::Overflow`] only for fixed-width `T` too narrow for `(b-1)^(b-1)`.
    pub fn new(base: Base, convention: ZeroPowerConvention) -> Result<Self> {
        let overflow = || Error::Overflow { base: base.get() };
        let mut entries = Vec::with_capacity(base.get() as usize);
        entries.push(T::from(convention.zero_term()));
        for d in 1..base.get() {
            let digit = T::from(d);
            let mut power = T::one();
            for _ in 0..d {
                power = power.checked_mul(&digit).ok_or_else(overflow)?;
            }
            entries.push(power);
        }
        Ok(PowerTable {
            base,
            convention,
            entries,
        })
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn convention(&self) -> ZeroPowerConvention {
        self.convention
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn term(&self, digit: u8) -> &T {
        &self.entries[digit as usize]
    }

    /// `(b-1)^(b-1)`, the largest single term.
    pub fn max_term(&self) -> &T {
        self.entries.last().expect("base >= 2")
    }

    /// Sum of table entries over a digit vector in the table's base.
    pub fn sum_digits(&self, digits: &DigitVec) -> Result<T> {
        if digits.base() != self.base {
            return Err(Error::BaseMismatch {
                table: self.base.get(),
                digits: digits.base().get(),
            });
        }
        Ok(digits
            .digits()
            .iter()
            .fold(T::zero(), |acc, &d| acc + self.term(d).clone()))
    }

    /// `P_b(n)` computed digit by digit without building a digit vector.
    ///
    /// Fixed-width callers must pick `T` wide enough for the sum.
    pub fn sum_of(&self, n: &T) -> T {
        if n.is_zero() {
            return self.entries[0].clone();
        }
        let radix: T = self.base.as_natural();
        let mut rest = n.clone();
        let mut sum = T::zero();
        while !rest.is_zero() {
            let (q, r) = rest.div_rem(&radix);
            sum = sum + self.entries[r.to_usize().expect("remainder below base")].clone();
            rest = q;
        }
        sum
    }
}

pub fn build_power_table<T: Natural>(
    base: Base,
    convention: ZeroPowerConvention,
) -> Result<PowerTable<T>> {
    PowerTable::new(base, convention)
}

pub(crate) fn nat_table(base: Base, convention: ZeroPowerConvention) -> PowerTable<Nat> {
    PowerTable::new(base, convention).expect("unbounded integers cannot overflow")
}

/// `P_b(n)` in exact arithmetic.
pub fn digit_power_sum(n: &Nat, base: Base, convention: ZeroPowerConvention) -> Nat {
    nat_table(base, convention).sum_of(n)
}

/// `P_b(n)` from the representation of `n`.
pub fn digit_power_sum_of_digits(digits: &DigitVec, convention: ZeroPowerConvention) -> Nat {
    nat_table(digits.base(), convention)
        .sum_digits(digits)
        .expect("table built for the vector's own base")
}

/// Each digit of `n` paired with its power term, most significant first.
pub fn term_breakdown(
    n: &Nat,
    base: Base,
    convention: ZeroPowerConvention,
) -> (DigitVec, Vec<(u8, Nat)>) {
    let table = nat_table(base, convention);
    let digits = to_digits(n, base);
    let terms = digits
        .digits()
        .iter()
        .map(|&d| (d, table.term(d).clone()))
        .collect();
    (digits, terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn b(v: u32) -> Base {
        Base::new(v).unwrap()
    }

    fn nat(v: u64) -> Nat {
        BigUint::from(v)
    }

    // Longhand d^d by repeated multiplication, independent of the table builder.
    fn longhand_power(d: u64) -> u64 {
        (0..d).fold(1u64, |acc, _| acc * d)
    }

    #[test]
    fn table_examples() {
        let t = build_power_table::<u64>(b(4), ZeroPowerConvention::One).unwrap();
        assert_eq!(t.entries(), &[1, 1, 4, 27]);
        let t = build_power_table::<u32>(b(2), ZeroPowerConvention::Zero).unwrap();
        assert_eq!(t.entries(), &[0, 1]);
        let t = build_power_table::<Nat>(b(10), ZeroPowerConvention::One).unwrap();
        assert_eq!(t.term(8), &nat(16_777_216));
        assert_eq!(t.term(9), &nat(387_420_489));
        assert_eq!(t.term(8), &nat(longhand_power(8)));
        assert_eq!(t.term(9), &nat(longhand_power(9)));
    }

    #[test]
    fn table_is_nondecreasing_and_exact() {
        for base in 2..=36 {
            for conv in ZeroPowerConvention::ALL {
                let t = build_power_table::<Nat>(b(base), conv).unwrap();
                assert_eq!(t.entries().len(), base as usize);
                assert!(t.entries().windows(2).all(|w| w[0] <= w[1]));
                for d in 1..base.min(16) {
                    assert_eq!(t.term(d as u8), &nat(longhand_power(u64::from(d))));
                }
            }
        }
    }

    #[test]
    fn narrow_tables_overflow() {
        // 16^16 = 2^64
        assert!(build_power_table::<u64>(b(16), ZeroPowerConvention::One).is_ok());
        assert_eq!(
            build_power_table::<u64>(b(17), ZeroPowerConvention::One),
            Err(Error::Overflow { base: 17 })
        );
        assert!(build_power_table::<u128>(b(27), ZeroPowerConvention::One).is_ok());
        assert!(build_power_table::<u128>(b(28), ZeroPowerConvention::One).is_err());
    }

    #[test]
    fn digit_power_sum_examples() {
        let one = ZeroPowerConvention::One;
        assert_eq!(digit_power_sum(&nat(3435), b(10), one), nat(3435));
        assert_eq!(digit_power_sum(&nat(2), b(2), one), nat(2));
        for base in 2..=36 {
            assert_eq!(digit_power_sum(&nat(1), b(base), one), nat(1));
        }
    }

    #[test]
    fn closing_question_sum() {
        // 20082009: digits 2,0,0,8,2,0,0,9 summed longhand.
        let longhand: u64 = [2u64, 0, 0, 8, 2, 0, 0, 9]
            .iter()
            .map(|&d| if d == 0 { 1 } else { longhand_power(d) })
            .sum();
        assert_eq!(longhand, 404_197_717);
        assert_eq!(
            digit_power_sum(&nat(20_082_009), b(10), ZeroPowerConvention::One),
            nat(404_197_717)
        );
    }

    #[test]
    fn sum_of_digits_examples() {
        let d = DigitVec::new(vec![1, 3, 1], b(4)).unwrap();
        assert_eq!(
            digit_power_sum_of_digits(&d, ZeroPowerConvention::One),
            nat(29)
        );
        let zero = DigitVec::zero(b(10));
        assert_eq!(
            digit_power_sum_of_digits(&zero, ZeroPowerConvention::One),
            nat(1)
        );
        assert_eq!(
            digit_power_sum_of_digits(&zero, ZeroPowerConvention::Zero),
            nat(0)
        );
    }

    #[test]
    fn sum_digits_rejects_foreign_base() {
        let t = build_power_table::<u64>(b(4), ZeroPowerConvention::One).unwrap();
        let d = DigitVec::new(vec![9], b(10)).unwrap();
        assert_eq!(
            t.sum_digits(&d),
            Err(Error::BaseMismatch {
                table: 4,
                digits: 10
            })
        );
    }

    #[test]
    fn convention_parsing() {
        assert_eq!("one".parse(), Ok(ZeroPowerConvention::One));
        assert_eq!("Zero".parse(), Ok(ZeroPowerConvention::Zero));
        assert!("half".parse::<ZeroPowerConvention>().is_err());
        assert_eq!(ZeroPowerConvention::default(), ZeroPowerConvention::One);
    }

    #[test]
    fn breakdown_lists_every_digit() {
        let (digits, terms) = term_breakdown(&nat(3435), b(10), ZeroPowerConvention::One);
        assert_eq!(digits.digits(), &[3, 4, 3, 5]);
        let expected: Vec<(u8, Nat)> =
            vec![(3, nat(27)), (4, nat(256)), (3, nat(27)), (5, nat(3125))];
        assert_eq!(terms, expected);
    }
}
