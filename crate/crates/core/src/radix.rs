//! Conversion between integers and base-b digit vectors.
//!
//! Digit vectors are stored most-significant digit first, so `[3,4,3,5]` in
//! base 10 is 3435. Zero is the one-digit vector `[0]`; every other value has
//! a nonzero leading digit.

use std::fmt;

use crate::error::{Error, Result};
use crate::num::Natural;

/// Largest radix accepted, so every digit renders as one of `0-9a-z`.
pub const MAX_BASE: u32 = 36;

/// A radix `b` with `2 <= b <= 36`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Base(u32);

impl Base {
    pub fn new(value: u32) -> Result<Self> {
        if (2..=MAX_BASE).contains(&value) {
            Ok(Base(value))
        } else {
            Err(Error::InvalidBase(value))
        }
    }

    pub const fn get(self) -> u32 {
        self.0
    }

    /// The largest digit, `b - 1`.
    pub const fn max_digit(self) -> u8 {
        (self.0 - 1) as u8
    }

    pub(crate) fn as_natural<T: Natural>(self) -> T {
        T::from(self.0)
    }
}

impl TryFrom<u32> for Base {
    type Error = Error;

    fn try_from(value: u32) -> Result<Self> {
        Base::new(value)
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Canonical base-b representation of a nonnegative integer.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DigitVec {
    digits: Vec<u8>,
    base: Base,
}

impl DigitVec {
    /// Validates `digits` (most significant first) as a canonical representation.
    pub fn new(digits: Vec<u8>, base: Base) -> Result<Self> {
        let Some(&lead) = digits.first() else {
            return Err(Error::EmptyDigits);
        };
        if let Some(&bad) = digits.iter().find(|&&d| u32::from(d) >= base.get()) {
            return Err(Error::DigitOutOfRange {
                digit: u32::from(bad),
                base: base.get(),
            });
        }
        if lead == 0 && digits.len() > 1 {
            return Err(Error::LeadingZero);
        }
        Ok(DigitVec { digits, base })
    }

    pub fn zero(base: Base) -> Self {
        DigitVec {
            digits: vec![0],
            base,
        }
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn base(&self) -> Base {
        self.base
    }

    /// Number of digits `m`.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_zero(&self) -> bool {
        self.digits == [0]
    }

    /// Multiplicity of each digit value, indexed by digit.
    pub fn digit_counts(&self) -> Vec<u32> {
        let mut counts = vec![0u32; self.base.get() as usize];
        for &d in &self.digits {
            counts[d as usize] += 1;
        }
        counts
    }

    /// Compact rendering with one character per digit (`0-9a-z`).
    pub fn to_radix_string(&self) -> String {
        self.digits
            .iter()
            .map(|&d| char::from_digit(u32::from(d), MAX_BASE).expect("digit below 36"))
            .collect()
    }

    /// Parses a bracketed digit list such as `[1,3,1]`. Each item is either a
    /// decimal digit value or a single `0-9a-z` character.
    pub fn parse_bracketed(text: &str, base: Base) -> Result<Self> {
        let inner = text
            .trim()
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| {
                Error::Parse(format!("expected a bracketed digit list, got {text:?}"))
            })?;
        let digits = inner
            .split(',')
            .map(|item| {
                let item = item.trim();
                let value = item.parse::<u32>().ok().or_else(|| {
                    let mut chars = item.chars();
                    match (chars.next(), chars.next()) {
                        (Some(c), None) => c.to_digit(MAX_BASE),
                        _ => None,
                    }
                });
                match value {
                    Some(v) if v < base.get() => Ok(v as u8),
                    Some(v) => Err(Error::DigitOutOfRange {
                        digit: v,
                        base: base.get(),
                    }),
                    None => Err(Error::Parse(format!("bad digit {item:?}"))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        DigitVec::new(digits, base)
    }
}

/// Renders as `[3,4,3,5]_10`.
impl fmt::Display for DigitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, d) in self.digits.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "]_{}", self.base)
    }
}

pub fn to_digits<T: Natural>(n: &T, base: Base) -> DigitVec {
    if n.is_zero() {
        return DigitVec::zero(base);
    }
    let radix: T = base.as_natural();
    let mut rest = n.clone();
    let mut digits = Vec::new();
    while !rest.is_zero() {
        let (q, r) = rest.div_rem(&radix);
        digits.push(r.to_u8().expect("remainder below base"));
        rest = q;
    }
    digits.reverse();
    DigitVec { digits, base }
}

/// Evaluates `sum c_i * b^i` by Horner's rule.
pub fn from_digits<T: Natural>(d: &DigitVec) -> T {
    let radix: T = d.base.as_natural();
    d.digits.iter().fold(T::zero(), |acc, &c| {
        acc * radix.clone() + T::from(u32::from(c))
    })
}

/// Like [`from_digits`] for fixed-width scalars, reporting overflow instead of panicking.
pub fn checked_from_digits<T: Natural>(d: &DigitVec) -> Result<T> {
    let radix: T = d.base.as_natural();
    let overflow = || Error::Overflow { base: d.base.get() };
    d.digits.iter().try_fold(T::zero(), |acc, &c| {
        acc.checked_mul(&radix)
            .and_then(|v| v.checked_add(&T::from(u32::from(c))))
            .ok_or_else(overflow)
    })
}

/// The digit count `m` with `b^(m-1) <= n < b^m`, by repeated division.
pub fn digit_count<T: Natural>(n: &T, base: Base) -> Result<usize> {
    if n.is_zero() {
        return Err(Error::ZeroDigitCount);
    }
    let radix: T = base.as_natural();
    let mut rest = n.clone();
    let mut count = 0;
    while !rest.is_zero() {
        rest = rest / radix.clone();
        count += 1;
    }
    Ok(count)
}

/// Representation of `n + 1` given the representation of `n` (odometer step).
pub fn increment(d: &DigitVec) -> DigitVec {
    let top = d.base.max_digit();
    let mut digits = d.digits.clone();
    for slot in digits.iter_mut().rev() {
        if *slot < top {
            *slot += 1;
            return DigitVec {
                digits,
                base: d.base,
            };
        }
        *slot = 0;
    }
    digits.insert(0, 1);
    DigitVec {
        digits,
        base: d.base,
    }
}
