//! Scalar abstraction for the digit arithmetic.
//!
//! Everything in `radix`, `powersum` and `bounds` is generic over [`Natural`],
//! so the same code runs on machine words in the search hot loops and on
//! [`BigUint`] wherever a value may outgrow 64 or 128 bits.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, ToPrimitive, Unsigned};

/// An unsigned integer type usable as a digit-arithmetic scalar.
pub trait Natural:
    Integer
    + Unsigned
    + Clone
    + Hash
    + Debug
    + Display
    + From<u32>
    + ToPrimitive
    + CheckedAdd
    + CheckedMul
    + Send
    + Sync
    + 'static
{
    /// Largest representable value, `None` for unbounded types.
    fn max_value() -> Option<BigUint>;

    fn to_biguint(&self) -> BigUint;

    /// Narrowing conversion; `None` when `n` does not fit.
    fn from_biguint(n: &BigUint) -> Option<Self>;

    fn fits(n: &BigUint) -> bool {
        Self::max_value().is_none_or(|max| *n <= max)
    }
}

macro_rules! impl_natural_prim {
    ($($t:ty => $to:ident),* $(,)?) => {$(
        impl Natural for $t {
            fn max_value() -> Option<BigUint> {
                Some(BigUint::from(<$t>::MAX))
            }

            fn to_biguint(&self) -> BigUint {
                BigUint::from(*self)
            }

            fn from_biguint(n: &BigUint) -> Option<Self> {
                n.$to()
            }
        }
    )*};
}

impl_natural_prim!(u32 => to_u32, u64 => to_u64, u128 => to_u128);

impl Natural for BigUint {
    fn max_value() -> Option<BigUint> {
        None
    }

    fn to_biguint(&self) -> BigUint {
        self.clone()
    }

    fn from_biguint(n: &BigUint) -> Option<Self> {
        Some(n.clone())
    }
}

/// Fixed-width scalars an engine can be instantiated with, narrowest first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Width {
    U64,
    U128,
    Big,
}

impl Width {
    /// Narrowest width holding every value up to `max`.
    pub(crate) fn for_max(max: &BigUint) -> Self {
        if u64::fits(max) {
            Width::U64
        } else if u128::fits(max) {
            Width::U128
        } else {
            Width::Big
        }
    }
}
