//! Search by digit multiset.
//!
//! For each digit count `m` up to the digit count of the bound, every multiset
//! of `m` digits (other than all zeros) is visited once. Its power sum `S`
//! is a Munchausen number exactly when `S` has `m` digits and those digits
//! form the same multiset. A Munchausen number is produced only by its own
//! digit multiset, so no deduplication is needed.

use std::time::Instant;

use num_integer::binomial;
use num_traits::One;
use rayon::prelude::*;

use super::{
    assemble_report, run_in_pool, zero_hit, EngineKind, SearchOptions, DEFAULT_MULTISET_MAX_BASE,
};
use crate::bounds::search_bound;
use crate::error::{Error, Result};
use crate::num::{Natural, Width};
use crate::powersum::{nat_table, PowerTable, ZeroPowerConvention};
use crate::radix::{Base, DigitVec};
use crate::report::SearchReport;
use crate::Nat;

/// Multiplicities of each digit `0..b` in an unordered digit collection.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DigitMultiset {
    base: Base,
    counts: Vec<u32>,
    size: usize,
}

impl DigitMultiset {
    /// `counts[d]` is the multiplicity of digit `d`; `counts.len()` must equal the base.
    pub fn new(base: Base, counts: Vec<u32>) -> Result<Self> {
        if counts.len() != base.get() as usize {
            return Err(Error::InvalidMultiset(format!(
                "{} counts given for base {base}",
                counts.len()
            )));
        }
        if counts[1..].iter().all(|&c| c == 0) {
            return Err(Error::InvalidMultiset(
                "needs at least one nonzero digit".to_owned(),
            ));
        }
        let size = counts.iter().map(|&c| c as usize).sum();
        Ok(DigitMultiset { base, counts, size })
    }

    /// Multiset from a list of digits in any order.
    pub fn from_digit_list(base: Base, digits: &[u8]) -> Result<Self> {
        let mut counts = vec![0u32; base.get() as usize];
        for &d in digits {
            let slot = counts.get_mut(d as usize).ok_or(Error::DigitOutOfRange {
                digit: u32::from(d),
                base: base.get(),
            })?;
            *slot += 1;
        }
        Self::new(base, counts)
    }

    pub fn of(digits: &DigitVec) -> Result<Self> {
        Self::new(digits.base(), digits.digit_counts())
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn size(&self) -> usize {
        self.size
    }
}

/// Number of multisets of `size` digits in `base`, excluding the all-zero one.
pub fn multiset_count(base: Base, size: usize) -> Nat {
    let b = base.get() as usize;
    binomial(Nat::from(size + b - 1), Nat::from(b - 1)) - 1u32
}

/// Multisets the engine visits for `base`.
pub fn multiset_space(base: Base) -> Nat {
    let sb = search_bound(base);
    (1..=sb.max_digit_count)
        .map(|m| multiset_count(base, m))
        .sum()
}

/// `S = sum counts[d] * d^d`, when the digits of `S` are exactly `ms`.
pub fn check_multiset(ms: &DigitMultiset, convention: ZeroPowerConvention) -> Option<Nat> {
    let table = nat_table(ms.base, convention);
    let sum = ms
        .counts
        .iter()
        .zip(table.entries())
        .map(|(&c, t)| t * c)
        .sum::<Nat>();
    let mut scratch = vec![0u32; ms.counts.len()];
    self_describes(&sum, &ms.counts, ms.size, ms.base, &mut scratch).then_some(sum)
}

/// True iff `sum` has exactly `size` digits with multiplicities `counts`.
#[inline]
fn self_describes<T: Natural>(
    sum: &T,
    counts: &[u32],
    size: usize,
    base: Base,
    scratch: &mut [u32],
) -> bool {
    if sum.is_zero() {
        return false;
    }
    scratch.iter_mut().for_each(|c| *c = 0);
    let radix = T::from(base.get());
    let mut rest = sum.clone();
    let mut len = 0;
    while !rest.is_zero() {
        if len == size {
            return false;
        }
        let (q, r) = rest.div_rem(&radix);
        let d = r.to_usize().expect("remainder below base");
        scratch[d] += 1;
        if scratch[d] > counts[d] {
            return false;
        }
        len += 1;
        rest = q;
    }
    len == size
}

struct Enumerator<'a, T> {
    table: &'a [T],
    base: Base,
    size: usize,
    counts: Vec<u32>,
    scratch: Vec<u32>,
    hits: Vec<T>,
    examined: u64,
}

impl<T: Natural> Enumerator<'_, T> {
    /// Assigns counts to digits `digit, digit-1, ..., 0` summing to `remaining`.
    fn descend(&mut self, digit: usize, remaining: u32, partial: T) {
        if digit == 0 {
            if remaining as usize == self.size {
                return;
            }
            self.counts[0] = remaining;
            let total = partial + self.table[0].clone() * T::from(remaining);
            self.examined += 1;
            if self_describes(
                &total,
                &self.counts,
                self.size,
                self.base,
                &mut self.scratch,
            ) {
                self.hits.push(total);
            }
            return;
        }
        let mut running = partial;
        for c in 0..=remaining {
            self.counts[digit] = c;
            self.descend(digit - 1, remaining - c, running.clone());
            running = running + self.table[digit].clone();
        }
        self.counts[digit] = 0;
    }
}

/// All multisets of `size` digits whose top digit `b-1` appears `top_count` times.
fn enumerate_slice<T: Natural>(
    table: &PowerTable<T>,
    size: usize,
    top_count: u32,
) -> (Vec<T>, u64) {
    let base = table.base();
    let top = base.max_digit() as usize;
    let mut e = Enumerator {
        table: table.entries(),
        base,
        size,
        counts: vec![0; base.get() as usize],
        scratch: vec![0; base.get() as usize],
        hits: Vec::new(),
        examined: 0,
    };
    e.counts[top] = top_count;
    let partial = table.max_term().clone() * T::from(top_count);
    e.descend(top - 1, size as u32 - top_count, partial);
    (e.hits, e.examined)
}

fn enumerate_with<T: Natural>(
    base: Base,
    options: &SearchOptions,
    max_size: usize,
) -> Result<(Vec<Nat>, u64)> {
    let table = PowerTable::<T>::new(base, options.convention)?;
    let slices: Vec<(usize, u32)> = (1..=max_size)
        .flat_map(|m| (0..=m as u32).map(move |c| (m, c)))
        .collect();
    let results: Vec<(Vec<T>, u64)> = run_in_pool(options.jobs, || {
        slices
            .par_iter()
            .map(|&(m, c)| enumerate_slice(&table, m, c))
            .collect()
    });
    let examined = results.iter().map(|(_, n)| n).sum();
    let mut hits: Vec<Nat> = results
        .iter()
        .flat_map(|(h, _)| h.iter().map(Natural::to_biguint))
        .collect();
    hits.sort();
    Ok((hits, examined))
}

/// Enumerates digit multisets of every length up to the bound's digit count.
///
/// Refuses bases above [`DEFAULT_MULTISET_MAX_BASE`] unless `allow_large_base` is set.
pub fn find_multiset(base: Base, options: &SearchOptions) -> Result<SearchReport> {
    if base.get() > DEFAULT_MULTISET_MAX_BASE && !options.allow_large_base {
        return Err(Error::MultisetCap {
            base: base.get(),
            cap: DEFAULT_MULTISET_MAX_BASE,
        });
    }
    let started = Instant::now();
    let sb = search_bound(base);
    let max_term = num_traits::pow(Nat::from(base.get() - 1), base.get() as usize - 1);
    let widest = max_term * sb.max_digit_count + Nat::one();
    let (mut values, mut examined) = match Width::for_max(&widest) {
        Width::U64 => enumerate_with::<u64>(base, options, sb.max_digit_count)?,
        Width::U128 => enumerate_with::<u128>(base, options, sb.max_digit_count)?,
        Width::Big => enumerate_with::<Nat>(base, options, sb.max_digit_count)?,
    };
    if options.include_zero {
        examined += 1;
        if let Some(zero) = zero_hit(options) {
            values.insert(0, zero);
        }
    }
    Ok(assemble_report(
        &sb,
        options,
        EngineKind::Multiset,
        values,
        examined,
        started,
    ))
}
