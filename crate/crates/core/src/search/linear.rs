//! Linear odometer scan over `[1, 2b^b]`.

use std::time::Instant;

use num_traits::One;
use rayon::prelude::*;

use super::{assemble_report, run_in_pool, zero_hit, EngineKind, SearchOptions};
use crate::bounds::search_bound;
use crate::error::{Error, Result};
use crate::num::{Natural, Width};
use crate::powersum::PowerTable;
use crate::radix::{to_digits, Base, DigitVec};
use crate::report::SearchReport;
use crate::Nat;

/// Candidates per work unit. Fixed so the partition does not depend on the
/// number of workers.
const CHUNK_LEN: u64 = 1 << 20;

/// A counter that carries its base-b digits and their power sum along.
///
/// Each [`advance`](Odometer::advance) adds one, updating the sum by the
/// difference of the digits that changed rather than recomputing it.
#[derive(Debug, Clone)]
pub struct Odometer<'a, T> {
    table: &'a PowerTable<T>,
    /// Least significant first.
    digits: Vec<u8>,
    value: T,
    sum: T,
    /// `table[d+1] - table[d]`; the table is nondecreasing.
    step_gain: Vec<T>,
    /// `table[b-1] - table[0]`, lost when a top digit wraps to 0.
    wrap_loss: T,
}

impl<'a, T: Natural> Odometer<'a, T> {
    pub fn new(table: &'a PowerTable<T>, start: T) -> Self {
        let mut digits = to_digits(&start, table.base()).digits().to_vec();
        digits.reverse();
        let sum = digits
            .iter()
            .fold(T::zero(), |acc, &d| acc + table.term(d).clone());
        let entries = table.entries();
        let step_gain = entries
            .windows(2)
            .map(|w| w[1].clone() - w[0].clone())
            .collect();
        let wrap_loss = table.max_term().clone() - entries[0].clone();
        Odometer {
            table,
            digits,
            value: start,
            sum,
            step_gain,
            wrap_loss,
        }
    }

    pub fn value(&self) -> &T {
        &self.value
    }

    /// `P_b` of the current value.
    pub fn power_sum(&self) -> &T {
        &self.sum
    }

    pub fn representation(&self) -> DigitVec {
        let digits = self.digits.iter().rev().copied().collect();
        DigitVec::new(digits, self.table.base()).expect("odometer digits are canonical")
    }

    pub fn is_munchausen(&self) -> bool {
        self.sum == self.value
    }

    #[inline]
    pub fn advance(&mut self) {
        self.value = self.value.clone() + T::one();
        let top = self.table.base().max_digit();
        for i in 0..self.digits.len() {
            let d = self.digits[i];
            if d < top {
                self.digits[i] = d + 1;
                self.sum = self.sum.clone() + self.step_gain[d as usize].clone();
                return;
            }
            self.digits[i] = 0;
            self.sum = self.sum.clone() - self.wrap_loss.clone();
        }
        self.digits.push(1);
        self.sum = self.sum.clone() + self.table.term(1).clone();
    }
}

/// Hits in `first..=last`, ascending.
fn scan_range<T: Natural>(table: &PowerTable<T>, first: u64, last: u64) -> Vec<T> {
    let chunks = (last - first) / CHUNK_LEN + 1;
    let per_chunk: Vec<Vec<T>> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let lo = first + c * CHUNK_LEN;
            let hi = lo.saturating_add(CHUNK_LEN - 1).min(last);
            let mut odo = Odometer::new(
                table,
                T::from_biguint(&Nat::from(lo)).expect("width fits bound"),
            );
            let mut hits = Vec::new();
            for _ in lo..=hi {
                if odo.is_munchausen() {
                    hits.push(odo.value().clone());
                }
                odo.advance();
            }
            hits
        })
        .collect();
    per_chunk.into_iter().flatten().collect()
}

fn scan_with<T: Natural>(base: Base, options: &SearchOptions, last: u64) -> Result<Vec<Nat>> {
    let table = PowerTable::<T>::new(base, options.convention)?;
    let hits = run_in_pool(options.jobs, || scan_range(&table, 1, last));
    Ok(hits.iter().map(Natural::to_biguint).collect())
}

/// Checks every `n` in `[1, 2b^b]`.
///
/// Refuses when `2b^b` exceeds `options.linear_ceiling`.
pub fn find_linear(base: Base, options: &SearchOptions) -> Result<SearchReport> {
    let started = Instant::now();
    let sb = search_bound(base);
    let last = sb
        .bound_as::<u64>()
        .filter(|&b| b <= options.linear_ceiling)
        .ok_or_else(|| Error::LinearCeiling {
            base: base.get(),
            candidates: sb.bound.clone(),
            ceiling: options.linear_ceiling,
        })?;

    // Values reach max(bound, m * (b-1)^(b-1)).
    let max_term = num_traits::pow(Nat::from(base.get() - 1), base.get() as usize - 1);
    let max_sum = max_term * sb.max_digit_count;
    let widest = (&sb.bound).max(&max_sum) + Nat::one();
    let mut values = match Width::for_max(&widest) {
        Width::U64 => scan_with::<u64>(base, options, last)?,
        Width::U128 => scan_with::<u128>(base, options, last)?,
        Width::Big => scan_with::<Nat>(base, options, last)?,
    };

    let mut examined = last;
    if options.include_zero {
        examined += 1;
        if let Some(zero) = zero_hit(options) {
            values.insert(0, zero);
        }
    }
    Ok(assemble_report(
        &sb,
        options,
        EngineKind::Linear,
        values,
        examined,
        started,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::powersum::ZeroPowerConvention;

    fn b(v: u32) -> Base {
        Base::new(v).unwrap()
    }

    fn hit_values(r: &SearchReport) -> Vec<u64> {
        r.hits
            .iter()
            .map(|h| h.value.to_string().parse().unwrap())
            .collect()
    }

    #[test]
    fn paper_rows() {
        let opts = SearchOptions::default();
        assert_eq!(
            hit_values(&find_linear(b(3), &opts).unwrap()),
            vec![1, 5, 8]
        );
        assert_eq!(hit_values(&find_linear(b(5), &opts).unwrap()), vec![1]);
        assert_eq!(
            hit_values(&find_linear(b(6), &opts).unwrap()),
            vec![1, 3164, 3416]
        );
    }

    #[test]
    fn candidate_count_is_the_bound() {
        let r = find_linear(b(2), &SearchOptions::default()).unwrap();
        assert_eq!(r.candidates_examined, 8);
        assert_eq!(r.engine, EngineKind::Linear);
        assert_eq!(hit_values(&r), vec![1, 2]);
    }

    #[test]
    fn ceiling_refusal() {
        let err = find_linear(b(10), &SearchOptions::default()).unwrap_err();
        assert!(matches!(
            err,
            Error::LinearCeiling {
                base: 10,
                ceiling: 1_000_000_000,
                ..
            }
        ));
        let tight = SearchOptions {
            linear_ceiling: 53,
            ..SearchOptions::default()
        };
        assert!(find_linear(b(3), &tight).is_err());
        let exact = SearchOptions {
            linear_ceiling: 54,
            ..SearchOptions::default()
        };
        assert!(find_linear(b(3), &exact).is_ok());
    }

    #[test]
    fn include_zero() {
        let zero_conv = SearchOptions {
            convention: ZeroPowerConvention::Zero,
            include_zero: true,
            ..SearchOptions::default()
        };
        let r = find_linear(b(3), &zero_conv).unwrap();
        assert_eq!(hit_values(&r)[0], 0);
        assert_eq!(r.candidates_examined, 55);
        assert_eq!(r.notes.len(), 1);

        let one_conv = SearchOptions {
            include_zero: true,
            ..SearchOptions::default()
        };
        let r = find_linear(b(3), &one_conv).unwrap();
        assert_eq!(hit_values(&r), vec![1, 5, 8]);
        assert!(r.notes.is_empty());
    }

    #[test]
    fn odometer_tracks_value_and_sum() {
        let table = PowerTable::<u64>::new(b(4), ZeroPowerConvention::One).unwrap();
        let mut odo = Odometer::new(&table, 0);
        for n in 0..2000u64 {
            assert_eq!(*odo.value(), n);
            assert_eq!(*odo.power_sum(), table.sum_of(&n));
            assert_eq!(odo.representation(), to_digits(&n, b(4)));
            odo.advance();
        }
    }

    #[test]
    fn odometer_works_on_big_integers() {
        let table = PowerTable::<Nat>::new(b(3), ZeroPowerConvention::Zero).unwrap();
        let mut odo = Odometer::new(&table, Nat::from(25u32));
        odo.advance();
        odo.advance();
        // 27 = [1,0,0,0]_3
        assert_eq!(*odo.value(), Nat::from(27u32));
        assert_eq!(*odo.power_sum(), Nat::from(1u32));
    }
}
