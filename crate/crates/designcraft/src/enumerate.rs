//! Exhaustive codeword enumeration.
//!
//! All 2^k row combinations are visited by a k-bit counter in Gray order:
//! each step XORs a single generator row into the running codeword, selected
//! by the trailing-zero count of the incremented counter. The counter space
//! splits into contiguous ranges that workers scan independently (each range
//! seeds its own starting codeword), so partial results merge by addition or
//! concatenation. With the `parallel` feature the ranges run on the rayon
//! pool; without it they run back to back on one thread.

use crate::code::{words_for, LinearCode, Support};
use crate::error::{Error, Result};
use crate::wdist::WeightDistribution;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Hard cap on enumerated codewords: 2^28.
pub const DEFAULT_ENUM_BUDGET_LOG2: u32 = 28;

/// Widest codeword the monomorphized kernels handle.
const MAX_ENUM_WORDS: usize = 16;

pub(crate) fn check_budget(k: usize, budget_log2: u32) -> Result<()> {
    // the counter is a u64, so 63 bounds any raised budget
    if k as u32 > budget_log2.min(63) {
        return Err(Error::EnumerationTooLarge { k, budget_log2 });
    }
    Ok(())
}

pub(crate) fn check_width(n: usize) -> Result<()> {
    if words_for(n) > MAX_ENUM_WORDS {
        return Err(Error::UnsupportedCase(format!(
            "enumeration kernel supports lengths up to {}, got n={n}",
            MAX_ENUM_WORDS * 64
        )));
    }
    Ok(())
}

fn pack_rows<const W: usize>(code: &LinearCode) -> Vec<[u64; W]> {
    code.rows()
        .iter()
        .map(|row| {
            let mut packed = [0u64; W];
            packed[..row.len()].copy_from_slice(row);
            packed
        })
        .collect()
}

#[inline]
fn xor_words<const W: usize>(dst: &mut [u64; W], src: &[u64; W]) {
    for i in 0..W {
        dst[i] ^= src[i];
    }
}

#[inline]
fn weight_of<const W: usize>(words: &[u64; W]) -> u32 {
    words.iter().map(|w| w.count_ones()).sum()
}

/// Visits the codeword of every counter value in `start..end` (Gray order).
#[inline]
fn gray_scan<const W: usize>(
    rows: &[[u64; W]],
    start: u64,
    end: u64,
    mut visit: impl FnMut(&[u64; W]),
) {
    if start >= end {
        return;
    }
    let mut state = [0u64; W];
    let gray = start ^ (start >> 1);
    for (j, row) in rows.iter().enumerate() {
        if gray >> j & 1 == 1 {
            xor_words(&mut state, row);
        }
    }
    let mut c = start;
    loop {
        visit(&state);
        c += 1;
        if c == end {
            break;
        }
        xor_words(&mut state, &rows[c.trailing_zeros() as usize]);
    }
}

fn counts_range<const W: usize>(rows: &[[u64; W]], n: usize, start: u64, end: u64) -> Vec<u64> {
    let mut counts = vec![0u64; n + 1];
    gray_scan(rows, start, end, |state| counts[weight_of(state) as usize] += 1);
    counts
}

fn supports_range<const W: usize>(
    rows: &[[u64; W]],
    w: u32,
    start: u64,
    end: u64,
) -> Vec<Support> {
    let mut out = Vec::new();
    gray_scan(rows, start, end, |state| {
        if weight_of(state) == w {
            out.push(Support::from_words(state));
        }
    });
    out
}

macro_rules! dispatch_words {
    ($code:expr, $run:ident($($arg:expr),*)) => {{
        let code: &LinearCode = $code;
        match words_for(code.n()) {
            1 => $run(&pack_rows::<1>(code) $(, $arg)*),
            2 => $run(&pack_rows::<2>(code) $(, $arg)*),
            3 => $run(&pack_rows::<3>(code) $(, $arg)*),
            4 => $run(&pack_rows::<4>(code) $(, $arg)*),
            _ => $run(&pack_rows::<16>(code) $(, $arg)*),
        }
    }};
}

/// Weight counts over a counter subrange, sequentially. This is the kernel
/// the parallel paths shard; it is public so benchmarks can pin the
/// single-thread baseline.
pub fn weight_counts_range(code: &LinearCode, start: u64, end: u64) -> Vec<u64> {
    check_width(code.n()).expect("code width within the kernel limit");
    assert!(end <= 1u64 << code.k());
    let n = code.n();
    dispatch_words!(code, counts_range(n, start, end))
}

/// Supports of weight-w codewords over a counter subrange, sequentially, in
/// visit order.
pub fn supports_in_range(code: &LinearCode, w: usize, start: u64, end: u64) -> Vec<Support> {
    check_width(code.n()).expect("code width within the kernel limit");
    let target = w as u32;
    dispatch_words!(code, supports_range(target, start, end))
}

fn ranges_of(total: u64, pieces: u64) -> Vec<(u64, u64)> {
    let pieces = pieces.min(total).max(1);
    let step = total.div_ceil(pieces);
    (0..pieces)
        .map(|i| (i * step, ((i + 1) * step).min(total)))
        .filter(|(s, e)| s < e)
        .collect()
}

fn split_ranges(total: u64) -> Vec<(u64, u64)> {
    #[cfg(feature = "parallel")]
    let pieces = rayon::current_num_threads() as u64 * 8;
    #[cfg(not(feature = "parallel"))]
    let pieces = 1;
    ranges_of(total, pieces)
}

/// One range per worker; used where each range owns a large accumulator.
pub(crate) fn even_ranges(total: u64) -> Vec<(u64, u64)> {
    #[cfg(feature = "parallel")]
    let pieces = rayon::current_num_threads() as u64;
    #[cfg(not(feature = "parallel"))]
    let pieces = 1;
    ranges_of(total, pieces)
}

fn merge_counts(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

fn raw_weight_counts(code: &LinearCode, budget_log2: u32) -> Result<Vec<u64>> {
    check_budget(code.k(), budget_log2)?;
    check_width(code.n())?;
    let total = 1u64 << code.k();
    let ranges = split_ranges(total);
    #[cfg(feature = "parallel")]
    let counts = ranges
        .into_par_iter()
        .map(|(s, e)| weight_counts_range(code, s, e))
        .reduce(|| vec![0u64; code.n() + 1], merge_counts);
    #[cfg(not(feature = "parallel"))]
    let counts = ranges
        .into_iter()
        .map(|(s, e)| weight_counts_range(code, s, e))
        .fold(vec![0u64; code.n() + 1], merge_counts);
    Ok(counts)
}

/// Exact weight distribution by full enumeration, under the default 2^28
/// budget.
pub fn weight_distribution(code: &LinearCode) -> Result<WeightDistribution> {
    weight_distribution_with_budget(code, DEFAULT_ENUM_BUDGET_LOG2)
}

pub fn weight_distribution_with_budget(
    code: &LinearCode,
    budget_log2: u32,
) -> Result<WeightDistribution> {
    let counts = raw_weight_counts(code, budget_log2)?;
    debug_assert_eq!(counts.iter().sum::<u64>(), 1u64 << code.k());
    Ok(WeightDistribution::from_u64_counts(&counts))
}

/// All weight-w supports, each exactly once, in lexicographic order.
pub fn codewords_of_weight(code: &LinearCode, w: usize) -> Result<Vec<Support>> {
    codewords_of_weight_with_budget(code, w, DEFAULT_ENUM_BUDGET_LOG2)
}

pub fn codewords_of_weight_with_budget(
    code: &LinearCode,
    w: usize,
    budget_log2: u32,
) -> Result<Vec<Support>> {
    check_budget(code.k(), budget_log2)?;
    check_width(code.n())?;
    let total = 1u64 << code.k();
    let ranges = split_ranges(total);
    #[cfg(feature = "parallel")]
    let mut supports: Vec<Support> = ranges
        .into_par_iter()
        .flat_map_iter(|(s, e)| supports_in_range(code, w, s, e))
        .collect();
    #[cfg(not(feature = "parallel"))]
    let mut supports: Vec<Support> = ranges
        .into_iter()
        .flat_map(|(s, e)| supports_in_range(code, w, s, e))
        .collect();
    supports.sort_unstable();
    Ok(supports)
}

/// Smallest nonzero weight, by full enumeration.
pub fn minimum_distance(code: &LinearCode) -> Result<usize> {
    minimum_distance_with_budget(code, DEFAULT_ENUM_BUDGET_LOG2)
}

pub fn minimum_distance_with_budget(code: &LinearCode, budget_log2: u32) -> Result<usize> {
    let counts = raw_weight_counts(code, budget_log2)?;
    Ok(counts
        .iter()
        .enumerate()
        .skip(1)
        .find(|(_, &c)| c > 0)
        .map(|(w, _)| w)
        .expect("a code of dimension >= 1 has a nonzero codeword"))
}

/// Every codeword packed into four words (n <= 256), sorted; the exhaustive
/// route for codeword-set comparisons.
pub fn codeword_set(code: &LinearCode, budget_log2: u32) -> Result<Vec<[u64; 4]>> {
    check_budget(code.k(), budget_log2)?;
    assert!(code.n() <= 256, "codeword_set supports n <= 256");
    let rows = pack_rows::<4>(code);
    let mut words = Vec::with_capacity(1usize << code.k());
    gray_scan(&rows, 0, 1u64 << code.k(), |state| words.push(*state));
    words.sort_unstable();
    Ok(words)
}

/// Streams every weight-w support in `start..end` to `visit` through a
/// scratch index buffer; the fused path design verification shards.
pub(crate) fn visit_supports_in_range(
    code: &LinearCode,
    w: usize,
    start: u64,
    end: u64,
    visit: &mut dyn FnMut(&[u32]),
) {
    let target = w as u32;
    let mut scratch: Vec<u32> = Vec::with_capacity(w);
    fn run<const W: usize>(
        rows: &[[u64; W]],
        target: u32,
        start: u64,
        end: u64,
        scratch: &mut Vec<u32>,
        visit: &mut dyn FnMut(&[u32]),
    ) {
        gray_scan(rows, start, end, |state| {
            if weight_of(state) == target {
                scratch.clear();
                for (i, &word) in state.iter().enumerate() {
                    let mut bits = word;
                    while bits != 0 {
                        scratch.push((i * 64) as u32 + bits.trailing_zeros());
                        bits &= bits - 1;
                    }
                }
                visit(scratch);
            }
        });
    }
    dispatch_words!(code, run(target, start, end, &mut scratch, visit))
}
