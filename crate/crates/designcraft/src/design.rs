//! Block designs from fixed-weight codeword supports: exhaustive t-design
//! verification, the Assmus-Mattson audit, and the tabulated lambda and
//! block-count formulas for the five-weight code family.
//!
//! Verification allocates one counter per t-subset of the point set, indexed
//! by colexicographic rank (a dense array, no hashing), then walks every
//! t-subset of every block. The design property holds exactly when all
//! counters agree; on failure the achieved minimum and maximum multiplicities
//! are reported, which is what diagnosing a wrong formula needs. Workers
//! shard blocks (or codeword ranges, in the fused path) with private counter
//! arrays merged by addition.

use std::io::{BufRead, BufReader, Read, Write};
use std::path::Path;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::closed_form::binomial;
use crate::code::{LinearCode, Support};
use crate::enumerate;
use crate::error::{Error, Result};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Cap on the dense counter array: C(v, t) <= 10^7.
pub const COUNTER_BUDGET: u64 = 10_000_000;

/// A simple block design: `blocks` are distinct k-subsets of {0, .., v-1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Design {
    v: usize,
    block_size: usize,
    blocks: Vec<Support>,
}

impl Design {
    /// Validates uniform block size, index range, nontriviality (v > k), and
    /// simplicity; blocks are kept in lexicographic order.
    pub fn new(v: usize, mut blocks: Vec<Support>) -> Result<Self> {
        let block_size = match blocks.first() {
            Some(b) => b.len(),
            None => return Err(Error::NoBlocksAtWeight(0)),
        };
        for b in &blocks {
            if b.len() != block_size {
                return Err(Error::NotUniform(block_size, b.len()));
            }
            if b.indices().last().is_some_and(|&i| i as usize >= v) {
                return Err(Error::UnsupportedCase(format!(
                    "block index out of range for v={v}"
                )));
            }
        }
        if v <= block_size {
            return Err(Error::UnsupportedCase(format!(
                "trivial design: block size {block_size} not below v={v}"
            )));
        }
        blocks.sort_unstable();
        if blocks.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::UnsupportedCase("repeated block".into()));
        }
        Ok(Design { v, block_size, blocks })
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn block_size(&self) -> usize {
        self.block_size
    }

    pub fn blocks(&self) -> &[Support] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn write_to(&self, path: &Path) -> Result<()> {
        let mut out = std::io::BufWriter::new(std::fs::File::create(path)?);
        write!(out, "{}", self.render())?;
        Ok(())
    }

    fn render(&self) -> String {
        let mut s = format!("v={} k={}\n", self.v, self.block_size);
        for b in &self.blocks {
            let line: Vec<String> = b.indices().iter().map(|i| i.to_string()).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }

    pub fn read_from(path: &Path) -> Result<Design> {
        Self::parse(BufReader::new(std::fs::File::open(path)?), &path.display().to_string())
    }

    fn parse<R: Read>(reader: BufReader<R>, origin: &str) -> Result<Design> {
        let err = |msg: String| Error::Parse { path: origin.to_string(), msg };
        let mut lines = reader.lines();
        let header = lines.next().transpose()?.ok_or_else(|| err("empty file".into()))?;
        let (v, _k) = header
            .strip_prefix("v=")
            .and_then(|rest| rest.split_once(" k="))
            .and_then(|(v, k)| Some((v.parse::<usize>().ok()?, k.parse::<usize>().ok()?)))
            .ok_or_else(|| err("expected `v=<int> k=<int>` header".into()))?;
        let mut blocks = Vec::new();
        for line in lines {
            let line = line?;
            if line.is_empty() {
                continue;
            }
            let mut idx = Vec::new();
            for token in line.split(' ') {
                let i: u32 = token.parse().map_err(|_| err(format!("bad index `{token}`")))?;
                if idx.last().is_some_and(|&prev| prev >= i) {
                    return Err(err("indices must be strictly ascending".into()));
                }
                idx.push(i);
            }
            blocks.push(Support::new(idx));
        }
        Design::new(v, blocks)
    }
}

/// Extracts the design held by the weight-w codewords: v = n points, one
/// block per support.
pub fn supports_to_design(code: &LinearCode, w: usize) -> Result<Design> {
    supports_to_design_with_budget(code, w, enumerate::DEFAULT_ENUM_BUDGET_LOG2)
}

pub fn supports_to_design_with_budget(
    code: &LinearCode,
    w: usize,
    budget_log2: u32,
) -> Result<Design> {
    let supports = enumerate::codewords_of_weight_with_budget(code, w, budget_log2)?;
    if supports.is_empty() {
        return Err(Error::NoBlocksAtWeight(w));
    }
    // distinct binary codewords have distinct supports, so the simplicity
    // check in Design::new can only fail on an internal enumeration bug
    Design::new(code.n(), supports)
}

/// Result of an exhaustive multiplicity scan: `lambda` is set when every
/// t-subset counter agrees.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct TDesignOutcome {
    pub lambda: Option<u64>,
    pub min: u64,
    pub max: u64,
}

struct RankTables {
    /// tables[i][x] = C(x, i+1), for colex ranking
    tables: Vec<Vec<u64>>,
}

impl RankTables {
    fn new(v: usize, t: usize) -> Self {
        let mut tables = Vec::with_capacity(t);
        for i in 0..t {
            let choose = (i + 1) as u64;
            let mut col = vec![0u64; v + 1];
            for (x, slot) in col.iter_mut().enumerate() {
                let x = x as u64;
                if x >= choose {
                    *slot = (x + 1 - choose..=x).product::<u64>()
                        / (1..=choose).product::<u64>();
                }
            }
            tables.push(col);
        }
        RankTables { tables }
    }

    /// Adds every t-subset of `block` into the counters by colex rank.
    #[inline]
    fn count_block(&self, block: &[u32], t: usize, counters: &mut [u32]) {
        match t {
            1 => {
                for &a in block {
                    counters[a as usize] += 1;
                }
            }
            2 => {
                let t2 = &self.tables[1];
                for (j, &b) in block.iter().enumerate().skip(1) {
                    let base = t2[b as usize] as usize;
                    for &a in &block[..j] {
                        counters[base + a as usize] += 1;
                    }
                }
            }
            3 => {
                let t2 = &self.tables[1];
                let t3 = &self.tables[2];
                for (ci, &c) in block.iter().enumerate().skip(2) {
                    let base3 = t3[c as usize] as usize;
                    for (bi, &b) in block[..ci].iter().enumerate().skip(1) {
                        let base = base3 + t2[b as usize] as usize;
                        for &a in &block[..bi] {
                            counters[base + a as usize] += 1;
                        }
                    }
                }
            }
            _ => self.count_rec(block, t, 0, counters),
        }
    }

    fn count_rec(&self, block: &[u32], t: usize, base: u64, counters: &mut [u32]) {
        if t == 0 {
            counters[base as usize] += 1;
            return;
        }
        for (i, &x) in block.iter().enumerate().skip(t - 1) {
            self.count_rec(&block[..i], t - 1, base + self.tables[t - 1][x as usize], counters);
        }
    }
}

fn counter_len(v: usize, t: usize) -> Result<usize> {
    let subsets = binomial(v as u64, t as u64);
    if subsets > BigUint::from(COUNTER_BUDGET) {
        return Err(Error::VerificationTooLarge {
            subsets: u128::try_from(&subsets).unwrap_or(u128::MAX),
            budget: COUNTER_BUDGET,
        });
    }
    Ok(usize::try_from(&subsets).expect("within budget"))
}

fn scan_counters(counters: &[u32]) -> TDesignOutcome {
    let mut min = u64::MAX;
    let mut max = 0u64;
    for &c in counters {
        min = min.min(c as u64);
        max = max.max(c as u64);
    }
    TDesignOutcome { lambda: (min == max).then_some(min), min, max }
}

fn merge_counters(mut a: Vec<u32>, b: Vec<u32>) -> Vec<u32> {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

/// Exhaustively checks whether the design's blocks cover every t-subset
/// equally often.
pub fn verify_t_design(design: &Design, t: usize) -> Result<TDesignOutcome> {
    if t == 0 || t >= design.block_size() {
        return Err(Error::BadStrength { t, k: design.block_size() });
    }
    let len = counter_len(design.v(), t)?;
    let tables = RankTables::new(design.v(), t);
    let count_chunk = |blocks: &[Support]| {
        let mut counters = vec![0u32; len];
        for b in blocks {
            tables.count_block(b.indices(), t, &mut counters);
        }
        counters
    };
    #[cfg(feature = "parallel")]
    let counters = design
        .blocks()
        .par_chunks(design.block_count().div_ceil(rayon::current_num_threads()).max(1))
        .map(count_chunk)
        .reduce(|| vec![0u32; len], merge_counters);
    #[cfg(not(feature = "parallel"))]
    let counters = count_chunk(design.blocks());
    Ok(scan_counters(&counters))
}

/// Fused extraction + verification: enumerates the weight-w codewords of
/// `code` and counts their t-subsets in one pass, without materializing the
/// block list. Returns the block count alongside the verdict.
pub fn verify_weight_class(
    code: &LinearCode,
    w: usize,
    t: usize,
    enum_budget_log2: u32,
) -> Result<(u64, TDesignOutcome)> {
    if t == 0 || t >= w {
        return Err(Error::BadStrength { t, k: w });
    }
    if w >= code.n() {
        return Err(Error::UnsupportedCase(format!(
            "trivial design: block size {w} not below v={}",
            code.n()
        )));
    }
    enumerate::check_budget(code.k(), enum_budget_log2)?;
    enumerate::check_width(code.n())?;
    let len = counter_len(code.n(), t)?;
    let tables = RankTables::new(code.n(), t);
    let scan_range = |(start, end): (u64, u64)| {
        let mut counters = vec![0u32; len];
        let mut blocks = 0u64;
        enumerate::visit_supports_in_range(code, w, start, end, &mut |block| {
            blocks += 1;
            tables.count_block(block, t, &mut counters);
        });
        (counters, blocks)
    };
    let total = 1u64 << code.k();
    let ranges = enumerate::even_ranges(total);
    #[cfg(feature = "parallel")]
    let (counters, blocks) = ranges
        .into_par_iter()
        .map(scan_range)
        .reduce(
            || (vec![0u32; len], 0),
            |(ca, ba), (cb, bb)| (merge_counters(ca, cb), ba + bb),
        );
    #[cfg(not(feature = "parallel"))]
    let (counters, blocks) = ranges.into_iter().map(scan_range).fold(
        (vec![0u32; len], 0),
        |(ca, ba), (cb, bb)| (merge_counters(ca, cb), ba + bb),
    );
    if blocks == 0 {
        return Err(Error::NoBlocksAtWeight(w));
    }
    Ok((blocks, scan_counters(&counters)))
}

/// Necessary divisibility condition: C(k-i, t-i) divides lambda * C(v-i, t-i)
/// for all 0 <= i <= t.
pub fn divisibility_check(t: usize, v: usize, k: usize, lambda: &BigUint) -> bool {
    assert!(0 < t && t <= k && k <= v);
    (0..=t).all(|i| {
        let lhs = binomial((k - i) as u64, (t - i) as u64);
        (lambda * binomial((v - i) as u64, (t - i) as u64)).is_multiple_of(&lhs)
    })
}

/// lambda = block_count * C(k, t) / C(v, t); the division must be exact.
pub fn lambda_from_count(
    block_count: &BigUint,
    t: usize,
    v: usize,
    k: usize,
) -> Result<BigUint> {
    let numerator = block_count * binomial(k as u64, t as u64);
    let (quot, rem) = numerator.div_rem(&binomial(v as u64, t as u64));
    if !rem.is_zero() {
        return Err(Error::NotDesignConsistent { count: block_count.to_string(), t, v, k });
    }
    Ok(quot)
}

/// Outcome of the Assmus-Mattson hypothesis check on a dual distribution
/// pair.
///
/// `s` counts the nonzero weights of the first distribution inside
/// (0, v - t]; the theorem is applied with the second code in the
/// distance-d role, so the precondition is t < d_perp, while `passes`
/// records s <= d - t. `design_weights` / `design_weights_dual` list every
/// weight asserted to hold a t-design in the first and second code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmReport {
    pub t: usize,
    pub d: usize,
    pub d_perp: usize,
    pub s: usize,
    pub passes: bool,
    pub design_weights: Vec<usize>,
    pub design_weights_dual: Vec<usize>,
}

pub fn assmus_mattson_audit(
    wd: &crate::wdist::WeightDistribution,
    wd_dual: &crate::wdist::WeightDistribution,
    t: usize,
) -> Result<AmReport> {
    let v = wd.n();
    if wd_dual.n() != v {
        return Err(Error::NotDualPair(format!("lengths {v} and {}", wd_dual.n())));
    }
    let total = wd.total();
    let kappa = total.bits().saturating_sub(1) as u32;
    if total != BigUint::one() << kappa {
        return Err(Error::NotDualPair(format!("first code size {total} is not a power of 2")));
    }
    if crate::closed_form::macwilliams(wd, kappa, 2)? != *wd_dual {
        return Err(Error::NotDualPair(
            "second distribution is not the MacWilliams transform of the first".into(),
        ));
    }
    let d = wd
        .min_nonzero_weight()
        .ok_or_else(|| Error::UnsupportedCase("zero-dimensional code".into()))?;
    let d_perp = wd_dual
        .min_nonzero_weight()
        .ok_or_else(|| Error::UnsupportedCase("zero-dimensional dual".into()))?;
    if t == 0 {
        return Err(Error::BadStrength { t, k: d });
    }
    if t >= d_perp {
        return Err(Error::StrengthTooLarge { t, d: d_perp });
    }
    let s = wd.nonzero_weights().into_iter().filter(|&i| i >= 1 && i <= v - t).count();
    Ok(AmReport {
        t,
        d,
        d_perp,
        s,
        passes: s <= d - t,
        design_weights: wd.nonzero_weights().into_iter().filter(|&i| i > 0).collect(),
        design_weights_dual: wd_dual.nonzero_weights().into_iter().filter(|&i| i > 0).collect(),
    })
}

/// Which code of the family a tabulated design formula refers to.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum DesignFamily {
    /// 2-designs from the five-weight [2^m - 1, 3m] code.
    Code,
    /// 2-designs from its [2^m - 1, 2^m - 1 - 3m, 7] dual.
    Dual,
    /// 3-designs from the [2^m, 3m + 1] dual of the extended dual.
    DoubleDual,
    /// 3-designs from the [2^m, 2^m - 1 - 3m, 8] extended dual.
    ExtendedDual,
}

impl DesignFamily {
    pub fn strength(self) -> usize {
        match self {
            DesignFamily::Code | DesignFamily::Dual => 2,
            DesignFamily::DoubleDual | DesignFamily::ExtendedDual => 3,
        }
    }

    pub fn points(self, m: u32) -> usize {
        match self {
            DesignFamily::Code | DesignFamily::Dual => (1 << m) - 1,
            DesignFamily::DoubleDual | DesignFamily::ExtendedDual => 1 << m,
        }
    }
}

fn check_m(m: u32, k: u64, needs_m7: bool) -> Result<()> {
    if m % 2 == 0 || m < 5 {
        return Err(Error::UnsupportedCase(format!("m={m} is not an odd degree >= 5")));
    }
    if needs_m7 && m < 7 {
        return Err(Error::UnsupportedCase(format!("block size {k} requires m >= 7")));
    }
    Ok(())
}

fn exact_div(numerator: BigUint, denom: u64, what: &str) -> Result<BigUint> {
    let (quot, rem) = numerator.div_rem(&BigUint::from(denom));
    if !rem.is_zero() {
        return Err(Error::FormulaInconsistency(format!("{what} is not divisible by {denom}")));
    }
    Ok(quot)
}

/// The tabulated lambda of the (family, block size) design at degree m.
///
/// Covered cases: all five weights of the code and of the double dual, block
/// sizes 7/8/9 of the dual, and 8/10/12 of the extended dual (9 and 10
/// require m >= 7). Every stated division is checked exact.
pub fn tabulated_lambda(m: u32, family: DesignFamily, k: u64) -> Result<BigUint> {
    check_m(m, k, matches!((family, k), (DesignFamily::Dual, 9) | (DesignFamily::ExtendedDual, 10)))?;
    let h = 1u64 << (m - 1);
    let e1 = 1u64 << ((m + 1) / 2);
    let e2 = 1u64 << ((m - 1) / 2);
    let p = |e: u32| BigUint::one() << e;
    let big = BigUint::from;
    let unsupported =
        || Error::UnsupportedCase(format!("no tabulated lambda for {family:?} at k={k}, m={m}"));
    match family {
        DesignFamily::Code => {
            let value = if k == h - e1 {
                exact_div(p((m - 5) / 2) * (p((m - 3) / 2) + 1u32) * k * (k - 1), 6, "lambda")?
            } else if k == h - e2 || k == h + e2 {
                exact_div(p(m - 2) * (k - 1) * (p(m - 1) * 5u32 + 4u32), 6, "lambda")?
            } else if k == h {
                p(m - 2) * (p(2 * m - 4) * 9u32 + p(m - 3) * 3u32 + 1u32)
            } else if k == h + e1 {
                exact_div(p((m - 5) / 2) * (p((m - 3) / 2) - 1u32) * k * (k - 1), 6, "lambda")?
            } else {
                return Err(unsupported());
            };
            Ok(value)
        }
        DesignFamily::Dual => match k {
            7 => exact_div(p(2 * (m - 1)) - big(5 * h) + 34u32, 30, "lambda"),
            8 => exact_div((big(h - 4)) * (p(2 * (m - 1)) - big(5 * h) + 34u32), 90, "lambda"),
            9 => exact_div(
                big(h - 4) * big(h - 16) * (p(2 * (m - 1)) - big(h) + 28u32),
                315,
                "lambda",
            ),
            _ => Err(unsupported()),
        },
        DesignFamily::DoubleDual => {
            let value = if k == h - e1 || k == h + e1 {
                exact_div(big(k) * (k - 1) * (k - 2), 48, "lambda")?
            } else if k == h - e2 {
                exact_div(big(e2) * (k - 1) * (e2 - 2) * (p(m - 3) * 5u32 + 1u32), 3, "lambda")?
            } else if k == h + e2 {
                exact_div(big(e2) * (k - 1) * (e2 + 2) * (p(m - 3) * 5u32 + 1u32), 3, "lambda")?
            } else if k == h {
                (p(m - 2) - 1u32) * (p(2 * m - 4) * 9u32 + p(m - 3) * 3u32 + 1u32)
            } else {
                return Err(unsupported());
            };
            Ok(value)
        }
        DesignFamily::ExtendedDual => match k {
            8 => exact_div(p(2 * (m - 1)) - big(5 * h) + 34u32, 30, "lambda"),
            10 => exact_div(
                big(h - 4) * big(h - 16) * (p(2 * (m - 1)) - big(h) + 28u32),
                315,
                "lambda",
            ),
            12 => {
                let hh = m - 1;
                let poly = p(5 * hh) * 2u32 + p(3 * hh) * 647u32 + p(hh) * 11541u32
                    - p(4 * hh) * 55u32
                    - p(2 * hh) * 2727u32
                    - 47208u32;
                exact_div((p(hh - 2) - 1u32) * poly, 2835, "lambda")
            }
            _ => Err(unsupported()),
        },
    }
}

/// The tabulated block-count (frequency) formulas accompanying the dual and
/// extended-dual design examples.
pub fn tabulated_block_count(m: u32, family: DesignFamily, k: u64) -> Result<BigUint> {
    check_m(m, k, matches!((family, k), (DesignFamily::Dual, 9) | (DesignFamily::ExtendedDual, 10)))?;
    let h = 1u64 << (m - 1);
    let p = |e: u32| BigUint::one() << e;
    let big = BigUint::from;
    let n_count = big((1u64 << m) - 1);
    let quad_a = || p(2 * (m - 1)) - big(5 * h) + 34u32;
    let quad_b = || p(2 * (m - 1)) - big(h) + 28u32;
    match (family, k) {
        (DesignFamily::Dual, 7) => exact_div(big(h - 1) * &n_count * quad_a(), 630, "count"),
        (DesignFamily::Dual, 8) => {
            exact_div(big(h - 1) * big(h - 4) * &n_count * quad_a(), 2520, "count")
        }
        (DesignFamily::Dual, 9) => exact_div(
            big(h - 1) * big(h - 4) * big(h - 16) * &n_count * quad_b(),
            11340,
            "count",
        ),
        (DesignFamily::ExtendedDual, 8) => {
            exact_div(p(m) * big(h - 1) * &n_count * quad_a(), 315, "count")
        }
        (DesignFamily::ExtendedDual, 10) => exact_div(
            p(m - 1) * big(h - 1) * &n_count * big(h - 4) * big(h - 16) * quad_b(),
            4 * 14175,
            "count",
        ),
        (DesignFamily::ExtendedDual, 12) => {
            let eps2 = p(m - 1); // epsilon^2 with epsilon = 2^((m-1)/2)
            let poly = &eps2 * &eps2 * &eps2 * &eps2 * &eps2 * 2u32 + &eps2 * &eps2 * &eps2 * 647u32
                + &eps2 * 11541u32
                - &eps2 * &eps2 * &eps2 * &eps2 * 55u32
                - &eps2 * &eps2 * 2727u32
                - 47208u32;
            exact_div(
                &eps2 * (&eps2 - 1u32) * (&eps2 - 4u32) * (&eps2 * 2u32 - 1u32) * poly,
                8 * 467775,
                "count",
            )
        }
        _ => Err(Error::UnsupportedCase(format!(
            "no tabulated block count for {family:?} at k={k}"
        ))),
    }
}
