//! Binary linear codes: generator matrices over GF(2), duals, extension by a
//! parity coordinate, and the padded-generator construction of the dual of an
//! extended dual.
//!
//! Rows are bit-packed into `u64` words, coordinate 0 in the lowest bit of the
//! first word. A `LinearCode` is immutable after construction; the rank of its
//! generator rows is checked up front.

use std::fmt;
use std::io::{BufRead, BufReader, Read, Write};
use std::path::Path;

use crate::error::{Error, Result};

pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

pub(crate) fn get_bit(row: &[u64], j: usize) -> bool {
    row[j / 64] >> (j % 64) & 1 == 1
}

fn set_bit(row: &mut [u64], j: usize) {
    row[j / 64] |= 1u64 << (j % 64);
}

fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
pub(crate) fn row_reduce(rows: &mut [Vec<u64>], n: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| get_bit(&rows[i], c)) else {
            continue;
        };
        rows.swap(r, p);
        let pivot_row = std::mem::take(&mut rows[r]);
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && get_bit(row, c) {
                xor_into(row, &pivot_row);
            }
        }
        rows[r] = pivot_row;
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub(crate) fn rank_of(mut rows: Vec<Vec<u64>>, n: usize) -> usize {
    row_reduce(&mut rows, n).len()
}

/// The support of a codeword: its nonzero coordinate indices, ascending.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Support(Vec<u32>);

impl Support {
    /// Wraps a strictly increasing index list.
    pub fn new(indices: Vec<u32>) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        Support(indices)
    }

    pub fn indices(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub(crate) fn from_words(words: &[u64]) -> Self {
        let mut idx = Vec::new();
        for (i, &w) in words.iter().enumerate() {
            let mut bits = w;
            while bits != 0 {
                idx.push((i * 64) as u32 + bits.trailing_zeros());
                bits &= bits - 1;
            }
        }
        Support(idx)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct LinearCode {
    n: usize,
    k: usize,
    rows: Vec<Vec<u64>>,
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearCode[{}, {}]", self.n, self.k)
    }
}

impl LinearCode {
    /// Builds a code from packed generator rows, checking linear
    /// independence.
    pub fn new(n: usize, rows: Vec<Vec<u64>>) -> Result<Self> {
        let code = Self::new_unchecked(n, rows)?;
        let rank = rank_of(code.rows.clone(), n);
        if rank != code.k {
            return Err(Error::DependentRows { rank, k: code.k });
        }
        Ok(code)
    }

    /// Shape validation only; for constructions whose rows are independent
    /// structurally (null-space bases, parity extensions), where the rank
    /// recheck would dominate at large n.
    fn new_unchecked(n: usize, rows: Vec<Vec<u64>>) -> Result<Self> {
        let k = rows.len();
        if n == 0 || k == 0 || k > n {
            return Err(Error::BadCodeShape { n, k });
        }
        let w = words_for(n);
        for row in &rows {
            assert_eq!(row.len(), w, "row width mismatch");
            // no stray bits above coordinate n-1
            if n % 64 != 0 {
                assert_eq!(row[w - 1] >> (n % 64), 0, "row has bits beyond n");
            }
        }
        Ok(LinearCode { n, k, rows })
    }

    /// Builds a code from 0/1 coordinate vectors.
    pub fn from_bits(n: usize, bit_rows: &[Vec<u8>]) -> Result<Self> {
        let rows = bit_rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), n);
                let mut row = vec![0u64; words_for(n)];
                for (j, &b) in r.iter().enumerate() {
                    if b == 1 {
                        set_bit(&mut row, j);
                    }
                }
                row
            })
            .collect();
        Self::new(n, rows)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn bit(&self, row: usize, col: usize) -> bool {
        get_bit(&self.rows[row], col)
    }

    /// The dual code: an [n, n-k] code spanning the null space of the
    /// generator rows, built from the reduced echelon form's free columns.
    pub fn dual(&self) -> Result<LinearCode> {
        if self.k == self.n {
            return Err(Error::ZeroDual(self.n));
        }
        let mut reduced = self.rows.clone();
        let pivots = row_reduce(&mut reduced, self.n);
        debug_assert_eq!(pivots.len(), self.k);
        let is_pivot = {
            let mut v = vec![false; self.n];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let w = words_for(self.n);
        let mut dual_rows = Vec::with_capacity(self.n - self.k);
        for f in (0..self.n).filter(|&c| !is_pivot[c]) {
            let mut h = vec![0u64; w];
            set_bit(&mut h, f);
            for (i, &p) in pivots.iter().enumerate() {
                if get_bit(&reduced[i], f) {
                    set_bit(&mut h, p);
                }
            }
            dual_rows.push(h);
        }
        // each row holds the only 1 in its free column, so the basis is
        // independent by construction
        LinearCode::new_unchecked(self.n, dual_rows)
    }

    /// Appends an overall parity coordinate at index n, so every codeword of
    /// the result has even weight.
    pub fn extend(&self) -> LinearCode {
        let w = words_for(self.n + 1);
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut ext = row.clone();
                ext.resize(w, 0);
                let parity: u64 = row.iter().map(|x| x.count_ones() as u64).sum::<u64>() & 1;
                if parity == 1 {
                    set_bit(&mut ext, self.n);
                }
                ext
            })
            .collect();
        LinearCode::new_unchecked(self.n + 1, rows).expect("extension keeps the row count valid")
    }

    /// The [n+1, k+1] code generated by the all-one vector together with the
    /// zero-padded rows of `self`; equals the dual of the extended dual.
    pub fn double_dual_generator(&self) -> Result<LinearCode> {
        let n1 = self.n + 1;
        let w = words_for(n1);
        let mut rows = Vec::with_capacity(self.k + 1);
        let mut ones = vec![u64::MAX; w];
        if n1 % 64 != 0 {
            ones[w - 1] = (1u64 << (n1 % 64)) - 1;
        }
        rows.push(ones);
        for row in &self.rows {
            let mut padded = row.clone();
            padded.resize(w, 0);
            rows.push(padded);
        }
        if rank_of(rows.clone(), n1) != self.k + 1 {
            return Err(Error::RankDefect);
        }
        LinearCode::new_unchecked(n1, rows)
    }

    /// Whether both codes span the same codeword set, decided by a rank
    /// argument on the stacked generators.
    pub fn same_codeword_set(&self, other: &LinearCode) -> bool {
        if self.n != other.n || self.k != other.k {
            return false;
        }
        let mut stacked = self.rows.clone();
        stacked.extend(other.rows.iter().cloned());
        rank_of(stacked, self.n) == self.k
    }

    /// Every generator row of `dual` has even intersection with every row of
    /// `self`.
    pub fn orthogonal_to(&self, dual: &LinearCode) -> bool {
        self.n == dual.n
            && self.rows.iter().all(|a| {
                dual.rows
                    .iter()
                    .all(|b| a.iter().zip(b).map(|(x, y)| (x & y).count_ones()).sum::<u32>() % 2 == 0)
            })
    }

    pub fn write_to(&self, path: &Path) -> Result<()> {
        let mut out = std::io::BufWriter::new(std::fs::File::create(path)?);
        write!(out, "{}", self.render())?;
        Ok(())
    }

    fn render(&self) -> String {
        let mut s = format!("n={}\nk={}\n", self.n, self.k);
        for row in &self.rows {
            for j in 0..self.n {
                s.push(if get_bit(row, j) { '1' } else { '0' });
            }
            s.push('\n');
        }
        s
    }

    pub fn read_from(path: &Path) -> Result<LinearCode> {
        Self::parse(BufReader::new(std::fs::File::open(path)?), &path.display().to_string())
    }

    fn parse<R: Read>(reader: BufReader<R>, origin: &str) -> Result<LinearCode> {
        let err = |msg: &str| Error::Parse { path: origin.to_string(), msg: msg.to_string() };
        let mut lines = reader.lines();
        let mut header = |prefix: &str| -> Result<usize> {
            let line = lines.next().transpose()?.ok_or_else(|| err("missing header line"))?;
            line.strip_prefix(prefix)
                .and_then(|v| v.parse().ok())
                .ok_or_else(|| err(&format!("expected `{prefix}<int>`")))
        };
        let n = header("n=")?;
        let k = header("k=")?;
        let mut bit_rows = Vec::with_capacity(k);
        for _ in 0..k {
            let line = lines.next().transpose()?.ok_or_else(|| err("missing generator row"))?;
            if line.len() != n || !line.bytes().all(|b| b == b'0' || b == b'1') {
                return Err(err(&format!("expected {n} characters from {{0,1}}")));
            }
            bit_rows.push(line.bytes().map(|b| b - b'0').collect());
        }
        LinearCode::from_bits(n, &bit_rows)
    }
}
