//! Exact weight distributions: one arbitrary-precision count per weight
//! 0..=n.

use std::io::{BufRead, BufReader, Read, Write};
use std::path::Path;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightDistribution {
    counts: Vec<BigUint>,
}

impl WeightDistribution {
    /// An all-zero distribution for length n (n+1 slots).
    pub fn zeros(n: usize) -> Self {
        WeightDistribution { counts: vec![BigUint::zero(); n + 1] }
    }

    pub fn from_counts(counts: Vec<BigUint>) -> Self {
        assert!(!counts.is_empty());
        WeightDistribution { counts }
    }

    pub fn from_u64_counts(counts: &[u64]) -> Self {
        WeightDistribution { counts: counts.iter().map(|&c| BigUint::from(c)).collect() }
    }

    /// The code length n.
    pub fn n(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn count(&self, w: usize) -> &BigUint {
        &self.counts[w]
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn set_count(&mut self, w: usize, c: BigUint) {
        self.counts[w] = c;
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    pub fn nonzero_weights(&self) -> Vec<usize> {
        (0..=self.n()).filter(|&w| !self.counts[w].is_zero()).collect()
    }

    /// Smallest nonzero weight with a positive count.
    pub fn min_nonzero_weight(&self) -> Option<usize> {
        (1..=self.n()).find(|&w| !self.counts[w].is_zero())
    }

    /// counts[i] == counts[n - i] for all i.
    pub fn is_palindromic(&self) -> bool {
        let n = self.n();
        (0..=n / 2).all(|i| self.counts[i] == self.counts[n - i])
    }

    pub fn write_csv_to(&self, path: &Path) -> Result<()> {
        let mut out = std::io::BufWriter::new(std::fs::File::create(path)?);
        write!(out, "{}", self.render_csv())?;
        Ok(())
    }

    /// CSV with a `weight,count` header and one row per nonzero count,
    /// weights ascending.
    pub fn render_csv(&self) -> String {
        let mut s = String::from("weight,count\n");
        for w in 0..=self.n() {
            if !self.counts[w].is_zero() {
                s.push_str(&format!("{w},{}\n", self.counts[w]));
            }
        }
        s
    }

    pub fn read_csv_from(path: &Path) -> Result<WeightDistribution> {
        Self::parse_csv(BufReader::new(std::fs::File::open(path)?), &path.display().to_string())
    }

    pub fn parse_csv<R: Read>(reader: BufReader<R>, origin: &str) -> Result<WeightDistribution> {
        let err = |msg: String| Error::Parse { path: origin.to_string(), msg };
        let mut lines = reader.lines();
        match lines.next().transpose()? {
            Some(h) if h == "weight,count" => {}
            other => return Err(err(format!("expected `weight,count` header, got {other:?}"))),
        }
        let mut pairs: Vec<(usize, BigUint)> = Vec::new();
        for line in lines {
            let line = line?;
            if line.is_empty() {
                continue;
            }
            let (w, c) = line.split_once(',').ok_or_else(|| err(format!("bad row `{line}`")))?;
            let w: usize = w.parse().map_err(|_| err(format!("bad weight `{w}`")))?;
            let c: BigUint = c.parse().map_err(|_| err(format!("bad count `{c}`")))?;
            if pairs.last().is_some_and(|(prev, _)| *prev >= w) {
                return Err(err("weights must be strictly ascending".into()));
            }
            pairs.push((w, c));
        }
        let n = pairs.last().map(|(w, _)| *w).ok_or_else(|| err("no rows".into()))?;
        let mut wd = WeightDistribution::zeros(n);
        for (w, c) in pairs {
            wd.set_count(w, c);
        }
        Ok(wd)
    }
}
