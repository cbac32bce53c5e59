//! Exact weight-enumerator calculus: the MacWilliams transform and the
//! closed-form distributions of the five-weight code family, its dual, the
//! extended dual, and the dual of the extended dual.
//!
//! Everything here is arbitrary-precision integer arithmetic; the divisions
//! by q^kappa, 2^(3m), 3, and friends are exactness checks in their own
//! right and fail loudly instead of rounding.
//!
//! The signed binomial convolutions that drive the transforms are the
//! coefficients of f(z) = (1-z)^a (1+(q-1)z)^b. They are generated by the
//! exact linear recurrence obtained from (1-z)(1+(q-1)z) f' = ((q-1)b - a -
//! (q-1)(a+b)z) f, which costs O(n) big-integer operations per series
//! instead of the O(n^2) termwise convolution; the convolution stays in the
//! test suite as the independent oracle.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::wdist::WeightDistribution;

/// Largest extension degree for the dense dual / extended-dual closed forms;
/// beyond it the binomial-scale coefficients outgrow desk memory.
pub const MAX_CLOSED_FORM_M: u32 = 13;

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Pascal row: C(n, 0..=n).
fn binomial_row(n: usize) -> Vec<BigUint> {
    let mut row = Vec::with_capacity(n + 1);
    row.push(BigUint::one());
    for k in 0..n {
        let next = &row[k] * (n - k) / (k + 1);
        row.push(next);
    }
    row
}

/// Coefficients 0..len-1 of (1-z)^a (1+(q-1)z)^b.
fn product_coeffs(a: u64, b: u64, q: u64, len: usize) -> Vec<BigInt> {
    let mut c = Vec::with_capacity(len);
    c.push(BigInt::one());
    if len == 1 {
        return c;
    }
    let qm1 = BigInt::from(q - 1);
    c.push(&qm1 * b - BigInt::from(a));
    for k in 1..len - 1 {
        let lead = &qm1 * b - BigInt::from(a) - BigInt::from(q - 2) * k as u64;
        let trail = &qm1 * (BigInt::from(k as u64) - 1 - BigInt::from(a + b));
        let numerator: BigInt = lead * &c[k] + trail * &c[k - 1];
        let (quot, rem) = numerator.div_rem(&BigInt::from(k as u64 + 1));
        debug_assert!(rem.is_zero(), "recurrence division must be exact");
        c.push(quot);
    }
    c
}

fn to_nonneg(value: BigInt, what: &str) -> Result<BigUint> {
    match value.to_biguint() {
        Some(v) => Ok(v),
        None => Err(Error::FormulaInconsistency(format!("{what} is negative: {value}"))),
    }
}

fn exact_shift_right(value: BigInt, bits: u64, what: &str) -> Result<BigUint> {
    let v = to_nonneg(value, what)?;
    if (&v & ((BigUint::one() << bits) - 1u32)) != BigUint::zero() {
        return Err(Error::FormulaInconsistency(format!("{what} is not divisible by 2^{bits}")));
    }
    Ok(v >> bits)
}

/// The MacWilliams transform: the dual distribution of a q-ary [v, kappa]
/// code with distribution `wd`, computed exactly.
pub fn macwilliams(wd: &WeightDistribution, kappa: u32, q: u64) -> Result<WeightDistribution> {
    let v = wd.n();
    let total = wd.total();
    if total != BigUint::from(q).pow(kappa) {
        return Err(Error::InvalidDistribution(format!(
            "counts sum to {total}, expected {q}^{kappa}"
        )));
    }
    let mut acc = vec![BigInt::zero(); v + 1];
    for i in wd.nonzero_weights() {
        let coeffs = product_coeffs(i as u64, (v - i) as u64, q, v + 1);
        let count = BigInt::from_biguint(Sign::Plus, wd.count(i).clone());
        for (slot, coeff) in acc.iter_mut().zip(coeffs) {
            *slot += &count * coeff;
        }
    }
    let denom = BigInt::from(q).pow(kappa);
    let mut counts = Vec::with_capacity(v + 1);
    for (j, value) in acc.into_iter().enumerate() {
        if value.is_negative() {
            return Err(Error::InvalidDistribution(format!("negative count at weight {j}")));
        }
        let (quot, rem) = value.div_rem(&denom);
        if !rem.is_zero() {
            return Err(Error::InvalidDistribution(format!(
                "count at weight {j} is not divisible by {q}^{kappa}"
            )));
        }
        counts.push(quot.to_biguint().unwrap());
    }
    Ok(WeightDistribution::from_counts(counts))
}

fn require_odd_m(m: u32, max: u32) -> Result<()> {
    if m % 2 == 0 {
        return Err(Error::EvenExtensionDegree(m));
    }
    if m < 5 || m > max {
        return Err(Error::UnsupportedCase(format!(
            "m={m} outside the supported odd range 5..={max}"
        )));
    }
    Ok(())
}

/// The five nonzero weights and frequencies of the [2^m - 1, 3m] code family,
/// ascending by weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiveWeightParams {
    pub m: u32,
    pub weights: [u64; 5],
    pub freqs: [BigUint; 5],
}

pub fn five_weight_params(m: u32) -> Result<FiveWeightParams> {
    require_odd_m(m, 61)?;
    let exact_third = |value: BigUint, what: &str| -> Result<BigUint> {
        let (quot, rem) = value.div_rem(&BigUint::from(3u32));
        if !rem.is_zero() {
            return Err(Error::FormulaInconsistency(format!("{what} is not divisible by 3")));
        }
        Ok(quot)
    };
    let p = |e: u32| BigUint::one() << e;
    let n_count = p(m) - 1u32;
    let half = (m - 1) / 2; // weights h +- 2^(half) and h +- 2^(half+1)
    let a = exact_third(
        &n_count * p((m - 5) / 2) * (p((m - 3) / 2) + 1u32) * (p(m - 1) - 1u32),
        "first frequency",
    )?;
    let b = exact_third(
        &n_count * p((m - 3) / 2) * (p(half) + 1u32) * (p(m - 1) * 5u32 + 4u32),
        "second frequency",
    )?;
    let c = &n_count * (p(2 * m - 4) * 9u32 + p(m - 3) * 3u32 + 1u32);
    let d = exact_third(
        &n_count * p((m - 3) / 2) * (p(half) - 1u32) * (p(m - 1) * 5u32 + 4u32),
        "fourth frequency",
    )?;
    let e = exact_third(
        &n_count * p((m - 5) / 2) * (p((m - 3) / 2) - 1u32) * (p(m - 1) - 1u32),
        "fifth frequency",
    )?;
    let total = &a + &b + &c + &d + &e + 1u32;
    if total != p(3 * m) {
        return Err(Error::FormulaInconsistency(format!(
            "frequencies sum to {total}, expected 2^{}",
            3 * m
        )));
    }
    let h = 1u64 << (m - 1);
    let e1 = 1u64 << (half + 1);
    let e2 = 1u64 << half;
    Ok(FiveWeightParams {
        m,
        weights: [h - e1, h - e2, h, h + e2, h + e1],
        freqs: [a, b, c, d, e],
    })
}

/// Dense distribution of the five-weight code (length 2^m - 1).
pub fn five_weight_distribution(m: u32) -> Result<WeightDistribution> {
    require_odd_m(m, 21)?;
    let params = five_weight_params(m)?;
    let mut wd = WeightDistribution::zeros((1 << m) - 1);
    wd.set_count(0, BigUint::one());
    for (w, f) in params.weights.iter().zip(params.freqs) {
        wd.set_count(*w as usize, f);
    }
    Ok(wd)
}

/// Closed-form distribution of the [2^m - 1, 2^m - 1 - 3m, 7] dual: for each
/// k the bracketed integer expression is assembled from the five signed
/// binomial convolutions and divided exactly by 2^(3m).
pub fn dual_closed_form(m: u32) -> Result<WeightDistribution> {
    require_odd_m(m, MAX_CLOSED_FORM_M)?;
    let params = five_weight_params(m)?;
    let n = (1usize << m) - 1;
    let h = 1u64 << (m - 1);
    let e1 = 1u64 << ((m + 1) / 2);
    let e2 = 1u64 << ((m - 1) / 2);
    let series = [
        product_coeffs(h - e1, h + e1 - 1, 2, n + 1),
        product_coeffs(h - e2, h + e2 - 1, 2, n + 1),
        product_coeffs(h, h - 1, 2, n + 1),
        product_coeffs(h + e2, h - e2 - 1, 2, n + 1),
        product_coeffs(h + e1, h - e1 - 1, 2, n + 1),
    ];
    let freqs: Vec<BigInt> =
        params.freqs.iter().map(|f| BigInt::from_biguint(Sign::Plus, f.clone())).collect();
    let binoms = binomial_row(n);
    let mut counts = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut value = BigInt::from_biguint(Sign::Plus, binoms[k].clone());
        for (freq, u) in freqs.iter().zip(&series) {
            value += freq * &u[k];
        }
        counts.push(exact_shift_right(value, 3 * m as u64, &format!("dual count at weight {k}"))?);
    }
    Ok(WeightDistribution::from_counts(counts))
}

/// Frequencies u, v, w of the [2^m, 3m + 1] dual of the extended dual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleDualParams {
    pub m: u32,
    /// Count at weights 2^(m-1) +- 2^((m+1)/2).
    pub freq_u: BigUint,
    /// Count at weights 2^(m-1) +- 2^((m-1)/2).
    pub freq_v: BigUint,
    /// Count at the middle weight 2^(m-1).
    pub freq_w: BigUint,
}

pub fn double_dual_params(m: u32) -> Result<DoubleDualParams> {
    require_odd_m(m, 41)?;
    let exact_third = |value: BigInt, what: &str| -> Result<BigUint> {
        let (quot, rem) = value.div_rem(&BigInt::from(3));
        if !rem.is_zero() {
            return Err(Error::FormulaInconsistency(format!("{what} is not divisible by 3")));
        }
        to_nonneg(quot, what)
    };
    let p = |e: u32| BigInt::one() << e;
    let freq_u = exact_third(p(3 * m - 4) - 3 * p(2 * m - 4) + p(m - 3), "frequency u")?;
    let freq_v = exact_third(5 * p(3 * m - 2) + 3 * p(2 * m - 2) - p(m + 1), "frequency v")?;
    let freq_w = ((BigUint::one() << m) - 1u32)
        * ((BigUint::one() << (2 * m - 4)) * 9u32 + (BigUint::one() << (m - 3)) * 3u32 + 1u32)
        * 2u32;
    let total = 2u32 + &freq_u * 2u32 + &freq_v * 2u32 + &freq_w;
    if total != BigUint::one() << (3 * m + 1) {
        return Err(Error::FormulaInconsistency(format!(
            "double-dual frequencies sum to {total}, expected 2^{}",
            3 * m + 1
        )));
    }
    Ok(DoubleDualParams { m, freq_u, freq_v, freq_w })
}

/// Dense distribution of the [2^m, 3m + 1] code: palindromic with seven
/// nonzero weights.
pub fn double_dual_closed_form(m: u32) -> Result<WeightDistribution> {
    require_odd_m(m, 21)?;
    let params = double_dual_params(m)?;
    let len = 1usize << m;
    let h = len / 2;
    let e1 = 1usize << ((m + 1) / 2);
    let e2 = 1usize << ((m - 1) / 2);
    let mut wd = WeightDistribution::zeros(len);
    wd.set_count(0, BigUint::one());
    wd.set_count(len, BigUint::one());
    wd.set_count(h, params.freq_w);
    wd.set_count(h - e1, params.freq_u.clone());
    wd.set_count(h + e1, params.freq_u);
    wd.set_count(h - e2, params.freq_v.clone());
    wd.set_count(h + e2, params.freq_v);
    Ok(wd)
}

/// Closed-form distribution of the [2^m, 2^m - 1 - 3m, 8] extended dual;
/// every odd-weight count is zero and the division by 2^(3m+1) is exact.
pub fn extended_dual_closed_form(m: u32) -> Result<WeightDistribution> {
    require_odd_m(m, MAX_CLOSED_FORM_M)?;
    let params = double_dual_params(m)?;
    let len = 1usize << m;
    let h = 1u64 << (m - 1);
    let e1 = 1u64 << ((m + 1) / 2);
    let e2 = 1u64 << ((m - 1) / 2);
    let u = BigInt::from_biguint(Sign::Plus, params.freq_u);
    let v = BigInt::from_biguint(Sign::Plus, params.freq_v);
    let w = BigInt::from_biguint(Sign::Plus, params.freq_w);
    let series1 = product_coeffs(h - e1, h + e1, 2, len + 1);
    let series2 = product_coeffs(h - e2, h + e2, 2, len + 1);
    let series3 = product_coeffs(h + e2, h - e2, 2, len + 1);
    let series4 = product_coeffs(h + e1, h - e1, 2, len + 1);
    let binoms = binomial_row(len);
    let half_binoms = binomial_row(len / 2);
    let mut counts = Vec::with_capacity(len + 1);
    for k in 0..=len {
        let mut value = BigInt::zero();
        if k % 2 == 0 {
            value += BigInt::from_biguint(Sign::Plus, binoms[k].clone()) * 2;
            // (1 - z^2)^(2^(m-1)) contributes (-1)^(k/2) C(2^(m-1), k/2)
            let mut middle =
                BigInt::from_biguint(Sign::Plus, half_binoms[k / 2].clone()) * &w;
            if (k / 2) % 2 == 1 {
                middle = -middle;
            }
            value += middle;
        }
        value += &u * &series1[k] + &v * &series2[k] + &v * &series3[k] + &u * &series4[k];
        counts.push(exact_shift_right(
            value,
            3 * m as u64 + 1,
            &format!("extended-dual count at weight {k}"),
        )?);
    }
    Ok(WeightDistribution::from_counts(counts))
}

/// First and third power-moment identities for a length-2^m distribution of
/// a [2^m, 3m + 1] code whose dual has minimum distance 8.
pub fn pless_check(wd: &WeightDistribution, m: u32) -> bool {
    assert_eq!(wd.n(), 1 << m, "distribution length must be 2^m");
    if wd.total() != BigUint::one() << (3 * m + 1) {
        return false;
    }
    let second_moment: BigUint =
        (0..=wd.n()).map(|i| wd.count(i) * (i as u64 * i as u64)).sum();
    second_moment == (BigUint::one() << (3 * m - 1 + m)) * ((BigUint::one() << m) + 1u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Termwise convolution oracle for the series coefficients.
    fn product_coeffs_conv(a: u64, b: u64, q: u64, len: usize) -> Vec<BigInt> {
        (0..len)
            .map(|k| {
                let mut acc = BigInt::zero();
                for i in 0..=k.min(a as usize) {
                    let j = (k - i) as u64;
                    if j > b {
                        continue;
                    }
                    let term = BigInt::from_biguint(Sign::Plus, binomial(a, i as u64))
                        * BigInt::from_biguint(Sign::Plus, binomial(b, j))
                        * BigInt::from(q - 1).pow(j as u32);
                    acc += if i % 2 == 0 { term } else { -term };
                }
                acc
            })
            .collect()
    }

    #[test]
    fn recurrence_matches_convolution_oracle() {
        for q in [2u64, 3, 4] {
            for (a, b) in [(0u64, 0u64), (1, 0), (0, 1), (5, 3), (12, 19), (16, 15), (24, 7)] {
                let len = (a + b) as usize + 3;
                assert_eq!(
                    product_coeffs(a, b, q, len),
                    product_coeffs_conv(a, b, q, len),
                    "a={a} b={b} q={q}"
                );
            }
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(0, 0), BigUint::one());
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(5, 6), BigUint::zero());
        assert_eq!(binomial(31, 2), BigUint::from(465u32));
        assert_eq!(binomial(128, 3), BigUint::from(341376u32));
        assert_eq!(binomial_row(6).iter().map(|b| b.to_string()).collect::<Vec<_>>(), [
            "1", "6", "15", "20", "15", "6", "1"
        ]);
    }

    #[test]
    fn macwilliams_trivial_cases() {
        // dual of the zero-dimensional code is the full space
        let mut zero = WeightDistribution::zeros(5);
        zero.set_count(0, BigUint::one());
        let full = macwilliams(&zero, 0, 2).unwrap();
        for j in 0..=5u64 {
            assert_eq!(full.count(j as usize), &binomial(5, j));
        }
        // [3,1] repetition -> even-weight [3,2] code
        let mut rep = WeightDistribution::zeros(3);
        rep.set_count(0, BigUint::one());
        rep.set_count(3, BigUint::one());
        let dual = macwilliams(&rep, 1, 2).unwrap();
        assert_eq!(dual.nonzero_weights(), vec![0, 2]);
        assert_eq!(dual.count(2), &BigUint::from(3u32));
        // and back: involution
        assert_eq!(macwilliams(&dual, 2, 2).unwrap(), rep);
    }

    #[test]
    fn macwilliams_ternary_repetition() {
        // scalings of (1,1,1) over GF(3): {0:1, 3:2}; the dual is the ternary
        // parity-check code with distribution {0:1, 2:6, 3:2}
        let mut rep = WeightDistribution::zeros(3);
        rep.set_count(0, BigUint::one());
        rep.set_count(3, BigUint::from(2u32));
        let dual = macwilliams(&rep, 1, 3).unwrap();
        assert_eq!(dual.count(0), &BigUint::one());
        assert_eq!(dual.count(1), &BigUint::zero());
        assert_eq!(dual.count(2), &BigUint::from(6u32));
        assert_eq!(dual.count(3), &BigUint::from(2u32));
        assert_eq!(macwilliams(&dual, 2, 3).unwrap(), rep);
    }

    #[test]
    fn macwilliams_rejects_bad_totals() {
        let mut wd = WeightDistribution::zeros(3);
        wd.set_count(0, BigUint::from(3u32));
        assert!(matches!(macwilliams(&wd, 1, 2), Err(Error::InvalidDistribution(_))));
    }

    #[test]
    fn five_weight_values_m5_and_m7() {
        let p5 = five_weight_params(5).unwrap();
        assert_eq!(p5.weights, [8, 12, 16, 20, 24]);
        let freqs: Vec<u64> = p5.freqs.iter().map(|f| f.try_into().unwrap()).collect();
        assert_eq!(freqs, [465, 8680, 18259, 5208, 155]);
        let p7 = five_weight_params(7).unwrap();
        assert_eq!(p7.weights, [48, 56, 64, 72, 80]);
        assert_eq!(p7.freqs[0], BigUint::from(26670u32));
        assert!(matches!(five_weight_params(6), Err(Error::EvenExtensionDegree(6))));
        // frequency integrality holds across the audited degrees
        for m in (5..=25).step_by(2) {
            five_weight_params(m).unwrap();
        }
    }

    #[test]
    fn dual_closed_form_m5_matches_transform_and_frozen_values() {
        let cf = dual_closed_form(5).unwrap();
        let via_transform = macwilliams(&five_weight_distribution(5).unwrap(), 15, 2).unwrap();
        assert_eq!(cf, via_transform);
        let expected: &[(usize, u64)] = &[
            (0, 1),
            (7, 155),
            (8, 465),
            (11, 5208),
            (12, 8680),
            (15, 18259),
            (16, 18259),
            (19, 8680),
            (20, 5208),
            (23, 465),
            (24, 155),
            (31, 1),
        ];
        assert_eq!(cf.nonzero_weights(), expected.iter().map(|(w, _)| *w).collect::<Vec<_>>());
        for &(w, c) in expected {
            assert_eq!(cf.count(w), &BigUint::from(c));
        }
    }

    #[test]
    fn dual_closed_form_low_weights_across_m() {
        for m in [5u32, 7, 9, 11, 13] {
            let cf = dual_closed_form(m).unwrap();
            for k in 1..=6 {
                assert!(cf.count(k).is_zero(), "m={m} k={k}");
            }
            assert!(!cf.count(7).is_zero(), "m={m}");
            assert_eq!(cf.total(), BigUint::one() << ((1 << m) - 1 - 3 * m));
        }
    }

    #[test]
    fn dual_closed_form_m7_frozen_counts() {
        let cf = dual_closed_form(7).unwrap();
        assert_eq!(cf.count(7), &BigUint::from(48387u32));
        assert_eq!(cf.count(8), &BigUint::from(725805u32));
        assert_eq!(cf.count(9), &BigUint::from(8249920u32));
    }

    #[test]
    fn double_dual_values() {
        let p5 = double_dual_params(5).unwrap();
        assert_eq!(p5.freq_u, BigUint::from(620u32));
        assert_eq!(p5.freq_v, BigUint::from(13888u32));
        assert_eq!(p5.freq_w, BigUint::from(36518u32));
        assert_eq!(double_dual_params(7).unwrap().freq_u, BigUint::from(42672u32));
        for m in [5u32, 7, 9, 11, 13] {
            let wd = double_dual_closed_form(m).unwrap();
            assert!(wd.is_palindromic(), "m={m}");
            assert!(pless_check(&wd, m), "m={m}");
        }
        // frequency integrality across the audited degrees
        for m in (5..=25).step_by(2) {
            double_dual_params(m).unwrap();
        }
        // a single perturbed count destroys the moment identities
        let mut wd = double_dual_closed_form(5).unwrap();
        wd.set_count(16, wd.count(16) + 1u32);
        assert!(!pless_check(&wd, 5));
    }

    #[test]
    fn extended_dual_m5_and_m7() {
        let ed = extended_dual_closed_form(5).unwrap();
        assert_eq!(ed.nonzero_weights(), vec![0, 8, 12, 16, 20, 24, 32]);
        assert_eq!(ed.count(8), &BigUint::from(620u32));
        assert_eq!(ed.count(12), &BigUint::from(13888u32));
        assert_eq!(ed.count(16), &BigUint::from(36518u32));
        assert_eq!(ed.min_nonzero_weight(), Some(8));
        let ed7 = extended_dual_closed_form(7).unwrap();
        assert!((1..=14).step_by(2).all(|k| ed7.count(k).is_zero()));
        assert_eq!(ed7.count(8), &BigUint::from(774192u32));
        assert_eq!(ed7.count(10), &BigUint::from(105598976u64));
        assert_eq!(ed7.count(12), &BigUint::from(11361676032u64));
        // the extension merges dual weights 2j-1 and 2j into weight 2j
        let dual7 = dual_closed_form(7).unwrap();
        for j in 1..=63 {
            assert_eq!(ed7.count(2 * j), &(dual7.count(2 * j - 1) + dual7.count(2 * j)));
        }
    }
}
