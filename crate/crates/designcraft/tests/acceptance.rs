//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! with its runtime (visible under `--nocapture`). All comparisons are exact
//! integer arithmetic.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use designcraft::{
    assmus_mattson_audit, build_c_m, codeword_set, codewords_of_weight, divisibility_check,
    double_dual_closed_form, double_dual_params, dual_closed_form, extended_dual_closed_form,
    five_weight_distribution, five_weight_params, lambda_from_count, macwilliams,
    minimum_distance, pless_check, supports_to_design, tabulated_block_count, tabulated_lambda,
    verify_family, verify_t_design, verify_weight_class, weight_distribution, BinaryField,
    CheckStatus, CmVariant, DesignFamily, Level, LinearCode, VerifyOptions, WeightDistribution,
    DEFAULT_ENUM_BUDGET_LOG2,
};

fn report(criterion: &str, start: Instant, bound: Duration, detail: &str) {
    let elapsed = start.elapsed();
    println!("criterion {criterion}: PASS ({elapsed:.2?}, bound {bound:.0?}) — {detail}");
    assert!(elapsed <= bound, "criterion {criterion} exceeded its runtime bound: {elapsed:.2?}");
}

fn cm(m: u32, variant: CmVariant) -> LinearCode {
    let field = BinaryField::new(m).unwrap();
    build_c_m(m, variant, &field).unwrap()
}

fn table1_m5() -> BTreeMap<usize, u64> {
    BTreeMap::from([(0, 1), (8, 465), (12, 8680), (16, 18259), (20, 5208), (24, 155)])
}

fn as_map(wd: &WeightDistribution) -> BTreeMap<usize, u64> {
    wd.nonzero_weights()
        .into_iter()
        .map(|w| (w, u64::try_from(wd.count(w)).expect("count fits u64")))
        .collect()
}

#[test]
fn criterion_01_constructions() {
    let start = Instant::now();
    let a = cm(5, CmVariant::Bch0);
    assert_eq!((a.n(), a.k()), (31, 15));
    let b = cm(5, CmVariant::DualNarrow7);
    assert_eq!((b.n(), b.k()), (31, 15));
    let c = cm(7, CmVariant::Bch0);
    assert_eq!((c.n(), c.k()), (127, 21));
    report("1", start, Duration::from_secs(1), "[31,15] twice and [127,21] constructed");
}

#[test]
fn criterion_02_five_weight_distribution_reproduction() {
    let start = Instant::now();
    let wd_a = weight_distribution(&cm(5, CmVariant::Bch0)).unwrap();
    let wd_b = weight_distribution(&cm(5, CmVariant::DualNarrow7)).unwrap();
    assert_eq!(as_map(&wd_a), table1_m5());
    assert_eq!(as_map(&wd_b), table1_m5());
    assert_eq!(wd_a.total(), BigUint::one() << 15);
    let m5_elapsed = start.elapsed();
    assert!(m5_elapsed <= Duration::from_secs(1), "m=5 enumeration took {m5_elapsed:.2?}");

    assert_eq!(minimum_distance(&cm(5, CmVariant::Bch0)).unwrap(), 8);

    let start7 = Instant::now();
    let wd7 = weight_distribution(&cm(7, CmVariant::Bch0)).unwrap();
    assert_eq!(wd7, five_weight_distribution(7).unwrap());
    assert_eq!(wd7.count(48), &BigUint::from(26670u32));
    // the two construction routes share one distribution at m = 7 as well
    assert_eq!(weight_distribution(&cm(7, CmVariant::DualNarrow7)).unwrap(), wd7);
    report("2", start7, Duration::from_secs(60), "2^15 and 2^21 enumerations match closed form");
}

#[test]
fn criterion_03_dual_distribution() {
    let start = Instant::now();
    let transform = macwilliams(&five_weight_distribution(5).unwrap(), 15, 2).unwrap();
    let closed = dual_closed_form(5).unwrap();
    let c5 = cm(5, CmVariant::Bch0);
    let dual5 = c5.dual().unwrap();
    let enumerated = weight_distribution(&dual5).unwrap();
    assert_eq!(transform, closed);
    assert_eq!(closed, enumerated);
    for k in 1..=6 {
        assert!(closed.count(k).is_zero());
    }
    assert_eq!(closed.count(7), &BigUint::from(155u32));
    assert_eq!(minimum_distance(&dual5).unwrap(), 7);
    assert!(codewords_of_weight(&dual5, 6).unwrap().is_empty());
    // taking the dual twice returns to the same codeword set
    assert!(dual5.dual().unwrap().same_codeword_set(&c5));
    for m in [5u32, 7, 9, 11, 13] {
        let cf = dual_closed_form(m).unwrap(); // exact divisions checked inside
        for k in 1..=6 {
            assert!(cf.count(k).is_zero(), "m={m} k={k}");
        }
        assert!(!cf.count(7).is_zero(), "m={m}");
    }
    report("3", start, Duration::from_secs(10), "dual spectrum: transform = closed form = enumeration; low-weight pattern for m in 5..=13");
}

#[test]
fn criterion_04_double_dual_distribution() {
    let start = Instant::now();
    let params = double_dual_params(5).unwrap();
    assert_eq!(params.freq_u, BigUint::from(620u32));
    assert_eq!(params.freq_v, BigUint::from(13888u32));
    assert_eq!(params.freq_w, BigUint::from(36518u32));
    let closed = double_dual_closed_form(5).unwrap();
    let code5 = cm(5, CmVariant::Bch0);
    let dd5 = code5.double_dual_generator().unwrap();
    assert_eq!(weight_distribution(&dd5).unwrap(), closed);
    for m in [5u32, 7, 9, 11, 13] {
        let cf = double_dual_closed_form(m).unwrap();
        assert!(pless_check(&cf, m), "m={m}");
        assert!(cf.is_palindromic(), "m={m}");
    }
    // the two construction routes agree as codeword sets (exhaustive)
    let via_duals = code5.dual().unwrap().extend().dual().unwrap();
    assert_eq!(
        codeword_set(&dd5, DEFAULT_ENUM_BUDGET_LOG2).unwrap(),
        codeword_set(&via_duals, DEFAULT_ENUM_BUDGET_LOG2).unwrap()
    );
    // m=7: 2^22 enumeration matches u = 42672
    let dd7 = cm(7, CmVariant::Bch0).double_dual_generator().unwrap();
    let wd7 = weight_distribution(&dd7).unwrap();
    assert_eq!(wd7, double_dual_closed_form(7).unwrap());
    assert_eq!(wd7.count(48), &BigUint::from(42672u32));
    report("4", start, Duration::from_secs(60), "double-dual spectrum, moments, palindrome, route equality, m=7 u=42672");
}

#[test]
fn criterion_05_extended_dual_distribution() {
    let start = Instant::now();
    let extended = cm(5, CmVariant::Bch0).dual().unwrap().extend();
    let enumerated = weight_distribution(&extended).unwrap();
    let closed = extended_dual_closed_form(5).unwrap();
    assert_eq!(enumerated, closed);
    assert_eq!(closed.count(8), &BigUint::from(620u32));
    assert_eq!(closed.count(12), &BigUint::from(13888u32));
    assert!((1..=31).step_by(2).all(|k| closed.count(k).is_zero()));
    assert_eq!(minimum_distance(&extended).unwrap(), 8);
    report("5", start, Duration::from_secs(5), "extended-dual spectrum matches enumeration at every weight");
}

#[test]
fn criterion_06_audits() {
    let start = Instant::now();
    let audit2 =
        assmus_mattson_audit(&five_weight_distribution(5).unwrap(), &dual_closed_form(5).unwrap(), 2)
            .unwrap();
    assert_eq!((audit2.s, audit2.d, audit2.passes), (5, 8, true));
    let audit3 = assmus_mattson_audit(
        &double_dual_closed_form(5).unwrap(),
        &extended_dual_closed_form(5).unwrap(),
        3,
    )
    .unwrap();
    assert_eq!((audit3.s, audit3.d, audit3.passes), (5, 8, true));
    // strength at or above the dual minimum distance is rejected
    let too_large =
        assmus_mattson_audit(&five_weight_distribution(5).unwrap(), &dual_closed_form(5).unwrap(), 7);
    assert!(too_large.unwrap_err().to_string().contains("t too large"));
    report("6", start, Duration::from_secs(5), "t=2 and t=3 audits give s=5, d=8, hypothesis holds");
}

/// Exhaustively verifies one weight class and checks lambda against the
/// count-derived value, the divisibility condition, and (when given) the
/// tabulated formula.
fn check_design(code: &LinearCode, w: usize, t: usize, expect_lambda: u64, family: Option<DesignFamily>, m: u32) {
    let (blocks, outcome) = verify_weight_class(code, w, t, DEFAULT_ENUM_BUDGET_LOG2).unwrap();
    assert_eq!(outcome.lambda, Some(expect_lambda), "weight {w} of {code:?}");
    let lambda = BigUint::from(expect_lambda);
    assert_eq!(
        lambda_from_count(&BigUint::from(blocks), t, code.n(), w).unwrap(),
        lambda,
        "count-derived lambda at weight {w}"
    );
    assert!(divisibility_check(t, code.n(), w, &lambda), "divisibility at weight {w}");
    if let Some(family) = family {
        assert_eq!(tabulated_lambda(m, family, w as u64).unwrap(), lambda, "formula at weight {w}");
    }
}

#[test]
fn criterion_07_m5_design_verification() {
    let start = Instant::now();
    let code = cm(5, CmVariant::Bch0);
    for (w, lambda) in [(8, 28u64), (12, 1232), (16, 4712), (20, 2128), (24, 92)] {
        check_design(&code, w, 2, lambda, Some(DesignFamily::Code), 5);
    }
    let dual = code.dual().unwrap();
    for (w, lambda) in [(7, 7u64), (8, 28)] {
        check_design(&dual, w, 2, lambda, Some(DesignFamily::Dual), 5);
    }
    let three_designs = [(8, 7u64), (12, 616), (16, 4123), (20, 3192), (24, 253)];
    let double_dual = code.double_dual_generator().unwrap();
    for (w, lambda) in three_designs {
        check_design(&double_dual, w, 3, lambda, Some(DesignFamily::DoubleDual), 5);
    }
    let extended = dual.extend();
    for (w, lambda) in three_designs {
        let family = matches!(w, 8 | 12).then_some(DesignFamily::ExtendedDual);
        check_design(&extended, w, 3, lambda, family, 5);
    }
    // the materialized extract-then-verify route agrees with the fused one
    let design = supports_to_design(&extended, 8).unwrap();
    assert_eq!((design.v(), design.block_size(), design.block_count()), (32, 8, 620));
    assert_eq!(verify_t_design(&design, 3).unwrap().lambda, Some(7));
    report("7", start, Duration::from_secs(120), "all m=5 designs verified exhaustively with matching lambdas");
}

#[test]
fn criterion_08_m7_design_verification() {
    let start = Instant::now();
    let code = cm(7, CmVariant::Bch0);
    let (blocks, outcome) = verify_weight_class(&code, 48, 2, DEFAULT_ENUM_BUDGET_LOG2).unwrap();
    assert_eq!(blocks, 26670);
    assert_eq!(outcome.lambda, Some(3760));
    assert_eq!(tabulated_lambda(7, DesignFamily::Code, 48).unwrap(), BigUint::from(3760u32));
    let dd = code.double_dual_generator().unwrap();
    let (blocks, outcome) = verify_weight_class(&dd, 48, 3, DEFAULT_ENUM_BUDGET_LOG2).unwrap();
    assert_eq!(blocks, 42672);
    assert_eq!(outcome.lambda, Some(2162));
    assert_eq!(tabulated_lambda(7, DesignFamily::DoubleDual, 48).unwrap(), BigUint::from(2162u32));
    report("8", start, Duration::from_secs(600), "2-(127,48,3760) and 3-(128,48,2162) verified exhaustively");
}

#[test]
fn criterion_09_known_discrepancy_detection() {
    let start = Instant::now();
    let report_m5 = verify_family(5, Level::Full, &VerifyOptions::default()).unwrap();
    assert_eq!(report_m5.summary.mismatch_count, 0, "no regressions at m=5");
    assert_eq!(report_m5.summary.mismatch_known_count, 1, "exactly one known mismatch");
    let known: Vec<_> = report_m5
        .checks
        .iter()
        .filter(|c| c.status == CheckStatus::MismatchKnown)
        .collect();
    assert_eq!(known.len(), 1);
    assert_eq!(known[0].name, "extended-dual weight-8 block-count formula");
    assert!(known[0].expected.contains("9920"), "{}", known[0].expected);
    assert!(known[0].observed.contains("620"), "{}", known[0].observed);
    // while the weight-8 lambda = 7 claim itself verifies
    let lambda_record = report_m5
        .checks
        .iter()
        .find(|c| c.name == "3-design at weight 8 (extended dual): lambda formula")
        .unwrap();
    assert_eq!(lambda_record.status, CheckStatus::Match);
    assert!(lambda_record.expected.contains("lambda=7"));
    report("9", start, Duration::from_secs(60), "m=5 full run flags exactly the known block-count discrepancy");
}

#[test]
fn criterion_10_formula_property_suite_m7_to_m13() {
    let start = Instant::now();
    for m in [7u32, 9, 11, 13] {
        five_weight_params(m).unwrap();
        double_dual_params(m).unwrap();
        let dual = dual_closed_form(m).unwrap();
        let extended = extended_dual_closed_form(m).unwrap();
        let five = five_weight_distribution(m).unwrap();
        let dd = double_dual_closed_form(m).unwrap();
        let cases: [(DesignFamily, Vec<u64>, &WeightDistribution); 4] = [
            (DesignFamily::Code, five_weight_params(m).unwrap().weights.to_vec(), &five),
            (DesignFamily::Dual, vec![7, 8, 9], &dual),
            (
                DesignFamily::DoubleDual,
                double_dual_closed_form(m)
                    .unwrap()
                    .nonzero_weights()
                    .into_iter()
                    .filter(|&w| w > 0 && w < 1 << m)
                    .map(|w| w as u64)
                    .collect(),
                &dd,
            ),
            (DesignFamily::ExtendedDual, vec![8, 10, 12], &extended),
        ];
        for (family, ks, spectrum) in cases {
            let t = family.strength();
            let v = family.points(m);
            for k in ks {
                let lambda = tabulated_lambda(m, family, k).unwrap();
                assert!(divisibility_check(t, v, k as usize, &lambda), "m={m} {family:?} k={k}");
                // the lambda formula agrees with the count-derived value from
                // the closed-form spectrum
                let count = spectrum.count(k as usize);
                assert!(!count.is_zero(), "m={m} {family:?} k={k}");
                assert_eq!(
                    lambda_from_count(count, t, v, k as usize).unwrap(),
                    lambda,
                    "m={m} {family:?} k={k}"
                );
            }
        }
        // tabulated block-count formulas evaluate to integers; all but the
        // weight-8 one agree with the closed-form spectrum
        for k in [7u64, 8, 9] {
            let computed = tabulated_block_count(m, DesignFamily::Dual, k).unwrap();
            assert_eq!(&computed, dual.count(k as usize), "m={m} dual k={k}");
        }
        for k in [10u64, 12] {
            let computed = tabulated_block_count(m, DesignFamily::ExtendedDual, k).unwrap();
            assert_eq!(&computed, extended.count(k as usize), "m={m} extended k={k}");
        }
        let wrong8 = tabulated_block_count(m, DesignFamily::ExtendedDual, 8).unwrap();
        assert_eq!(wrong8, extended.count(8) * 16u32, "the stated weight-8 count is 16x the true one");
    }
    report("10", start, Duration::from_secs(60), "formula property suite holds for m in {7, 9, 11, 13}");
}

#[test]
fn criterion_11_random_code_property_suite() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_c0de);
    let mut checked = 0;
    while checked < 50 {
        let n = rng.random_range(4..=16usize);
        let target_k = rng.random_range(1..n);
        let bit_rows: Vec<Vec<u8>> =
            (0..target_k).map(|_| (0..n).map(|_| rng.random_range(0..=1u8)).collect()).collect();
        let Ok(code) = LinearCode::from_bits(n, &bit_rows) else {
            continue; // dependent random rows: draw again
        };
        checked += 1;
        let k = code.k();
        let wd = weight_distribution(&code).unwrap();
        let dual = code.dual().unwrap();
        let wd_dual = weight_distribution(&dual).unwrap();
        // MacWilliams matches the enumerated dual and is an involution
        assert_eq!(macwilliams(&wd, k as u32, 2).unwrap(), wd_dual);
        assert_eq!(macwilliams(&wd_dual, (n - k) as u32, 2).unwrap(), wd);
        // bilinear orthogonality
        assert!(code.orthogonal_to(&dual));
        // extension forces even weights
        let extended_wd = weight_distribution(&code.extend()).unwrap();
        assert!((1..=n + 1).step_by(2).all(|w| extended_wd.count(w).is_zero()));
        // weight set of the padded-generator construction
        let allowed: std::collections::BTreeSet<usize> = wd
            .nonzero_weights()
            .into_iter()
            .flat_map(|w| [w, n + 1 - w])
            .chain([0, n + 1])
            .collect();
        let dd_wd = weight_distribution(&code.double_dual_generator().unwrap()).unwrap();
        for w in dd_wd.nonzero_weights() {
            assert!(allowed.contains(&w), "weight {w} outside the stated set for n={n} k={k}");
        }
    }
    report("11", start, Duration::from_secs(30), "50 random codes: involution, orthogonality, parity, weight containment");
}
