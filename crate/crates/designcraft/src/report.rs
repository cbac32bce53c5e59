//! End-to-end verification of the published five-weight-family results at a
//! given degree m: constructions, closed-form distributions, transforms,
//! exhaustive enumerations, audits, and every tabulated design formula, each
//! emitted as one report record.
//!
//! The one standing discrepancy in the source material — the extended-dual
//! weight-8 block-count formula, which overshoots the enumerated and
//! transform-derived count by a factor of 16 at every audited m — is
//! reported as MISMATCH-KNOWN so that regressions in this artifact stay
//! distinguishable from it.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::bch::{build_c_m, CmVariant};
use crate::closed_form::{
    binomial, double_dual_closed_form, double_dual_params, dual_closed_form,
    extended_dual_closed_form, five_weight_distribution, five_weight_params, macwilliams,
    pless_check, MAX_CLOSED_FORM_M,
};
use crate::code::LinearCode;
use crate::design::{
    assmus_mattson_audit, divisibility_check, lambda_from_count, tabulated_block_count,
    tabulated_lambda, verify_weight_class, DesignFamily, COUNTER_BUDGET,
};
use crate::enumerate::{self, DEFAULT_ENUM_BUDGET_LOG2};
use crate::error::{Error, Result};
use crate::field::BinaryField;
use crate::wdist::WeightDistribution;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Formulas,
    Full,
}

impl std::fmt::Display for Level {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Level::Formulas => "formulas",
            Level::Full => "full",
        })
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub enum CheckStatus {
    #[serde(rename = "MATCH")]
    Match,
    #[serde(rename = "MISMATCH")]
    Mismatch,
    #[serde(rename = "MISMATCH-KNOWN")]
    MismatchKnown,
    #[serde(rename = "SKIPPED-budget")]
    SkippedBudget,
}

impl std::fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CheckStatus::Match => "MATCH",
            CheckStatus::Mismatch => "MISMATCH",
            CheckStatus::MismatchKnown => "MISMATCH-KNOWN",
            CheckStatus::SkippedBudget => "SKIPPED-budget",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub expected: String,
    pub observed: String,
    pub status: CheckStatus,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub match_count: usize,
    pub mismatch_count: usize,
    pub mismatch_known_count: usize,
    pub skipped_budget_count: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub m: u32,
    pub level: Level,
    pub notes: Vec<String>,
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn has_regressions(&self) -> bool {
        self.summary.mismatch_count > 0
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Deterministic text rendering; callers prepend their own timestamp
    /// line.
    pub fn render_text(&self) -> String {
        let mut s = format!("verification report: m={}, level={}\n", self.m, self.level);
        for note in &self.notes {
            s.push_str(&format!("note: {note}\n"));
        }
        for c in &self.checks {
            s.push_str(&format!(
                "[{:<14}] {}\n    expected: {}\n    observed: {}\n",
                c.status.to_string(),
                c.name,
                c.expected,
                c.observed
            ));
        }
        s.push_str(&format!(
            "summary: {} MATCH, {} MISMATCH, {} MISMATCH-KNOWN, {} SKIPPED-budget\n",
            self.summary.match_count,
            self.summary.mismatch_count,
            self.summary.mismatch_known_count,
            self.summary.skipped_budget_count
        ));
        s
    }
}

#[derive(Copy, Clone, Debug)]
pub struct VerifyOptions {
    /// Enumeration cap: codes with 2^k over this are skipped, not sampled.
    pub enum_budget_log2: u32,
    /// Cap on blocks * C(k, t) per exhaustive design verification.
    pub design_work_budget: u64,
}

impl Default for VerifyOptions {
    /// The default work budget of 2^37 subset visits per weight class covers
    /// every primal and double-dual design of m = 7 (the largest class walks
    /// ~9.8e10 subsets, a few minutes on one core).
    fn default() -> Self {
        VerifyOptions { enum_budget_log2: DEFAULT_ENUM_BUDGET_LOG2, design_work_budget: 1 << 37 }
    }
}

struct Reporter {
    checks: Vec<CheckRecord>,
}

impl Reporter {
    fn push(&mut self, name: &str, expected: String, observed: String, status: CheckStatus) {
        self.checks.push(CheckRecord { name: name.to_string(), expected, observed, status });
    }

    fn equal<T: PartialEq + std::fmt::Display>(
        &mut self,
        name: &str,
        expected: T,
        expected_provenance: &str,
        observed: T,
        observed_provenance: &str,
    ) {
        let status =
            if expected == observed { CheckStatus::Match } else { CheckStatus::Mismatch };
        self.push(
            name,
            format!("{expected} ({expected_provenance})"),
            format!("{observed} ({observed_provenance})"),
            status,
        );
    }

    fn claim(&mut self, name: &str, claim: &str, holds: bool, detail: String) {
        let status = if holds { CheckStatus::Match } else { CheckStatus::Mismatch };
        self.push(name, claim.to_string(), detail, status);
    }

    fn skipped(&mut self, name: &str, expected: String, why: String) {
        self.push(name, expected, why, CheckStatus::SkippedBudget);
    }
}

fn weights_digest(wd: &WeightDistribution) -> String {
    let rows: Vec<String> =
        wd.nonzero_weights().iter().map(|&w| format!("{w}:{}", wd.count(w))).collect();
    format!("{{{}}}", rows.join(", "))
}

/// Runs every check at degree m and assembles the report. `Formulas` level
/// touches no enumeration; `Full` adds constructions, exhaustive
/// distributions, and exhaustive design verification within the budgets.
pub fn verify_family(m: u32, level: Level, opts: &VerifyOptions) -> Result<VerificationReport> {
    if m % 2 == 0 {
        return Err(Error::EvenExtensionDegree(m));
    }
    if m < 5 {
        return Err(Error::DegreeOutOfRange(m));
    }
    let mut r = Reporter { checks: Vec::new() };

    let spectra = formula_checks(m, &mut r)?;
    if level == Level::Full {
        full_checks(m, opts, &spectra, &mut r)?;
    }
    design_checks(m, level, opts, &spectra, &mut r)?;

    let mut summary = Summary::default();
    for c in &r.checks {
        match c.status {
            CheckStatus::Match => summary.match_count += 1,
            CheckStatus::Mismatch => summary.mismatch_count += 1,
            CheckStatus::MismatchKnown => summary.mismatch_known_count += 1,
            CheckStatus::SkippedBudget => summary.skipped_budget_count += 1,
        }
    }
    Ok(VerificationReport {
        m,
        level,
        notes: vec![
            "minimal polynomials are indexed by powers of the same primitive element alpha \
             that generates the field (the indexing base is not declared independently)"
                .to_string(),
        ],
        checks: r.checks,
        summary,
    })
}

/// Closed-form spectra shared by later stages; dual/extended entries are
/// None above the dense-evaluation cap.
struct Spectra {
    five_weight: WeightDistribution,
    dual: Option<WeightDistribution>,
    double_dual: WeightDistribution,
    extended_dual: Option<WeightDistribution>,
}

fn formula_checks(m: u32, r: &mut Reporter) -> Result<Spectra> {
    // five-weight frequencies
    let params = five_weight_params(m)?;
    let five_weight = five_weight_distribution(m)?;
    r.equal(
        "five-weight spectrum: frequencies integral, total 2^(3m)",
        (BigUint::one() << (3 * m)).to_string(),
        "formula",
        five_weight.total().to_string(),
        "evaluated frequencies",
    );

    // dual closed form
    let dual = if m <= MAX_CLOSED_FORM_M {
        let dual = dual_closed_form(m)?;
        r.claim(
            "dual spectrum: every division by 2^(3m) exact",
            "all counts integral",
            true,
            format!("{} weights, total {}", dual.nonzero_weights().len(), dual.total()),
        );
        let low: Vec<String> = (1..=6).map(|k| dual.count(k).to_string()).collect();
        r.equal(
            "dual spectrum: counts at weights 1..6",
            "0,0,0,0,0,0".to_string(),
            "closed form requirement",
            low.join(","),
            "evaluated",
        );
        r.claim(
            "dual spectrum: count at weight 7 positive",
            "count > 0",
            !dual.count(7).is_zero(),
            format!("weight-7 count {}", dual.count(7)),
        );
        let transformed = macwilliams(&five_weight, 3 * m, 2)?;
        r.claim(
            "dual spectrum: closed form equals MacWilliams transform of five-weight spectrum",
            "identical distributions",
            transformed == dual,
            weights_digest(&dual),
        );
        Some(dual)
    } else {
        r.skipped(
            "dual spectrum (closed form)",
            "dense evaluation".into(),
            format!("skipped: dense closed form capped at m <= {MAX_CLOSED_FORM_M}"),
        );
        None
    };

    // double dual
    let dd_params = double_dual_params(m)?;
    let double_dual = double_dual_closed_form(m)?;
    r.equal(
        "double-dual spectrum: frequencies integral, total 2^(3m+1)",
        (BigUint::one() << (3 * m + 1)).to_string(),
        "formula",
        double_dual.total().to_string(),
        "evaluated frequencies",
    );
    r.claim(
        "double-dual spectrum: first and third power moments",
        "both moment identities hold",
        pless_check(&double_dual, m),
        format!("u={}, v={}, w={}", dd_params.freq_u, dd_params.freq_v, dd_params.freq_w),
    );
    r.claim(
        "double-dual spectrum: palindrome symmetry",
        "counts[i] == counts[2^m - i]",
        double_dual.is_palindromic(),
        weights_digest(&double_dual),
    );

    // extended dual closed form
    let extended_dual = if m <= MAX_CLOSED_FORM_M {
        let ed = extended_dual_closed_form(m)?;
        r.claim(
            "extended-dual spectrum: every division by 2^(3m+1) exact",
            "all counts integral",
            true,
            format!("{} weights, total {}", ed.nonzero_weights().len(), ed.total()),
        );
        r.claim(
            "extended-dual spectrum: odd weights all zero",
            "counts at odd weights are 0",
            (1..=ed.n()).step_by(2).all(|k| ed.count(k).is_zero()),
            "checked every odd weight".to_string(),
        );
        r.equal(
            "extended-dual spectrum: minimum weight",
            8,
            "stated parameters",
            ed.min_nonzero_weight().unwrap_or(0),
            "closed form",
        );
        let transformed = macwilliams(&double_dual, 3 * m + 1, 2)?;
        r.claim(
            "extended-dual spectrum: closed form equals MacWilliams transform of double-dual",
            "identical distributions",
            transformed == ed,
            weights_digest(&ed),
        );
        Some(ed)
    } else {
        r.skipped(
            "extended-dual spectrum (closed form)",
            "dense evaluation".into(),
            format!("skipped: dense closed form capped at m <= {MAX_CLOSED_FORM_M}"),
        );
        None
    };

    // Assmus-Mattson audits on the formula spectra
    if let Some(dual) = &dual {
        let audit = assmus_mattson_audit(&five_weight, dual, 2)?;
        r.equal(
            "audit t=2 (five-weight code and its dual): s, d, hypothesis",
            format!("s=5, d={}, passes", params.weights[0]),
            "derived",
            format!(
                "s={}, d={}, {}",
                audit.s,
                audit.d,
                if audit.passes { "passes" } else { "fails" }
            ),
            "audit",
        );
    }
    if let Some(ed) = &extended_dual {
        let audit = assmus_mattson_audit(&double_dual, ed, 3)?;
        r.equal(
            "audit t=3 (double dual and extended dual): s, d, hypothesis",
            format!("s=5, d={}, passes", params.weights[0]),
            "derived",
            format!(
                "s={}, d={}, {}",
                audit.s,
                audit.d,
                if audit.passes { "passes" } else { "fails" }
            ),
            "audit",
        );
    }

    // tabulated block-count formulas vs the closed-form spectra
    if let Some(dual) = &dual {
        for k in [7u64, 8, 9] {
            if k == 9 && m < 7 {
                continue;
            }
            let formula = tabulated_block_count(m, DesignFamily::Dual, k)?;
            r.equal(
                &format!("dual weight-{k} block-count formula"),
                formula.to_string(),
                "formula",
                dual.count(k as usize).to_string(),
                "closed-form spectrum",
            );
        }
    }
    if let Some(ed) = &extended_dual {
        for k in [8u64, 10, 12] {
            if k == 10 && m < 7 {
                continue;
            }
            let formula = tabulated_block_count(m, DesignFamily::ExtendedDual, k)?;
            let observed = ed.count(k as usize);
            let status = if formula == *observed {
                CheckStatus::Match
            } else if k == 8 {
                // standing discrepancy: the stated weight-8 frequency formula
                // exceeds the transform-derived (and enumerated) count
                CheckStatus::MismatchKnown
            } else {
                CheckStatus::Mismatch
            };
            r.push(
                &format!("extended-dual weight-{k} block-count formula"),
                format!("{formula} (formula)"),
                format!("{observed} (closed-form spectrum)"),
                status,
            );
        }
    }

    Ok(Spectra { five_weight, dual, double_dual, extended_dual })
}

fn full_checks(m: u32, opts: &VerifyOptions, spectra: &Spectra, r: &mut Reporter) -> Result<()> {
    let field = BinaryField::new(m)?;
    let bch0 = build_c_m(m, CmVariant::Bch0, &field)?;
    let narrow = build_c_m(m, CmVariant::DualNarrow7, &field)?;
    let n = (1usize << m) - 1;
    r.equal(
        "construction bch0: parameters",
        format!("[{n}, {}]", 3 * m),
        "stated",
        format!("[{}, {}]", bch0.n(), bch0.k()),
        "construction",
    );
    r.equal(
        "construction dual-narrow7: parameters",
        format!("[{n}, {}]", 3 * m),
        "stated",
        format!("[{}, {}]", narrow.n(), narrow.k()),
        "construction",
    );

    let budget = opts.enum_budget_log2;
    let enum_or_skip = |r: &mut Reporter, name: &str, code: &LinearCode| -> Option<WeightDistribution> {
        match enumerate::weight_distribution_with_budget(code, budget) {
            Ok(wd) => Some(wd),
            Err(Error::EnumerationTooLarge { k, budget_log2 }) => {
                r.skipped(
                    name,
                    "exhaustive distribution".into(),
                    format!("skipped: 2^{k} codewords exceed budget 2^{budget_log2}"),
                );
                None
            }
            Err(other) => panic!("unexpected enumeration failure: {other}"),
        }
    };

    let bch0_wd = enum_or_skip(r, "five-weight spectrum vs enumeration (bch0)", &bch0);
    if let Some(wd) = &bch0_wd {
        r.claim(
            "five-weight spectrum vs enumeration (bch0)",
            "closed form equals exhaustive count",
            *wd == spectra.five_weight,
            weights_digest(wd),
        );
    }
    if let Some(wd) = enum_or_skip(r, "construction routes share one distribution", &narrow) {
        r.claim(
            "construction routes share one distribution",
            "bch0 and dual-narrow7 enumerate identically",
            bch0_wd.as_ref() == Some(&wd),
            weights_digest(&wd),
        );
    }

    let dual_code = bch0.dual()?;
    if let Some(wd) = enum_or_skip(r, "dual spectrum vs enumeration", &dual_code) {
        if let Some(cf) = &spectra.dual {
            r.claim(
                "dual spectrum vs enumeration",
                "closed form equals exhaustive count",
                wd == *cf,
                weights_digest(&wd),
            );
        }
        r.equal(
            "dual minimum distance",
            7,
            "stated parameters",
            wd.min_nonzero_weight().unwrap_or(0),
            "enumeration",
        );
    }

    let extended = dual_code.extend();
    if let Some(wd) = enum_or_skip(r, "extended-dual spectrum vs enumeration", &extended) {
        if let Some(cf) = &spectra.extended_dual {
            r.claim(
                "extended-dual spectrum vs enumeration",
                "closed form equals exhaustive count",
                wd == *cf,
                weights_digest(&wd),
            );
        }
        r.equal(
            "extended-dual minimum distance",
            8,
            "stated parameters",
            wd.min_nonzero_weight().unwrap_or(0),
            "enumeration",
        );
    }

    let double_dual = bch0.double_dual_generator()?;
    if let Some(wd) = enum_or_skip(r, "double-dual spectrum vs enumeration", &double_dual) {
        r.claim(
            "double-dual spectrum vs enumeration",
            "closed form equals exhaustive count",
            wd == spectra.double_dual,
            weights_digest(&wd),
        );
    }
    let via_duals = extended.dual()?;
    r.claim(
        "double-dual construction routes agree",
        "padded-generator route spans the dual of the extended dual",
        double_dual.same_codeword_set(&via_duals),
        format!(
            "[{}, {}] row spaces compared by rank",
            double_dual.n(),
            double_dual.k()
        ),
    );
    Ok(())
}

/// Per-family design records: tabulated-lambda consistency against
/// count-derived values, an aggregate integrality/divisibility sweep over
/// every nontrivial weight, and (at Full level) exhaustive verification of
/// each weight class inside the enumeration, counter, and work budgets.
fn design_checks(
    m: u32,
    level: Level,
    opts: &VerifyOptions,
    spectra: &Spectra,
    r: &mut Reporter,
) -> Result<()> {
    let codes: Option<[LinearCode; 4]> = if level == Level::Full {
        let field = BinaryField::new(m)?;
        let bch0 = build_c_m(m, CmVariant::Bch0, &field)?;
        let dual = bch0.dual()?;
        let double_dual = bch0.double_dual_generator()?;
        let extended = dual.extend();
        Some([bch0, dual, double_dual, extended])
    } else {
        None
    };
    let code_of = |i: usize| codes.as_ref().map(|c| &c[i]);

    let five_params = five_weight_params(m)?;
    let mut dual_tab = vec![7u64, 8];
    let mut ext_tab = vec![8u64, 12];
    if m >= 7 {
        dual_tab.push(9);
        ext_tab.insert(1, 10);
    }
    let dd_weights: Vec<u64> = double_dual_weights(m);

    run_family(m, level, opts, r, DesignFamily::Code, "code", Some(&spectra.five_weight), &five_params.weights, code_of(0))?;
    run_family(m, level, opts, r, DesignFamily::Dual, "dual", spectra.dual.as_ref(), &dual_tab, code_of(1))?;
    run_family(m, level, opts, r, DesignFamily::DoubleDual, "double dual", Some(&spectra.double_dual), &dd_weights, code_of(2))?;
    run_family(m, level, opts, r, DesignFamily::ExtendedDual, "extended dual", spectra.extended_dual.as_ref(), &ext_tab, code_of(3))?;
    Ok(())
}

fn double_dual_weights(m: u32) -> Vec<u64> {
    let h = 1u64 << (m - 1);
    let e1 = 1u64 << ((m + 1) / 2);
    let e2 = 1u64 << ((m - 1) / 2);
    vec![h - e1, h - e2, h, h + e2, h + e1]
}

#[allow(clippy::too_many_arguments)]
fn run_family(
    m: u32,
    level: Level,
    opts: &VerifyOptions,
    r: &mut Reporter,
    family: DesignFamily,
    label: &str,
    spectrum: Option<&WeightDistribution>,
    tabulated: &[u64],
    code: Option<&LinearCode>,
) -> Result<()> {
    let t = family.strength();
    let v = family.points(m);

    // tabulated lambda formulas vs the count-derived lambda
    for &k in tabulated {
        let formula = tabulated_lambda(m, family, k)?;
        let name = format!("{t}-design at weight {k} ({label}): lambda formula");
        match spectrum {
            Some(wd) => {
                let count = wd.count(k as usize);
                if count.is_zero() {
                    r.claim(
                        &name,
                        "weight class is empty at this degree",
                        true,
                        format!("count 0, formula lambda {formula}"),
                    );
                    continue;
                }
                match lambda_from_count(count, t, v, k as usize) {
                    Ok(derived) => {
                        let divisible = divisibility_check(t, v, k as usize, &derived);
                        let status = if formula == derived && divisible {
                            CheckStatus::Match
                        } else {
                            CheckStatus::Mismatch
                        };
                        r.push(
                            &name,
                            format!("lambda={formula} (formula)"),
                            format!(
                                "lambda={derived} (from count {count}), divisibility {}",
                                if divisible { "holds" } else { "fails" }
                            ),
                            status,
                        );
                    }
                    Err(e) => r.push(
                        &name,
                        format!("lambda={formula} (formula)"),
                        format!("count-derived lambda not integral: {e}"),
                        CheckStatus::Mismatch,
                    ),
                }
            }
            None => {
                // spectrum over the dense cap: the formula itself must still
                // be an integer satisfying the divisibility condition
                let divisible = divisibility_check(t, v, k as usize, &formula);
                r.claim(
                    &name,
                    "formula integral and divisibility holds",
                    divisible,
                    format!("lambda={formula}"),
                );
            }
        }
    }

    // aggregate lambda-integrality sweep over every nontrivial weight class
    if let Some(wd) = spectrum {
        let mut bad = Vec::new();
        let mut classes = 0usize;
        for w in wd.nonzero_weights() {
            if w <= t || w >= v {
                continue;
            }
            classes += 1;
            match lambda_from_count(wd.count(w), t, v, w) {
                Ok(lambda) if divisibility_check(t, v, w, &lambda) => {}
                _ => bad.push(w),
            }
        }
        r.claim(
            &format!("{label}: every nontrivial weight class is {t}-design consistent"),
            "count-derived lambda integral and divisible at every weight",
            bad.is_empty(),
            format!(
                "{classes} weight classes{}",
                if bad.is_empty() {
                    String::new()
                } else {
                    format!(", failures at {bad:?}")
                }
            ),
        );
    }

    if level != Level::Full {
        return Ok(());
    }

    // exhaustive verification, weight class by weight class
    let code = code.expect("codes are constructed at Full level");
    if let Err(Error::EnumerationTooLarge { k, budget_log2 }) =
        enumerate_guard(code, opts.enum_budget_log2)
    {
        r.skipped(
            &format!("{label}: exhaustive design verification"),
            "per-weight exhaustive verification".into(),
            format!("skipped: 2^{k} codewords exceed budget 2^{budget_log2}"),
        );
        return Ok(());
    }
    let Some(wd) = spectrum else {
        return Ok(());
    };
    for w in wd.nonzero_weights() {
        if w <= t || w >= v {
            continue;
        }
        let name = format!("{t}-design at weight {w} ({label}): exhaustive verification");
        let count = wd.count(w);
        let expected_lambda = lambda_from_count(count, t, v, w)?;
        let expected = format!("lambda={expected_lambda}, blocks={count} (formula)");
        let work = count * binomial(w as u64, t as u64);
        if work > BigUint::from(opts.design_work_budget) {
            r.skipped(
                &name,
                expected,
                format!("skipped: {work} subset visits exceed work budget {}", opts.design_work_budget),
            );
            continue;
        }
        if binomial(v as u64, t as u64) > BigUint::from(COUNTER_BUDGET) {
            r.skipped(
                &name,
                expected,
                format!("skipped: C({v}, {t}) counters exceed budget {COUNTER_BUDGET}"),
            );
            continue;
        }
        let (blocks, outcome) = verify_weight_class(code, w, t, opts.enum_budget_log2)?;
        let observed = match outcome.lambda {
            Some(lambda) => format!("lambda={lambda}, blocks={blocks} (exhaustive count)"),
            None => format!(
                "not a {t}-design: counters range {}..={}, blocks={blocks}",
                outcome.min, outcome.max
            ),
        };
        let ok = outcome.lambda.map(BigUint::from) == Some(expected_lambda.clone())
            && BigUint::from(blocks) == *count;
        r.push(&name, expected, observed, if ok { CheckStatus::Match } else { CheckStatus::Mismatch });
    }
    Ok(())
}

fn enumerate_guard(code: &LinearCode, budget_log2: u32) -> Result<()> {
    if code.k() as u32 > budget_log2 {
        return Err(Error::EnumerationTooLarge { k: code.k(), budget_log2 });
    }
    Ok(())
}
