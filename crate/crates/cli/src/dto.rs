//! Serialized report shapes. Every top-level document carries
//! `schema_version`; exact rationals are `"num/den"` strings.

use chevalley_core::bounds::BoundReport;
use chevalley_core::invariants::{verify_table_row, InvariantsReport, TableStatus};
use chevalley_core::verify::{
    CatalogueEntry, DualCoxReport, DualCoxSample, GradedOutcome, GradedReport, SampleStrategy, TrialConfig,
    ViolationReport,
};
use chevalley_core::{render_rational, Rational};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

fn q(x: &Rational) -> String {
    render_rational(x)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReferenceJson {
    /// `match`, `mismatch` or `skipped`.
    pub status: String,
    pub condition: Option<String>,
    pub witness: Option<String>,
    pub witness_dim: Option<i64>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsReportJson {
    pub schema_version: u32,
    #[serde(rename = "type")]
    pub type_name: String,
    pub family: String,
    pub rank: usize,
    pub p: u32,
    pub m: usize,
    pub prime_class: String,
    pub r: usize,
    pub h_dual: i64,
    pub s: usize,
    pub v: String,
    pub column6: i64,
    pub witness: String,
    pub witness_dim: usize,
    pub min_nilpotent_centralizer: usize,
    pub long_simple_centralizer: usize,
    pub center_dim: usize,
    pub kernel_equals_center: bool,
    pub coweight_centralizers: Vec<usize>,
    pub estimate_threshold: usize,
    pub reference: ReferenceJson,
}

impl InvariantsReportJson {
    pub fn new(rep: &InvariantsReport) -> Self {
        let check = verify_table_row(rep);
        let (status, notes) = match &check.status {
            TableStatus::Match => ("match", Vec::new()),
            TableStatus::Mismatch(d) => ("mismatch", d.clone()),
            TableStatus::Skipped(why) => ("skipped", vec![why.clone()]),
        };
        Self {
            schema_version: SCHEMA_VERSION,
            type_name: format!("{}{}", rep.family, rep.rank),
            family: rep.family.to_string(),
            rank: rep.rank,
            p: rep.p,
            m: rep.m,
            prime_class: rep.prime_class.as_str().into(),
            r: rep.r,
            h_dual: rep.h_dual,
            s: rep.s,
            v: q(&rep.v),
            column6: rep.column6,
            witness: format!("y{}", rep.witness),
            witness_dim: rep.witness_dim,
            min_nilpotent_centralizer: rep.min_nilpotent_centralizer,
            long_simple_centralizer: rep.long_simple_centralizer,
            center_dim: rep.center_dim,
            kernel_equals_center: rep.kernel_equals_center,
            coweight_centralizers: rep.coweight_centralizers.clone(),
            estimate_threshold: rep.estimate_threshold(),
            reference: ReferenceJson {
                status: status.into(),
                condition: check.golden.as_ref().map(|g| g.condition.clone()),
                witness: check.golden.as_ref().map(|g| format!("y{}", g.witness)),
                witness_dim: check.golden.as_ref().map(|g| g.witness_dim),
                notes,
            },
        }
    }

    pub fn matches_reference(&self) -> bool {
        self.reference.status == "match"
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkippedJson {
    #[serde(rename = "type")]
    pub type_name: String,
    pub p: u32,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub schema_version: u32,
    pub max_rank: usize,
    pub primes: Vec<u32>,
    pub rows: Vec<InvariantsReportJson>,
    pub skipped: Vec<SkippedJson>,
    pub all_match: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundRowJson {
    pub k: i64,
    pub regime: String,
    pub exponent: String,
    pub quad_coeff: String,
    pub lin_coeff: String,
    pub ans_exponent: String,
    /// `ans_exponent - exponent`.
    pub difference: String,
    pub dh_constant: i64,
    pub dh_slope: String,
}

impl BoundRowJson {
    pub fn new(b: &BoundReport) -> Self {
        Self {
            k: b.k,
            regime: b.regime.as_str().into(),
            exponent: q(&b.exponent),
            quad_coeff: q(&b.quad_coeff),
            lin_coeff: q(&b.lin_coeff),
            ans_exponent: q(&b.ans_exponent),
            difference: q(&(b.ans_exponent - b.exponent)),
            dh_constant: b.dh_coefficients.0,
            dh_slope: q(&b.dh_coefficients.1),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReportJson {
    pub schema_version: u32,
    #[serde(rename = "type")]
    pub type_name: String,
    pub p: u32,
    pub m: usize,
    pub v: String,
    pub prime_class: String,
    pub rows: Vec<BoundRowJson>,
}

impl BoundReportJson {
    pub fn new(rep: &InvariantsReport, rows: &[BoundReport]) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            type_name: format!("{}{}", rep.family, rep.rank),
            p: rep.p,
            m: rep.m,
            v: q(&rep.v),
            prime_class: rep.prime_class.as_str().into(),
            rows: rows.iter().map(BoundRowJson::new).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigJson {
    pub seed: u64,
    pub trials: usize,
    pub policy: String,
    pub fixed_dims: Option<(usize, usize)>,
}

impl ConfigJson {
    pub fn new(c: &TrialConfig) -> Self {
        Self {
            seed: c.seed,
            trials: c.trials,
            policy: c.policy.as_str().into(),
            fixed_dims: c.fixed_dims,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub u: Vec<String>,
    pub v: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationJson {
    pub trial: u64,
    pub dim_u: usize,
    pub dim_v: usize,
    pub lhs: usize,
    pub bound: String,
    pub witness: WitnessJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationReportJson {
    pub schema_version: u32,
    pub check: String,
    #[serde(rename = "type")]
    pub type_name: String,
    pub p: u32,
    pub config: ConfigJson,
    pub trials_run: usize,
    pub violation_count: usize,
    pub violations: Vec<ViolationJson>,
    pub min_slack: Option<String>,
    pub min_slack_count: usize,
    pub passed: bool,
}

impl ViolationReportJson {
    pub fn new(rep: &InvariantsReport, v: &ViolationReport) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            check: v.check.into(),
            type_name: format!("{}{}", rep.family, rep.rank),
            p: rep.p,
            config: ConfigJson::new(&v.config),
            trials_run: v.trials_run,
            violation_count: v.violations.len(),
            violations: v
                .violations
                .iter()
                .map(|x| ViolationJson {
                    trial: x.trial,
                    dim_u: x.dim_u,
                    dim_v: x.dim_v,
                    lhs: x.lhs,
                    bound: q(&x.bound),
                    witness: WitnessJson {
                        u: x.witness.u.clone(),
                        v: x.witness.v.clone(),
                    },
                })
                .collect(),
            min_slack: v.min_slack.as_ref().map(q),
            min_slack_count: v.min_slack_count,
            passed: v.passed(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleJson {
    pub index: u64,
    pub strategy: String,
    pub dim: usize,
    pub element: Option<String>,
}

impl SampleJson {
    fn new(s: &DualCoxSample) -> Self {
        Self {
            index: s.index,
            strategy: s.strategy.as_str().into(),
            dim: s.dim,
            element: s.element.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualCoxJson {
    pub schema_version: u32,
    pub samples: usize,
    pub seed: u64,
    pub s: usize,
    pub max_observed: usize,
    pub max_by_strategy: Vec<(String, usize)>,
    pub theta_dim: usize,
    pub parity_checked: bool,
    pub violations: Vec<SampleJson>,
    pub odd: Vec<SampleJson>,
    pub passed: bool,
}

impl DualCoxJson {
    pub fn new(r: &DualCoxReport) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            samples: r.samples,
            seed: r.seed,
            s: r.s,
            max_observed: r.max_observed,
            max_by_strategy: SampleStrategy::ALL
                .iter()
                .zip(r.max_by_strategy)
                .map(|(s, d)| (s.as_str().to_string(), d))
                .collect(),
            theta_dim: r.theta_dim,
            parity_checked: r.parity_checked,
            violations: r.violations.iter().map(SampleJson::new).collect(),
            odd: r.odd.iter().map(SampleJson::new).collect(),
            passed: r.passed(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogueEntryJson {
    pub name: String,
    pub expected: usize,
    pub observed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogueJson {
    pub schema_version: u32,
    pub entries: Vec<CatalogueEntryJson>,
    pub passed: bool,
}

impl CatalogueJson {
    pub fn new(entries: &[CatalogueEntry]) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            entries: entries
                .iter()
                .map(|e| CatalogueEntryJson {
                    name: e.name.into(),
                    expected: e.expected,
                    observed: e.observed,
                })
                .collect(),
            passed: entries.iter().all(|e| e.matches()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedFailureJson {
    pub trial: u64,
    pub codims: Vec<usize>,
    pub derived_codims: Vec<usize>,
    pub degree_failures: Vec<(usize, usize)>,
    pub lhs: usize,
    pub rhs: String,
}

impl GradedFailureJson {
    fn new(o: &GradedOutcome) -> Self {
        Self {
            trial: o.trial,
            codims: o.codims.clone(),
            derived_codims: o.derived_codims.clone(),
            degree_failures: o.degree_failures.clone(),
            lhs: o.lhs,
            rhs: q(&o.rhs),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedJson {
    pub schema_version: u32,
    pub truncation: usize,
    pub config: ConfigJson,
    pub families: usize,
    pub failures: Vec<GradedFailureJson>,
    pub min_slack: Option<String>,
    pub passed: bool,
}

impl GradedJson {
    pub fn new(r: &GradedReport) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            truncation: r.truncation,
            config: ConfigJson::new(&r.config),
            families: r.families,
            failures: r.failures.iter().map(GradedFailureJson::new).collect(),
            min_slack: r.min_slack.as_ref().map(q),
            passed: r.passed(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "suite", rename_all = "snake_case")]
pub enum SuiteJson {
    Theorem2(ViolationReportJson),
    Rank2Strong(ViolationReportJson),
    MyEstimate(ViolationReportJson),
    DualCox(DualCoxJson),
    Lemx(ViolationReportJson),
    Catalogue(CatalogueJson),
    Graded(GradedJson),
}

impl SuiteJson {
    pub fn name(&self) -> &'static str {
        match self {
            SuiteJson::Theorem2(_) => "theorem2",
            SuiteJson::Rank2Strong(_) => "rank2_strong",
            SuiteJson::MyEstimate(_) => "my_estimate",
            SuiteJson::DualCox(_) => "dual_cox",
            SuiteJson::Lemx(_) => "lemx",
            SuiteJson::Catalogue(_) => "catalogue",
            SuiteJson::Graded(_) => "graded",
        }
    }

    pub fn passed(&self) -> bool {
        match self {
            SuiteJson::Theorem2(r) | SuiteJson::Rank2Strong(r) | SuiteJson::MyEstimate(r) | SuiteJson::Lemx(r) => r.passed,
            SuiteJson::DualCox(r) => r.passed,
            SuiteJson::Catalogue(r) => r.passed,
            SuiteJson::Graded(r) => r.passed,
        }
    }

    /// Trials or samples run, and failures found.
    pub fn counts(&self) -> (usize, usize) {
        match self {
            SuiteJson::Theorem2(r) | SuiteJson::Rank2Strong(r) | SuiteJson::MyEstimate(r) | SuiteJson::Lemx(r) => {
                (r.trials_run, r.violation_count)
            }
            SuiteJson::DualCox(r) => (r.samples, r.violations.len() + r.odd.len()),
            SuiteJson::Catalogue(r) => (r.entries.len(), r.entries.iter().filter(|e| e.expected != e.observed).count()),
            SuiteJson::Graded(r) => (r.families, r.failures.len()),
        }
    }

    pub fn min_slack(&self) -> Option<&str> {
        match self {
            SuiteJson::Theorem2(r) | SuiteJson::Rank2Strong(r) | SuiteJson::MyEstimate(r) | SuiteJson::Lemx(r) => {
                r.min_slack.as_deref()
            }
            SuiteJson::Graded(r) => r.min_slack.as_deref(),
            SuiteJson::DualCox(_) | SuiteJson::Catalogue(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyRunJson {
    pub schema_version: u32,
    #[serde(rename = "type")]
    pub type_name: String,
    pub p: u32,
    pub seed: u64,
    pub policy: String,
    pub suites: Vec<SuiteJson>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntryJson {
    #[serde(rename = "type")]
    pub type_name: String,
    pub path: String,
    pub status: String,
    pub checksum: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheJson {
    pub schema_version: u32,
    pub directory: String,
    pub entries: Vec<CacheEntryJson>,
}
