//! Verification suites over one `(family, rank, p)` configuration.

use std::fmt;
use std::str::FromStr;

use chevalley_core::invariants::{AlgebraPair, InvariantsReport};
use chevalley_core::verify::{
    rank2_orbit_catalogue, DimensionPolicy, DualCoxContext, SubspaceCheck, SubspaceContext, TrialConfig,
};

use crate::dto::{CatalogueJson, DualCoxJson, GradedJson, SuiteJson, VerifyRunJson, ViolationReportJson, SCHEMA_VERSION};
use crate::runner::{run_dual_cox, run_graded, run_lemx, run_subspace, Execution};
use crate::CliError;

/// Truncation degree of the graded check.
pub const GRADED_DEGREE: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Theorem2,
    Rank2Strong,
    MyEstimate,
    DualCox,
    Lemx,
    Catalogue,
    Graded,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Theorem2,
        Suite::Rank2Strong,
        Suite::MyEstimate,
        Suite::DualCox,
        Suite::Lemx,
        Suite::Catalogue,
        Suite::Graded,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Theorem2 => "theorem2",
            Suite::Rank2Strong => "rank2_strong",
            Suite::MyEstimate => "my_estimate",
            Suite::DualCox => "dual_cox",
            Suite::Lemx => "lemx",
            Suite::Catalogue => "catalogue",
            Suite::Graded => "graded",
        }
    }

    /// Whether the suite makes a claim about this configuration.
    pub fn applies(self, rep: &InvariantsReport) -> bool {
        match self {
            Suite::Rank2Strong | Suite::Catalogue => rep.rank == 2 && rep.prime_class.is_very_good(),
            _ => true,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.as_str() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::ALL.iter().map(|x| x.as_str()).collect();
                format!("unknown suite {s:?}; expected one of {}", names.join(", "))
            })
    }
}

/// Base trial count when none is given: `10^4` up to the size of `E_6`,
/// `10^3` beyond.
pub fn default_trials(rep: &InvariantsReport) -> usize {
    if rep.m <= 80 {
        10_000
    } else {
        1_000
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Overrides every suite's count when set.
    pub trials: Option<usize>,
    pub policy: DimensionPolicy,
    pub exec: Execution,
    /// Empty means every applicable suite.
    pub suites: Vec<Suite>,
}

impl VerifyOptions {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            trials: None,
            policy: DimensionPolicy::Boundary,
            exec: Execution::Parallel,
            suites: Vec::new(),
        }
    }

    pub fn count(&self, suite: Suite, rep: &InvariantsReport) -> usize {
        if let Some(t) = self.trials {
            return t;
        }
        let t = default_trials(rep);
        match suite {
            Suite::Theorem2 | Suite::Rank2Strong => t,
            Suite::MyEstimate | Suite::Lemx => t / 10,
            Suite::DualCox if rep.rank <= 4 => 10 * t,
            Suite::DualCox => t,
            Suite::Graded => (t / 100).max(10),
            Suite::Catalogue => 1,
        }
    }

    fn config(&self, n: usize) -> TrialConfig {
        TrialConfig::new(self.seed, n).with_policy(self.policy)
    }
}

fn subspace(pair: &AlgebraPair, rep: &InvariantsReport, check: SubspaceCheck, cfg: &TrialConfig, exec: Execution) -> Result<ViolationReportJson, CliError> {
    let ctx = SubspaceContext::new(&pair.g, rep, check)?;
    Ok(ViolationReportJson::new(rep, &run_subspace(&ctx, cfg, exec)?))
}

pub fn run_suite(pair: &AlgebraPair, rep: &InvariantsReport, suite: Suite, opts: &VerifyOptions) -> Result<SuiteJson, CliError> {
    let n = opts.count(suite, rep);
    let cfg = opts.config(n);
    let g = &pair.g;
    Ok(match suite {
        Suite::Theorem2 => SuiteJson::Theorem2(subspace(pair, rep, SubspaceCheck::Theorem2, &cfg, opts.exec)?),
        Suite::Rank2Strong => SuiteJson::Rank2Strong(subspace(pair, rep, SubspaceCheck::Rank2Strong, &cfg, opts.exec)?),
        Suite::MyEstimate => SuiteJson::MyEstimate(subspace(pair, rep, SubspaceCheck::MyEstimate, &cfg, opts.exec)?),
        Suite::Lemx => SuiteJson::Lemx(ViolationReportJson::new(rep, &run_lemx(g, &cfg, opts.exec)?)),
        Suite::DualCox => {
            let ctx = DualCoxContext::new(g, rep)?;
            SuiteJson::DualCox(DualCoxJson::new(&run_dual_cox(&ctx, opts.seed, n, opts.exec)?))
        }
        Suite::Catalogue => SuiteJson::Catalogue(CatalogueJson::new(&rank2_orbit_catalogue(g)?)),
        Suite::Graded => SuiteJson::Graded(GradedJson::new(&run_graded(g, rep, GRADED_DEGREE, &cfg, opts.exec)?)),
    })
}

/// Runs the requested suites (or all applicable ones) in a fixed order.
pub fn run_verify(pair: &AlgebraPair, rep: &InvariantsReport, opts: &VerifyOptions) -> Result<VerifyRunJson, CliError> {
    let suites: Vec<Suite> = if opts.suites.is_empty() {
        Suite::ALL.into_iter().filter(|s| s.applies(rep)).collect()
    } else {
        Suite::ALL.into_iter().filter(|s| opts.suites.contains(s)).collect()
    };
    let results = suites
        .into_iter()
        .map(|s| run_suite(pair, rep, s, opts))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(VerifyRunJson {
        schema_version: SCHEMA_VERSION,
        type_name: format!("{}{}", rep.family, rep.rank),
        p: rep.p,
        seed: opts.seed,
        policy: opts.policy.as_str().into(),
        passed: results.iter().all(|r| r.passed()),
        suites: results,
    })
}

pub fn run_search(pair: &AlgebraPair, rep: &InvariantsReport, opts: &VerifyOptions) -> Result<ViolationReportJson, CliError> {
    let n = opts.trials.unwrap_or_else(|| default_trials(rep));
    subspace(pair, rep, SubspaceCheck::Conjecture, &opts.config(n), opts.exec)
}
