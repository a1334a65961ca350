//! Argument parsing and subcommand dispatch.

use std::path::PathBuf;
use std::str::FromStr;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use chevalley_core::bounds::theorem1_exponent;
use chevalley_core::field::PrimeField;
use chevalley_core::golden::{table_types, TABLE_PRIMES};
use chevalley_core::invariants::{check_admissible, compute_report_for, AlgebraPair, InvariantsReport};
use chevalley_core::roots::{Family, RootSystem, RootSystemSpec};
use chevalley_core::structure::ChevalleyStructure;
use chevalley_core::verify::{DimensionPolicy, DEFAULT_SEED};

use crate::cache::{load_structure, render_checksum, StructureCache, CACHE_ENV};
use crate::dto::{
    BoundReportJson, CacheEntryJson, CacheJson, InvariantsReportJson, SkippedJson, TableJson, VerifyRunJson,
    ViolationReportJson, SCHEMA_VERSION,
};
use crate::format::{self, Format};
use crate::runner::Execution;
use crate::suite::{run_search, run_verify, Suite, VerifyOptions};
use crate::{CliError, EXIT_OK, EXIT_VIOLATION, EXIT_WITNESS};

#[derive(Debug, Parser)]
#[command(name = "chevalley", version, about = "Invariants, growth exponents and randomized checks for Chevalley Lie algebras over F_p")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, default_value = "json", value_parser = Format::from_str)]
    pub format: Format,
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Headline invariants of one configuration, compared with the reference table.
    Info(TargetArgs),
    /// Reproduces the reference table.
    Table(TableArgs),
    /// Growth exponents for a range of k.
    Bound(BoundArgs),
    /// Runs the verification suites.
    Verify(VerifyArgs),
    /// Searches for counterexamples to the rank >= 3 strong bound.
    Search(SearchArgs),
    /// Builds or validates cached structure constants.
    Cache(CacheArgs),
}

#[derive(Debug, Clone, Args)]
pub struct TargetArgs {
    /// Family letter, A to G.
    #[arg(long, value_parser = Family::from_str)]
    pub family: Family,
    #[arg(long)]
    pub rank: usize,
    /// Characteristic.
    #[arg(long)]
    pub p: u32,
}

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    /// Largest rank included.
    #[arg(long, default_value_t = 8)]
    pub max_rank: usize,
    /// Restrict to one characteristic.
    #[arg(long)]
    pub p: Option<u32>,
}

/// `k` or an inclusive range `a-b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KRange(pub i64, pub i64);

impl FromStr for KRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |x: &str| x.trim().parse::<i64>().map_err(|_| format!("bad k value {x:?}"));
        match s.split_once('-') {
            Some((a, b)) if !a.is_empty() => {
                let (a, b) = (parse(a)?, parse(b)?);
                if a > b {
                    return Err(format!("empty k range {s}"));
                }
                Ok(KRange(a, b))
            }
            _ => {
                let k = parse(s)?;
                Ok(KRange(k, k))
            }
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct BoundArgs {
    #[command(flatten)]
    pub target: TargetArgs,
    /// A single k or an inclusive range such as 1-6.
    #[arg(long, default_value = "1-5", value_parser = KRange::from_str, allow_hyphen_values = true)]
    pub k: KRange,
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    /// Trials per suite; defaults depend on the suite and the algebra size.
    #[arg(long)]
    pub trials: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// How subspace dimensions are drawn.
    #[arg(long, default_value = "boundary", value_parser = parse_policy)]
    pub policy: DimensionPolicy,
    /// Run trials on one thread.
    #[arg(long)]
    pub serial: bool,
}

fn parse_policy(s: &str) -> Result<DimensionPolicy, String> {
    match s {
        "uniform" => Ok(DimensionPolicy::Uniform),
        "boundary" => Ok(DimensionPolicy::Boundary),
        _ => Err(format!("unknown policy {s:?}; expected uniform or boundary")),
    }
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub target: TargetArgs,
    #[command(flatten)]
    pub run: RunArgs,
    /// Comma-separated suites; all applicable ones by default.
    #[arg(long, value_delimiter = ',', value_parser = Suite::from_str)]
    pub suites: Vec<Suite>,
}

#[derive(Debug, Clone, Args)]
pub struct SearchArgs {
    #[command(flatten)]
    pub target: TargetArgs,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Debug, Clone, Args)]
pub struct CacheArgs {
    #[arg(long, value_parser = Family::from_str, requires = "rank")]
    pub family: Option<Family>,
    #[arg(long, requires = "family")]
    pub rank: Option<usize>,
    /// Largest rank when no single type is given.
    #[arg(long, default_value_t = 8)]
    pub max_rank: usize,
    /// Cache directory, overriding the environment.
    #[arg(long)]
    pub dir: Option<PathBuf>,
}

/// A rendered report and the exit status it implies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
}

fn json<T: serde::Serialize>(x: &T) -> String {
    let mut s = serde_json::to_string_pretty(x).expect("report documents serialize");
    s.push('\n');
    s
}

fn validated(t: &TargetArgs) -> Result<RootSystem, CliError> {
    let spec = RootSystemSpec::new(t.family, t.rank)?;
    PrimeField::new(t.p)?;
    let rs = RootSystem::new(spec);
    check_admissible(&rs, t.p)?;
    Ok(rs)
}

fn pair_for(rs: &RootSystem, p: u32, cache: Option<&StructureCache>) -> Result<(AlgebraPair, InvariantsReport), CliError> {
    let cs = load_structure(rs.family(), rs.rank(), cache)?;
    let pair = AlgebraPair::new(cs, p)?;
    let rep = compute_report_for(&pair)?;
    Ok((pair, rep))
}

fn options(run: &RunArgs) -> Result<VerifyOptions, CliError> {
    if run.trials == Some(0) {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    Ok(VerifyOptions {
        seed: run.seed,
        trials: run.trials,
        policy: run.policy,
        exec: if run.serial { Execution::Serial } else { Execution::Parallel },
        suites: Vec::new(),
    })
}

pub fn table(max_rank: usize, primes: &[u32], cache: Option<&StructureCache>) -> Result<TableJson, CliError> {
    let types = table_types(max_rank);
    let per_type = types
        .par_iter()
        .map(|spec| -> Result<_, CliError> {
            let rs = RootSystem::new(*spec);
            let mut rows = Vec::new();
            let mut skipped = Vec::new();
            let tolerable: Vec<u32> = primes.iter().copied().filter(|&p| rs.classify_prime(p).is_tolerable()).collect();
            for &p in primes.iter().filter(|p| !tolerable.contains(p)) {
                skipped.push(SkippedJson {
                    type_name: format!("{}{}", spec.family(), spec.rank()),
                    p,
                    reason: check_admissible(&rs, p).expect_err("intolerable").to_string(),
                });
            }
            if !tolerable.is_empty() {
                let cs = load_structure(spec.family(), spec.rank(), cache)?;
                for p in tolerable {
                    let rep = compute_report_for(&AlgebraPair::new(cs.clone(), p)?)?;
                    rows.push(InvariantsReportJson::new(&rep));
                }
            }
            Ok((rows, skipped))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let (mut rows, mut skipped) = (Vec::new(), Vec::new());
    for (r, s) in per_type {
        rows.extend(r);
        skipped.extend(s);
    }
    Ok(TableJson {
        schema_version: SCHEMA_VERSION,
        max_rank,
        primes: primes.to_vec(),
        all_match: rows.iter().all(|r| r.matches_reference()),
        rows,
        skipped,
    })
}

fn cache_command(a: &CacheArgs) -> Result<CacheJson, CliError> {
    let cache = match &a.dir {
        Some(d) => StructureCache::new(d),
        None => StructureCache::from_env()
            .ok_or_else(|| CliError::Usage(format!("no cache directory: set {CACHE_ENV} or pass --dir")))?,
    };
    let specs = match (a.family, a.rank) {
        (Some(f), Some(l)) => vec![RootSystemSpec::new(f, l)?],
        _ => table_types(a.max_rank),
    };
    let entries = specs
        .iter()
        .map(|&spec| -> Result<CacheEntryJson, CliError> {
            let (cs, status): (Arc<ChevalleyStructure>, _) = cache.get_or_build(spec)?;
            Ok(CacheEntryJson {
                type_name: format!("{}{}", spec.family(), spec.rank()),
                path: cache.path(spec).display().to_string(),
                status: status.describe(),
                checksum: render_checksum(cs.checksum()),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CacheJson {
        schema_version: SCHEMA_VERSION,
        directory: cache.dir().display().to_string(),
        entries,
    })
}

pub fn verify_status(doc: &VerifyRunJson) -> i32 {
    if doc.passed && doc.suites.iter().all(|s| s.passed()) {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    }
}

pub fn search_status(doc: &ViolationReportJson) -> i32 {
    if doc.violation_count == 0 {
        EXIT_OK
    } else {
        EXIT_WITNESS
    }
}

/// Runs a parsed invocation. Errors carry their own exit status.
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let fmt = cli.format;
    let cache = StructureCache::from_env();
    let cache = cache.as_ref();
    let outcome = match &cli.command {
        Command::Info(t) => {
            let rs = validated(t)?;
            let (_, rep) = pair_for(&rs, t.p, cache)?;
            let doc = InvariantsReportJson::new(&rep);
            let output = match fmt {
                Format::Json => json(&doc),
                Format::Csv => format::table_csv([&doc]),
                Format::Text => format::info_text(&doc),
            };
            let code = if doc.reference.status == "mismatch" { EXIT_VIOLATION } else { EXIT_OK };
            Outcome { code, output }
        }
        Command::Table(a) => {
            if a.max_rank < 2 {
                return Err(CliError::Usage("--max-rank must be at least 2".into()));
            }
            let primes = match a.p {
                Some(p) => {
                    PrimeField::new(p)?;
                    vec![p]
                }
                None => TABLE_PRIMES.to_vec(),
            };
            let doc = table(a.max_rank, &primes, cache)?;
            let output = match fmt {
                Format::Json => json(&doc),
                Format::Csv => format::table_csv(&doc.rows),
                Format::Text => format::table_text(&doc),
            };
            Outcome {
                code: if doc.all_match { EXIT_OK } else { EXIT_VIOLATION },
                output,
            }
        }
        Command::Bound(a) => {
            let KRange(lo, hi) = a.k;
            if lo <= 0 {
                return Err(chevalley_core::Error::NonPositiveK(lo).into());
            }
            let rs = validated(&a.target)?;
            let (_, rep) = pair_for(&rs, a.target.p, cache)?;
            let rows = (lo..=hi).map(|k| theorem1_exponent(&rep, k)).collect::<Result<Vec<_>, _>>()?;
            let doc = BoundReportJson::new(&rep, &rows);
            let output = match fmt {
                Format::Json => json(&doc),
                Format::Csv => format::bound_csv(&doc),
                Format::Text => format::bound_text(&doc),
            };
            Outcome { code: EXIT_OK, output }
        }
        Command::Verify(a) => {
            let mut opts = options(&a.run)?;
            let rs = validated(&a.target)?;
            opts.suites = a.suites.clone();
            let (pair, rep) = pair_for(&rs, a.target.p, cache)?;
            let doc = run_verify(&pair, &rep, &opts)?;
            let output = match fmt {
                Format::Json => json(&doc),
                Format::Csv => format::verify_csv(&doc),
                Format::Text => format::verify_text(&doc),
            };
            Outcome {
                code: verify_status(&doc),
                output,
            }
        }
        Command::Search(a) => {
            let opts = options(&a.run)?;
            let rs = validated(&a.target)?;
            let (pair, rep) = pair_for(&rs, a.target.p, cache)?;
            let doc = run_search(&pair, &rep, &opts)?;
            let output = match fmt {
                Format::Json => json(&doc),
                Format::Csv => format::search_csv(&doc),
                Format::Text => format::search_text(&doc),
            };
            Outcome {
                code: search_status(&doc),
                output,
            }
        }
        Command::Cache(a) => {
            let doc = cache_command(a)?;
            let output = match fmt {
                Format::Json => json(&doc),
                Format::Csv => format::cache_csv(&doc),
                Format::Text => format::cache_text(&doc),
            };
            Outcome { code: EXIT_OK, output }
        }
    };
    Ok(outcome)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_ranges_parse() {
        assert_eq!("3".parse::<KRange>().unwrap(), KRange(3, 3));
        assert_eq!("1-6".parse::<KRange>().unwrap(), KRange(1, 6));
        assert_eq!("-2".parse::<KRange>().unwrap(), KRange(-2, -2));
        assert!("5-2".parse::<KRange>().is_err());
        assert!("x".parse::<KRange>().is_err());
    }

    #[test]
    fn exit_statuses_follow_the_reports() {
        use crate::suite::{run_search, run_verify, VerifyOptions};
        use crate::{CliError, EXIT_USAGE};
        use chevalley_core::Error;

        let cs = crate::cache::load_structure(Family::A, 3, None).unwrap();
        let pair = AlgebraPair::new(cs, 5).unwrap();
        let rep = compute_report_for(&pair).unwrap();
        let mut opts = VerifyOptions::new(1);
        opts.trials = Some(20);

        let mut doc = run_verify(&pair, &rep, &opts).unwrap();
        assert_eq!(verify_status(&doc), EXIT_OK);
        if let crate::dto::SuiteJson::Theorem2(r) = &mut doc.suites[0] {
            r.passed = false;
        }
        assert_eq!(verify_status(&doc), EXIT_VIOLATION);

        let mut found = run_search(&pair, &rep, &opts).unwrap();
        assert_eq!(search_status(&found), EXIT_OK);
        found.violation_count = 1;
        assert_eq!(search_status(&found), EXIT_WITNESS);

        assert_eq!(CliError::from(Error::JacobiViolation(0, 1, 2)).exit_code(), EXIT_VIOLATION);
        assert_eq!(CliError::from(Error::NotPrime(4)).exit_code(), EXIT_USAGE);
        assert_eq!(CliError::Usage("x".into()).exit_code(), EXIT_USAGE);
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
