//! Trial execution. Each trial is a pure function of its index, so running
//! them on a thread pool and reassembling by index gives the serial result.

use chevalley_core::invariants::InvariantsReport;
use chevalley_core::algebra::LieAlgebraFp;
use chevalley_core::verify::{
    dual_cox_sample, graded_trial, lemx_trial, merge_dual_cox, merge_graded, merge_outcomes, subspace_trial,
    DualCoxContext, DualCoxReport, GradedReport, SubspaceContext, TrialConfig, ViolationReport,
};
use chevalley_core::Result;
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Serial,
    Parallel,
}

/// `f(0), ..., f(n-1)` in index order.
pub fn map_indexed<T, F>(n: usize, exec: Execution, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    match exec {
        Execution::Serial => (0..n as u64).map(f).collect(),
        Execution::Parallel => (0..n as u64).into_par_iter().map(f).collect(),
    }
}

pub fn run_subspace(ctx: &SubspaceContext<'_>, cfg: &TrialConfig, exec: Execution) -> Result<ViolationReport> {
    cfg.validate()?;
    let out = map_indexed(cfg.trials, exec, |i| subspace_trial(ctx, cfg, i));
    Ok(merge_outcomes(ctx.check.as_str(), *cfg, out))
}

pub fn run_lemx(l: &LieAlgebraFp, cfg: &TrialConfig, exec: Execution) -> Result<ViolationReport> {
    cfg.validate()?;
    let out = map_indexed(cfg.trials, exec, |i| lemx_trial(l, cfg, i));
    Ok(merge_outcomes("lemx", *cfg, out))
}

pub fn run_dual_cox(ctx: &DualCoxContext<'_>, seed: u64, samples: usize, exec: Execution) -> Result<DualCoxReport> {
    if samples == 0 {
        return Err(chevalley_core::Error::Invalid("sample count must be at least 1".into()));
    }
    let out = map_indexed(samples, exec, |i| dual_cox_sample(ctx, seed, i));
    Ok(merge_dual_cox(ctx, seed, out))
}

pub fn run_graded(
    l: &LieAlgebraFp,
    rep: &InvariantsReport,
    n: usize,
    cfg: &TrialConfig,
    exec: Execution,
) -> Result<GradedReport> {
    if n < 2 {
        return Err(chevalley_core::Error::Invalid(format!("truncation degree must be at least 2, got {n}")));
    }
    cfg.validate()?;
    let out = map_indexed(cfg.trials, exec, |i| graded_trial(l, rep, n, cfg, i));
    Ok(merge_graded(n, cfg, out))
}
