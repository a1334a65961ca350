use alloc::vec::Vec;

use rand::Rng;

use super::{commutator_span, random_kind, sample_subspace, trial_rng, TrialConfig};
use crate::algebra::LieAlgebraFp;
use crate::bounds::Regime;
use crate::error::{Error, Result};
use crate::invariants::InvariantsReport;
use crate::linalg::Subspace;
use crate::Rational;

/// One random family `H_1, ..., H_N` of subspaces with
/// `[H_i, H_j] ⊆ H_{i+j}` for `i + j <= N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedOutcome {
    pub trial: u64,
    /// `cod H_i` for `i = 1..=N`.
    pub codims: Vec<usize>,
    /// `cod H'_k` for `k = 2..=N`, where `H'_k = Σ_{i+j=k} [H_i, H_j]`.
    pub derived_codims: Vec<usize>,
    /// Pairs `(i, j)` where `cod [H_i,H_j] <= α(cod H_i + cod H_j)` failed.
    pub degree_failures: Vec<(usize, usize)>,
    /// `Σ_{k=2..N} cod H'_k`.
    pub lhs: usize,
    /// `m + 4α Σ_{i=1..N} cod H_i`.
    pub rhs: Rational,
}

impl GradedOutcome {
    pub fn passed(&self) -> bool {
        self.degree_failures.is_empty() && Rational::from_integer(self.lhs as i64) <= self.rhs
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedReport {
    pub truncation: usize,
    pub config: TrialConfig,
    pub families: usize,
    pub failures: Vec<GradedOutcome>,
    /// Smallest `rhs - lhs` of the summed inequality.
    pub min_slack: Option<Rational>,
}

impl GradedReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn alpha(rep: &InvariantsReport) -> Rational {
    match Regime::of(rep) {
        Regime::General => Rational::from_integer(1) + rep.v,
        Regime::Rank2Strong => Rational::from_integer(1),
    }
}

/// Codimensions for `H_1..H_N` are drawn small so the family is not
/// trivially the whole algebra after completion; `fixed_dims`, if given,
/// fixes `dim H_1` (the first component).
pub fn graded_trial(l: &LieAlgebraFp, rep: &InvariantsReport, n: usize, cfg: &TrialConfig, index: u64) -> GradedOutcome {
    let mut rng = trial_rng(cfg.seed, index);
    let (m, f) = (l.dim(), l.field());
    let mut h: Vec<Subspace> = (1..=n)
        .map(|i| {
            let d = match (i, cfg.fixed_dims) {
                (1, Some((d1, _))) => d1.min(m),
                _ => m - rng.random_range(0..=(m / 2).max(1)).min(m),
            };
            let kind = random_kind(&mut rng);
            sample_subspace(f, m, d, kind, &mut rng)
        })
        .collect();
    // Completion in increasing degree: H_k only receives brackets of lower
    // degrees, which are final by then.
    let mut derived: Vec<Subspace> = Vec::with_capacity(n);
    for k in 2..=n {
        let mut dk = Subspace::zero(f, m);
        for i in 1..=k / 2 {
            let b = commutator_span(l, &h[i - 1], &h[k - i - 1]).expect("same algebra");
            dk = dk.sum(&b).expect("same ambient space");
        }
        h[k - 1] = h[k - 1].sum(&dk).expect("same ambient space");
        derived.push(dk);
    }
    let a = alpha(rep);
    let mut degree_failures = Vec::new();
    for i in 1..=n {
        for j in i..=n - i {
            let b = commutator_span(l, &h[i - 1], &h[j - 1]).expect("same algebra");
            let bound = a * Rational::from_integer((h[i - 1].codim() + h[j - 1].codim()) as i64);
            if Rational::from_integer(b.codim() as i64) > bound {
                degree_failures.push((i, j));
            }
        }
    }
    let codims: Vec<usize> = h.iter().map(|s| s.codim()).collect();
    let derived_codims: Vec<usize> = derived.iter().map(|s| s.codim()).collect();
    let lhs = derived_codims.iter().sum();
    let rhs = Rational::from_integer(m as i64) + Rational::from_integer(4) * a * Rational::from_integer(codims.iter().sum::<usize>() as i64);
    GradedOutcome {
        trial: index,
        codims,
        derived_codims,
        degree_failures,
        lhs,
        rhs,
    }
}

pub fn merge_graded(n: usize, cfg: &TrialConfig, mut outcomes: Vec<GradedOutcome>) -> GradedReport {
    outcomes.sort_by_key(|o| o.trial);
    let min_slack = outcomes.iter().map(|o| o.rhs - Rational::from_integer(o.lhs as i64)).min();
    GradedReport {
        truncation: n,
        config: *cfg,
        families: outcomes.len(),
        failures: outcomes.into_iter().filter(|o| !o.passed()).collect(),
        min_slack,
    }
}

/// Checks the degreewise estimate and its sum on random graded families
/// truncated at degree `n`.
pub fn check_graded_chain(l: &LieAlgebraFp, rep: &InvariantsReport, n: usize, cfg: &TrialConfig) -> Result<GradedReport> {
    if n < 2 {
        return Err(Error::Invalid(alloc::format!("truncation degree must be at least 2, got {n}")));
    }
    cfg.validate()?;
    let out = (0..cfg.trials as u64).map(|i| graded_trial(l, rep, n, cfg, i)).collect();
    Ok(merge_graded(n, cfg, out))
}
