use alloc::vec::Vec;

use rand::Rng;

use super::{
    commutator_span, merge_outcomes, random_kind, sample_subspace, trial_rng, DimensionPolicy, TrialConfig,
    TrialOutcome, ViolationReport, Witness,
};
use crate::algebra::LieAlgebraFp;
use crate::error::{Error, Result};
use crate::invariants::InvariantsReport;
use crate::structure::Flavor;
use crate::Rational;

/// Inequalities of the form `cod [U, V] <= bound(U, V)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubspaceCheck {
    /// `cod [U,V] <= (1 + v)(cod U + cod V)`.
    Theorem2,
    /// `cod [U,V] <= cod U + cod V` in rank two, very good `p`.
    Rank2Strong,
    /// `[U,V] = g` whenever `dim U + dim V > m + s + r`.
    MyEstimate,
    /// `cod [U,V] <= cod U + cod V` in rank at least three; failures are
    /// findings rather than errors.
    Conjecture,
}

impl SubspaceCheck {
    pub fn as_str(self) -> &'static str {
        match self {
            SubspaceCheck::Theorem2 => "theorem2",
            SubspaceCheck::Rank2Strong => "rank2_strong",
            SubspaceCheck::MyEstimate => "my_estimate",
            SubspaceCheck::Conjecture => "conjecture",
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SubspaceContext<'a> {
    pub algebra: &'a LieAlgebraFp,
    pub report: &'a InvariantsReport,
    pub check: SubspaceCheck,
}

impl<'a> SubspaceContext<'a> {
    pub fn new(algebra: &'a LieAlgebraFp, report: &'a InvariantsReport, check: SubspaceCheck) -> Result<Self> {
        let rs = algebra.root_system();
        if algebra.flavor() != Flavor::SimplyConnected
            || rs.family() != report.family
            || rs.rank() != report.rank
            || algebra.p() != report.p
        {
            return Err(Error::Invalid("report does not describe this algebra".into()));
        }
        let very_good = report.prime_class.is_very_good();
        match check {
            SubspaceCheck::Rank2Strong if report.rank != 2 || !very_good => {
                return Err(Error::Precondition {
                    check: "rank2_strong",
                    requirement: alloc::format!(
                        "rank 2 and a very good prime; {}{} at p = {} is {}",
                        report.family,
                        report.rank,
                        report.p,
                        report.prime_class
                    ),
                })
            }
            SubspaceCheck::Conjecture if report.rank < 3 || !very_good => {
                return Err(Error::Precondition {
                    check: "conjecture",
                    requirement: alloc::format!(
                        "rank at least 3 and a very good prime; {}{} at p = {} is {}",
                        report.family,
                        report.rank,
                        report.p,
                        report.prime_class
                    ),
                })
            }
            _ => {}
        }
        Ok(Self { algebra, report, check })
    }

    fn bound(&self, cu: usize, cv: usize) -> Rational {
        let c = Rational::from_integer((cu + cv) as i64);
        match self.check {
            SubspaceCheck::Theorem2 => (Rational::from_integer(1) + self.report.v) * c,
            SubspaceCheck::Rank2Strong | SubspaceCheck::Conjecture => c,
            SubspaceCheck::MyEstimate => Rational::from_integer(0),
        }
    }

    fn dims<R: Rng + ?Sized>(&self, cfg: &TrialConfig, rng: &mut R) -> (usize, usize) {
        if let Some(d) = cfg.fixed_dims {
            return d;
        }
        let m = self.algebra.dim();
        let threshold = self.report.estimate_threshold();
        let total = match (self.check, cfg.policy) {
            (SubspaceCheck::MyEstimate, _) => rng.random_range(threshold + 1..=2 * m),
            (_, DimensionPolicy::Uniform) => return (rng.random_range(0..=m), rng.random_range(0..=m)),
            (_, DimensionPolicy::Boundary) => {
                let w = (m / 4).max(2) as i64;
                let t = threshold as i64 + rng.random_range(-w..=w);
                t.clamp(0, 2 * m as i64) as usize
            }
        };
        let du = rng.random_range(total.saturating_sub(m)..=total.min(m));
        (du, total - du)
    }
}

/// Runs trial `index` of a subspace check.
pub fn subspace_trial(ctx: &SubspaceContext<'_>, cfg: &TrialConfig, index: u64) -> TrialOutcome {
    let mut rng = trial_rng(cfg.seed, index);
    let l = ctx.algebra;
    let (m, f) = (l.dim(), l.field());
    let (du, dv) = ctx.dims(cfg, &mut rng);
    let (du, dv) = (du.min(m), dv.min(m));
    let ku = random_kind(&mut rng);
    let kv = random_kind(&mut rng);
    let u = sample_subspace(f, m, du, ku, &mut rng);
    let v = sample_subspace(f, m, dv, kv, &mut rng);
    let uv = commutator_span(l, &u, &v).expect("subspaces live in the algebra");
    let bound = ctx.bound(u.codim(), v.codim());
    let lhs = uv.codim();
    let violated = Rational::from_integer(lhs as i64) > bound;
    TrialOutcome {
        trial: index,
        dim_u: du,
        dim_v: dv,
        lhs,
        bound,
        witness: violated.then(|| Witness::new(&u, &v)),
    }
}

pub fn run_subspace_check(ctx: &SubspaceContext<'_>, cfg: &TrialConfig) -> Result<ViolationReport> {
    cfg.validate()?;
    let outcomes: Vec<TrialOutcome> = (0..cfg.trials as u64).map(|i| subspace_trial(ctx, cfg, i)).collect();
    Ok(merge_outcomes(ctx.check.as_str(), *cfg, outcomes))
}

pub fn check_theorem2(l: &LieAlgebraFp, rep: &InvariantsReport, cfg: &TrialConfig) -> Result<ViolationReport> {
    run_subspace_check(&SubspaceContext::new(l, rep, SubspaceCheck::Theorem2)?, cfg)
}

pub fn check_rank2_strong(l: &LieAlgebraFp, rep: &InvariantsReport, cfg: &TrialConfig) -> Result<ViolationReport> {
    run_subspace_check(&SubspaceContext::new(l, rep, SubspaceCheck::Rank2Strong)?, cfg)
}

pub fn check_my_estimate(l: &LieAlgebraFp, rep: &InvariantsReport, cfg: &TrialConfig) -> Result<ViolationReport> {
    run_subspace_check(&SubspaceContext::new(l, rep, SubspaceCheck::MyEstimate)?, cfg)
}

pub fn search_conjecture(l: &LieAlgebraFp, rep: &InvariantsReport, cfg: &TrialConfig) -> Result<ViolationReport> {
    run_subspace_check(&SubspaceContext::new(l, rep, SubspaceCheck::Conjecture)?, cfg)
}
