//! Seeded randomized checks of commutator-codimension estimates.
//!
//! Every trial draws its randomness from a generator derived from the master
//! seed and the trial index alone, so trials can run in any order or in
//! parallel and a report merged by index is identical either way.

mod centralizers;
mod graded;
mod subspaces;

pub use centralizers::{
    check_dual_cox, check_lemx, dual_cox_sample, lemx_trial, merge_dual_cox, rank2_orbit_catalogue, CatalogueEntry,
    DualCoxContext, DualCoxReport, DualCoxSample, SampleStrategy,
};
pub use graded::{check_graded_chain, graded_trial, merge_graded, GradedOutcome, GradedReport};
pub use subspaces::{
    check_my_estimate, check_rank2_strong, check_theorem2, run_subspace_check, search_conjecture, subspace_trial,
    SubspaceCheck, SubspaceContext,
};

use alloc::string::String;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{nonzeros, LieAlgebraFp};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::{random_subspace, SpanBuilder, Subspace};
use crate::Rational;

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 20_240_611;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DimensionPolicy {
    Uniform,
    /// `dim U + dim V` near `m + s + r`.
    Boundary,
}

impl DimensionPolicy {
    pub fn as_str(self) -> &'static str {
        match self {
            DimensionPolicy::Uniform => "uniform",
            DimensionPolicy::Boundary => "boundary",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TrialConfig {
    pub seed: u64,
    pub trials: usize,
    pub policy: DimensionPolicy,
    pub fixed_dims: Option<(usize, usize)>,
}

impl TrialConfig {
    pub fn new(seed: u64, trials: usize) -> Self {
        Self {
            seed,
            trials,
            policy: DimensionPolicy::Boundary,
            fixed_dims: None,
        }
    }

    pub fn with_policy(mut self, policy: DimensionPolicy) -> Self {
        self.policy = policy;
        self
    }

    pub fn with_dims(mut self, du: usize, dv: usize) -> Self {
        self.fixed_dims = Some((du, dv));
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::Invalid("trial count must be at least 1".into()));
        }
        Ok(())
    }
}

/// The generator of trial `index`.
pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Basis rows of a subspace encoded as strings of residues: one digit per
/// entry when `p <= 10`, comma-separated otherwise.
pub fn encode_rows(field: PrimeField, rows: &[Vec<u32>]) -> Vec<String> {
    rows.iter()
        .map(|r| {
            if field.p() <= 10 {
                r.iter().map(|&x| char::from(b'0' + x as u8)).collect()
            } else {
                let parts: Vec<String> = r.iter().map(|x| alloc::format!("{x}")).collect();
                parts.join(",")
            }
        })
        .collect()
}

pub fn decode_rows(field: PrimeField, rows: &[String]) -> Result<Vec<Vec<u32>>> {
    rows.iter()
        .map(|r| {
            let parsed: Option<Vec<u32>> = if field.p() <= 10 {
                r.chars().map(|c| c.to_digit(10)).collect()
            } else {
                r.split(',').map(|x| x.trim().parse().ok()).collect()
            };
            match parsed {
                Some(v) if v.iter().all(|&x| x < field.p()) => Ok(v),
                _ => Err(Error::Invalid(alloc::format!("bad witness row {r:?}"))),
            }
        })
        .collect()
}

/// Serialized `(U, V)` pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub u: Vec<String>,
    pub v: Vec<String>,
}

impl Witness {
    pub fn new(u: &Subspace, v: &Subspace) -> Self {
        let f = u.field();
        Self {
            u: encode_rows(f, u.basis()),
            v: encode_rows(f, v.basis()),
        }
    }
}

/// Recomputes `(cod U, cod V, cod [U, V])` from a serialized witness.
pub fn recheck_witness(l: &LieAlgebraFp, w: &Witness) -> Result<(usize, usize, usize)> {
    let f = l.field();
    let m = l.dim();
    let u_rows = decode_rows(f, &w.u)?;
    let v_rows = decode_rows(f, &w.v)?;
    let u = Subspace::from_vectors(f, m, u_rows.iter().map(|r| r.as_slice()))?;
    let v = Subspace::from_vectors(f, m, v_rows.iter().map(|r| r.as_slice()))?;
    let uv = commutator_span(l, &u, &v)?;
    Ok((u.codim(), v.codim(), uv.codim()))
}

/// One failed inequality `lhs <= bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub trial: u64,
    pub dim_u: usize,
    pub dim_v: usize,
    pub lhs: usize,
    pub bound: Rational,
    pub witness: Witness,
}

/// Result of one subspace trial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialOutcome {
    pub trial: u64,
    pub dim_u: usize,
    pub dim_v: usize,
    /// The quantity bounded, usually `cod [U, V]`.
    pub lhs: usize,
    pub bound: Rational,
    pub witness: Option<Witness>,
}

impl TrialOutcome {
    pub fn slack(&self) -> Rational {
        self.bound - Rational::from_integer(self.lhs as i64)
    }

    pub fn violated(&self) -> bool {
        self.slack() < Rational::from_integer(0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ViolationReport {
    pub check: &'static str,
    pub config: TrialConfig,
    pub trials_run: usize,
    pub violations: Vec<Violation>,
    /// Smallest `bound - lhs` observed.
    pub min_slack: Option<Rational>,
    /// Trials at which the minimal slack occurred (count).
    pub min_slack_count: usize,
}

impl ViolationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Merges outcomes into a report, in trial order.
pub fn merge_outcomes(check: &'static str, config: TrialConfig, mut outcomes: Vec<TrialOutcome>) -> ViolationReport {
    outcomes.sort_by_key(|o| o.trial);
    let mut min_slack: Option<Rational> = None;
    let mut min_slack_count = 0;
    let mut violations = Vec::new();
    for o in &outcomes {
        let s = o.slack();
        match min_slack {
            Some(cur) if s > cur => {}
            Some(cur) if s == cur => min_slack_count += 1,
            _ => {
                min_slack = Some(s);
                min_slack_count = 1;
            }
        }
        if o.violated() {
            violations.push(Violation {
                trial: o.trial,
                dim_u: o.dim_u,
                dim_v: o.dim_v,
                lhs: o.lhs,
                bound: o.bound,
                witness: o.witness.clone().expect("violations carry witnesses"),
            });
        }
    }
    ViolationReport {
        check,
        config,
        trials_run: outcomes.len(),
        violations,
        min_slack,
        min_slack_count,
    }
}

/// `[U, V]`, the span of brackets of basis vectors.
pub fn commutator_span(l: &LieAlgebraFp, u: &Subspace, v: &Subspace) -> Result<Subspace> {
    let m = l.dim();
    for s in [u, v] {
        if s.ambient() != m {
            return Err(Error::DimensionMismatch {
                expected: m,
                found: s.ambient(),
            });
        }
        if s.field() != l.field() {
            return Err(Error::FieldMismatch(s.field().p(), l.p()));
        }
    }
    let mut span = SpanBuilder::new(l.field(), m);
    let us: Vec<Vec<(u32, u32)>> = u.basis().iter().map(|x| nonzeros(x)).collect();
    let vs: Vec<Vec<(u32, u32)>> = v.basis().iter().map(|x| nonzeros(x)).collect();
    // Sparse products are cheaper than a dense ad(u) · v when both factors
    // have few nonzeros.
    let dense_cost = m * m;
    'outer: for (ub, un) in u.basis().iter().zip(&us) {
        let mut ad = None;
        for (vb, vn) in v.basis().iter().zip(&vs) {
            let w = if un.len() * vn.len() * 2 <= dense_cost {
                l.bracket_sparse(un, vn)
            } else {
                ad.get_or_insert_with(|| l.ad_matrix(ub)).mul_vec(vb)
            };
            span.insert(&w);
            if span.is_full() {
                break 'outer;
            }
        }
    }
    Ok(span.into_subspace())
}

/// Kinds of random subspace a trial may draw.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubspaceKind {
    /// Row space of a uniformly random full-rank matrix.
    Dense,
    /// Span of a random subset of basis vectors.
    Coordinate,
}

pub(crate) fn random_kind<R: Rng + ?Sized>(rng: &mut R) -> SubspaceKind {
    if rng.random_bool(0.5) {
        SubspaceKind::Dense
    } else {
        SubspaceKind::Coordinate
    }
}

pub(crate) fn sample_subspace<R: Rng + ?Sized>(
    field: PrimeField,
    m: usize,
    d: usize,
    kind: SubspaceKind,
    rng: &mut R,
) -> Subspace {
    match kind {
        SubspaceKind::Dense => random_subspace(field, m, d, rng).expect("d <= m"),
        SubspaceKind::Coordinate => {
            let mut idx: Vec<usize> = (0..m).collect();
            for i in 0..d {
                let j = rng.random_range(i..m);
                idx.swap(i, j);
            }
            Subspace::coordinate(field, m, &idx[..d])
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::{Family, RootSystem, RootSystemSpec};
    use crate::structure::{ChevalleyStructure, Flavor};
    use alloc::sync::Arc;
    use alloc::vec;

    fn alg(f: Family, l: usize, p: u32) -> LieAlgebraFp {
        let cs = Arc::new(ChevalleyStructure::new(RootSystem::new(RootSystemSpec::new(f, l).unwrap())).unwrap());
        LieAlgebraFp::instantiate(cs, p, Flavor::SimplyConnected).unwrap()
    }

    #[test]
    fn commutator_span_basics() {
        let g = alg(Family::A, 2, 5);
        let f = g.field();
        let full = Subspace::full(f, 8);
        assert!(commutator_span(&g, &full, &full).unwrap().is_full());
        let rs = g.root_system().clone();
        let a = rs.simple(0);
        let u = Subspace::from_vectors(f, 8, [g.root_vector(a).as_slice()]).unwrap();
        let v = Subspace::from_vectors(f, 8, [g.root_vector(rs.negative(a)).as_slice()]).unwrap();
        let uv = commutator_span(&g, &u, &v).unwrap();
        assert_eq!(uv.dim(), 1);
        let h: Vec<u32> = rs.coroot(a).iter().map(|&c| f.reduce_i64(c)).chain(vec![0; 6]).collect();
        assert!(uv.contains(&h));
    }

    #[test]
    fn commutator_span_against_all_vector_pairs() {
        let g = alg(Family::A, 2, 2);
        let f = g.field();
        let mut rng = trial_rng(7, 0);
        for _ in 0..20 {
            let u = random_subspace(f, 8, rng.random_range(0..=3), &mut rng).unwrap();
            let v = random_subspace(f, 8, rng.random_range(0..=3), &mut rng).unwrap();
            let elems = |s: &Subspace| -> Vec<Vec<u32>> {
                (0..1u32 << s.dim())
                    .map(|mask| s.combination(&(0..s.dim()).map(|i| (mask >> i) & 1).collect::<Vec<_>>()))
                    .collect()
            };
            let brackets: Vec<Vec<u32>> = elems(&u)
                .iter()
                .flat_map(|x| elems(&v).into_iter().map(move |y| (x.clone(), y)))
                .map(|(x, y)| g.bracket(&x, &y))
                .collect();
            let oracle = Subspace::from_vectors(f, 8, brackets.iter().map(|b| b.as_slice())).unwrap();
            assert_eq!(commutator_span(&g, &u, &v).unwrap(), oracle);
        }
    }

    #[test]
    fn witness_round_trip() {
        let g = alg(Family::A, 3, 5);
        let f = g.field();
        let mut rng = trial_rng(1, 2);
        let u = random_subspace(f, 15, 6, &mut rng).unwrap();
        let v = random_subspace(f, 15, 4, &mut rng).unwrap();
        let w = Witness::new(&u, &v);
        let (cu, cv, cuv) = recheck_witness(&g, &w).unwrap();
        assert_eq!((cu, cv), (9, 11));
        assert_eq!(cuv, commutator_span(&g, &u, &v).unwrap().codim());
        let big = PrimeField::new(13).unwrap();
        let rows = vec![vec![12, 0, 11]];
        assert_eq!(decode_rows(big, &encode_rows(big, &rows)).unwrap(), rows);
    }

    #[test]
    fn trial_streams_are_distinct_and_reproducible() {
        let a: u64 = trial_rng(5, 0).random();
        let b: u64 = trial_rng(5, 1).random();
        assert_ne!(a, b);
        assert_eq!(a, trial_rng(5, 0).random::<u64>());
    }
}
