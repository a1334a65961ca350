use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use super::{
    commutator_span, encode_rows, merge_outcomes, random_kind, sample_subspace, trial_rng, TrialConfig, TrialOutcome,
    ViolationReport, Witness,
};
use crate::algebra::LieAlgebraFp;
use crate::error::{Error, Result};
use crate::group::AdjointGroup;
use crate::invariants::InvariantsReport;
use crate::linalg::{random_vector, Subspace};
use crate::roots::{Family, LengthClass};
use crate::Rational;

/// How a non-central element was drawn.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SampleStrategy {
    /// Uniform random vector.
    Dense,
    /// Combination of one to three root vectors, sometimes plus a Cartan part.
    SparseRoots,
    /// A long root vector or sparse combination moved by a random group word.
    Conjugated,
    /// Random Cartan element.
    Cartan,
}

impl SampleStrategy {
    pub const ALL: [SampleStrategy; 4] = [
        SampleStrategy::Dense,
        SampleStrategy::SparseRoots,
        SampleStrategy::Conjugated,
        SampleStrategy::Cartan,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SampleStrategy::Dense => "dense",
            SampleStrategy::SparseRoots => "sparse_roots",
            SampleStrategy::Conjugated => "conjugated",
            SampleStrategy::Cartan => "cartan",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

/// Shared state for centralizer sampling.
#[derive(Clone, Debug)]
pub struct DualCoxContext<'a> {
    pub algebra: &'a LieAlgebraFp,
    pub report: &'a InvariantsReport,
    pub center: Subspace,
    pub group: AdjointGroup,
    pub n_factors: usize,
    long_roots: Vec<usize>,
    check_even: bool,
}

impl<'a> DualCoxContext<'a> {
    pub fn new(algebra: &'a LieAlgebraFp, report: &'a InvariantsReport) -> Result<Self> {
        let rs = algebra.root_system();
        let long_roots = (0..rs.num_roots()).filter(|&k| rs.length_class(k) == LengthClass::Long).collect();
        Ok(Self {
            algebra,
            report,
            center: algebra.center(),
            group: AdjointGroup::new(algebra)?,
            n_factors: 2 * algebra.dim(),
            long_roots,
            check_even: report.rank == 2 && report.prime_class.is_very_good(),
        })
    }

    pub fn with_factors(mut self, n: usize) -> Self {
        self.n_factors = n.max(1);
        self
    }

    /// Whether even centralizer dimensions are asserted (rank two, very good
    /// prime).
    pub fn checks_parity(&self) -> bool {
        self.check_even
    }

    fn sparse_roots<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<u32> {
        let l = self.algebra;
        let rs = l.root_system();
        let p = l.p();
        let mut x = vec![0u32; l.dim()];
        for _ in 0..rng.random_range(1..=3) {
            let k = rng.random_range(0..rs.num_roots());
            x[l.structure().root_basis(k)] = rng.random_range(1..p);
        }
        if rng.random_bool(0.25) {
            for slot in x[..l.rank()].iter_mut() {
                *slot = rng.random_range(0..p);
            }
        }
        x
    }

    fn draw<R: Rng + ?Sized>(&self, strategy: SampleStrategy, rng: &mut R) -> Vec<u32> {
        let l = self.algebra;
        let f = l.field();
        match strategy {
            SampleStrategy::Dense => random_vector(&f, l.dim(), rng),
            SampleStrategy::SparseRoots => self.sparse_roots(rng),
            SampleStrategy::Conjugated => {
                let x = if rng.random_bool(0.5) {
                    let k = self.long_roots[rng.random_range(0..self.long_roots.len())];
                    l.root_vector(k)
                } else {
                    self.sparse_roots(rng)
                };
                let word = self.group.random_word(self.n_factors, rng);
                self.group.apply_word(&word, &x)
            }
            SampleStrategy::Cartan => {
                let mut x = vec![0u32; l.dim()];
                for slot in x[..l.rank()].iter_mut() {
                    *slot = rng.random_range(0..f.p());
                }
                x
            }
        }
    }
}

/// One centralizer sample.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualCoxSample {
    pub index: u64,
    pub strategy: SampleStrategy,
    pub dim: usize,
    /// The element, kept only when it breaks an assertion.
    pub element: Option<String>,
}

pub fn dual_cox_sample(ctx: &DualCoxContext<'_>, seed: u64, index: u64) -> DualCoxSample {
    let mut rng = trial_rng(seed, index);
    let strategy = SampleStrategy::ALL[rng.random_range(0..4)];
    let l = ctx.algebra;
    let mut x = ctx.draw(strategy, &mut rng);
    let mut tries = 0;
    while ctx.center.contains(&x) {
        tries += 1;
        x = if tries < 32 {
            ctx.draw(strategy, &mut rng)
        } else {
            l.root_vector(l.root_system().highest_root())
        };
    }
    let dim = l.centralizer_dim(&x);
    let bad = dim > ctx.report.s || (ctx.check_even && dim % 2 == 1);
    DualCoxSample {
        index,
        strategy,
        dim,
        element: bad.then(|| encode_rows(l.field(), &[x]).remove(0)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualCoxReport {
    pub samples: usize,
    pub seed: u64,
    pub s: usize,
    pub max_observed: usize,
    /// Largest dimension per strategy, in [`SampleStrategy::ALL`] order.
    pub max_by_strategy: [usize; 4],
    pub theta_dim: usize,
    /// Samples exceeding `s`.
    pub violations: Vec<DualCoxSample>,
    /// Samples with odd centralizer dimension, when parity is asserted.
    pub odd: Vec<DualCoxSample>,
    pub parity_checked: bool,
}

impl DualCoxReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.odd.is_empty() && self.theta_dim == self.s && self.max_observed == self.s
    }
}

pub fn merge_dual_cox(ctx: &DualCoxContext<'_>, seed: u64, mut samples: Vec<DualCoxSample>) -> DualCoxReport {
    samples.sort_by_key(|s| s.index);
    let l = ctx.algebra;
    let theta_dim = l.centralizer_dim(&l.root_vector(l.root_system().highest_root()));
    let mut max_by_strategy = [0usize; 4];
    let mut violations = Vec::new();
    let mut odd = Vec::new();
    for s in &samples {
        let slot = &mut max_by_strategy[s.strategy.index()];
        *slot = (*slot).max(s.dim);
        if s.dim > ctx.report.s {
            violations.push(s.clone());
        } else if ctx.check_even && s.dim % 2 == 1 {
            odd.push(s.clone());
        }
    }
    DualCoxReport {
        samples: samples.len(),
        seed,
        s: ctx.report.s,
        max_observed: max_by_strategy.iter().copied().max().unwrap_or(0),
        max_by_strategy,
        theta_dim,
        violations,
        odd,
        parity_checked: ctx.check_even,
    }
}

/// Samples non-central elements and checks `dim c(x) <= m - 2(h^∨ - 1)`.
pub fn check_dual_cox(l: &LieAlgebraFp, rep: &InvariantsReport, seed: u64, samples: usize) -> Result<DualCoxReport> {
    if samples == 0 {
        return Err(Error::Invalid("sample count must be at least 1".into()));
    }
    let ctx = DualCoxContext::new(l, rep)?;
    let out = (0..samples as u64).map(|i| dual_cox_sample(&ctx, seed, i)).collect();
    Ok(merge_dual_cox(&ctx, seed, out))
}

/// Trial `index` of `dim [U,V] >= dim V - dim(V ∩ c(x))` for `x ∈ U`,
/// phrased as `cod [U,V] <= m - dim V + dim(V ∩ c(x))`.
pub fn lemx_trial(l: &LieAlgebraFp, cfg: &TrialConfig, index: u64) -> TrialOutcome {
    let mut rng = trial_rng(cfg.seed, index);
    let (m, f) = (l.dim(), l.field());
    let (du, dv) = cfg
        .fixed_dims
        .unwrap_or_else(|| (rng.random_range(1..=m), rng.random_range(0..=m)));
    let ku = random_kind(&mut rng);
    let kv = random_kind(&mut rng);
    let u = sample_subspace(f, m, du.min(m), ku, &mut rng);
    let v = sample_subspace(f, m, dv.min(m), kv, &mut rng);
    let x = if rng.random_bool(0.125) {
        vec![0; m]
    } else {
        u.random_element(&mut rng)
    };
    let vc = v.intersect(&l.centralizer(&x)).expect("same ambient space");
    let uv = commutator_span(l, &u, &v).expect("same ambient space");
    let bound = Rational::from_integer((m - v.dim() + vc.dim()) as i64);
    let lhs = uv.codim();
    let violated = Rational::from_integer(lhs as i64) > bound;
    TrialOutcome {
        trial: index,
        dim_u: u.dim(),
        dim_v: v.dim(),
        lhs,
        bound,
        witness: violated.then(|| Witness::new(&u, &v)),
    }
}

pub fn check_lemx(l: &LieAlgebraFp, cfg: &TrialConfig) -> Result<ViolationReport> {
    cfg.validate()?;
    let out = (0..cfg.trials as u64).map(|i| lemx_trial(l, cfg, i)).collect();
    Ok(merge_outcomes("lemx", *cfg, out))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogueEntry {
    pub name: &'static str,
    pub expected: usize,
    pub observed: usize,
}

impl CatalogueEntry {
    pub fn matches(&self) -> bool {
        self.expected == self.observed
    }
}

/// Centralizer dimensions of the distinguished nilpotent representatives in
/// rank two: `e_r = e_α + e_β` (regular), `e_sr = e_{2α+3β} + e_β`
/// (subregular, `G_2` only) and the simple root vectors, where `α` is the
/// long and `β` the short simple root.
pub fn rank2_orbit_catalogue(l: &LieAlgebraFp) -> Result<Vec<CatalogueEntry>> {
    let rs = l.root_system();
    let class = rs.classify_prime(l.p());
    if rs.rank() != 2 || !class.is_very_good() {
        return Err(Error::Precondition {
            check: "rank2_orbit_catalogue",
            requirement: alloc::format!(
                "rank 2 and a very good prime; {}{} at p = {} is {}",
                rs.family(),
                rs.rank(),
                l.p(),
                class
            ),
        });
    }
    let (a, b) = if rs.length_class(rs.simple(0)) == LengthClass::Long {
        (rs.simple(0), rs.simple(1))
    } else {
        (rs.simple(1), rs.simple(0))
    };
    let ea = l.root_vector(a);
    let eb = l.root_vector(b);
    let f = l.field();
    let add = |x: &[u32], y: &[u32]| -> Vec<u32> { x.iter().zip(y).map(|(&s, &t)| f.add(s, t)).collect() };
    let er = add(&ea, &eb);
    let dim = |x: &[u32]| l.centralizer_dim(x);
    let entry = |name, expected, x: &[u32]| CatalogueEntry {
        name,
        expected,
        observed: dim(x),
    };
    Ok(match rs.family() {
        Family::A => vec![entry("e_r", 2, &er), entry("e_alpha", 4, &ea), entry("e_beta", 4, &eb)],
        Family::C => vec![entry("e_r", 2, &er), entry("e_beta", 4, &eb), entry("e_alpha", 6, &ea)],
        Family::G => {
            let mut coeffs = vec![0i64; 2];
            for (i, c) in rs.root(a).iter().enumerate() {
                coeffs[i] += 2 * c;
            }
            for (i, c) in rs.root(b).iter().enumerate() {
                coeffs[i] += 3 * c;
            }
            let top = rs.index_of(&coeffs).expect("2α + 3β is a root of G2");
            let esr = add(&l.root_vector(top), &eb);
            vec![
                entry("e_r", 2, &er),
                entry("e_sr", 4, &esr),
                entry("e_beta", 6, &eb),
                entry("e_alpha", 8, &ea),
            ]
        }
        _ => unreachable!("rank two types are A2, C2 and G2"),
    })
}
