use alloc::string::String;

use crate::roots::Family;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{family}{rank} is not an admissible root system type")]
    InadmissibleType { family: Family, rank: usize },
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("modulus {0} does not fit the supported word size")]
    ModulusTooLarge(u32),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operands live over different fields (F_{0} vs F_{1})")]
    FieldMismatch(u32, u32),
    #[error("requested dimension {dim} exceeds ambient dimension {ambient}")]
    DimensionTooLarge { dim: usize, ambient: usize },
    #[error("Jacobi identity fails on basis triple ({0}, {1}, {2})")]
    JacobiViolation(usize, usize, usize),
    #[error("bracket table is not antisymmetric at ({0}, {1})")]
    AntisymmetryViolation(usize, usize),
    #[error("structure constant for roots {0} and {1} is not integral")]
    NonIntegralStructureConstant(usize, usize),
    #[error("divided power {power} of ad(e_{root}) is not integral")]
    NonIntegralDividedPower { root: usize, power: usize },
    #[error(
        "p = {p} is intolerable for {family}{rank}: the short root vectors generate a proper \
         ideal not contained in the centre"
    )]
    IntolerablePrime { family: Family, rank: usize, p: u32 },
    #[error("rank {0} is too small; at least rank 2 is required")]
    RankTooSmall(usize),
    #[error("{check} requires {requirement}")]
    Precondition {
        check: &'static str,
        requirement: String,
    },
    #[error("no Cartan-matrix convention makes the canonical map a homomorphism")]
    CanonicalMapNotHomomorphism,
    #[error("the space of invariant symmetric forms is zero")]
    NoInvariantForm,
    #[error("standard representation of so(2l) fails on basis pair ({0}, {1})")]
    RepresentationFailure(usize, usize),
    #[error("x_{root}({t}) {what}")]
    AutomorphismFailure { root: usize, t: u32, what: &'static str },
    #[error("inconsistent invariants: {0}")]
    InvariantMismatch(String),
    #[error("k must be positive, got {0}")]
    NonPositiveK(i64),
    #[error("invalid data: {0}")]
    Invalid(String),
}
