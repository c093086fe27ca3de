//! Crate-wide error type.

use crate::algebra::AlgebraKind;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("algebra kind mismatch: {0:?} vs {1:?}")]
    KindMismatch(AlgebraKind, AlgebraKind),

    #[error("non-physical state: {0}")]
    NonPhysical(String),

    #[error("singular foliation at r = 0")]
    SingularFoliation,

    #[error("chart singularity: {0}")]
    ChartSingularity(String),

    #[error("leaf label r must be positive, got {0}")]
    InvalidLeaf(f64),

    #[error("invalid second moments: {0}")]
    InvalidMoments(String),

    #[error("purity parameter inconsistent with moments: r = {given}, moments give {derived}")]
    InconsistentPurity { given: f64, derived: f64 },

    #[error("Laguerre order {0} exceeds the recurrence stability bound {1}")]
    LaguerreOrder(usize, usize),

    #[error("density matrix purity parameter out of range: r = {0}")]
    PurityOutOfRange(f64),

    #[error("squeezing parameters invalid: {0}")]
    InvalidSqueezing(String),

    #[error("dissipator set is not representable: residual imaginary part {0:.3e} in the Kraus traces")]
    NonCompletelyPositive(f64),

    #[error("gradient/jump quadratic terms fail to cancel: residual {0:.3e}")]
    CancellationResidual(f64),

    #[error("trace preservation violated: trace-component velocity {0:.3e}")]
    TracePreservation(f64),

    #[error("wrong chart kind: expected {expected}, got {got}")]
    WrongChart {
        expected: &'static str,
        got: &'static str,
    },

    #[error("physicality drift at t = {t}: residual {residual:.3e} exceeds tolerance {tol:.3e}")]
    DriftViolation { t: f64, residual: f64, tol: f64 },

    #[error("non-finite state encountered at t = {0}")]
    NonFinite(f64),

    #[error("invalid integrator configuration: {0}")]
    InvalidIntegratorConfig(String),

    #[error("unknown scenario `{0}`")]
    UnknownScenario(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
