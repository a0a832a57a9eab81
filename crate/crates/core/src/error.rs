use thiserror::Error;

/// Errors produced by the simulation toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("ensemble must contain at least one atom")]
    EmptyEnsemble,

    #[error("polar angle {0} outside [0, pi]")]
    PolarRange(f64),

    #[error("flow evaluated at polar singularity (theta = {0:.3e})")]
    PolarSingularity(f64),

    #[error("flow step left the polar guard band at t = {t:.6e} (theta = {theta:.3e})")]
    PoleApproach { t: f64, theta: f64 },

    #[error("eigendecomposition failed: {0}")]
    Eigen(String),

    #[error("no cat-fidelity local maximum inside (0, {t_max}]")]
    NoCatTime { t_max: f64 },

    #[error("empty sweep list")]
    EmptySweep,

    #[error("dressing detuning must be nonzero")]
    ZeroDetuning,

    #[error("probability {0} outside [0, 1)")]
    ProbabilityRange(f64),

    #[error("dressing optimisation budget exhausted: {0}")]
    BudgetExhausted(String),

    #[error("infeasible principal number {n}: {reason}")]
    InfeasibleScanRow { n: u32, reason: String },

    #[error("atomic data file {path}: {reason}")]
    AtomicData { path: String, reason: String },

    #[error("atomic data file missing: {0}")]
    DataFileMissing(String),

    #[error("no quantum-defect channel for l = {l}, 2j = {j2}")]
    MissingChannel { l: u32, j2: u32 },

    #[error("radial integration failed for n = {n}, l = {l}: {reason}")]
    Numerov { n: u32, l: u32, reason: String },

    #[error("pair basis grew past the cap of {cap} states ({size} admitted); tighten the window or floor")]
    BasisExplosion { size: usize, cap: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("phonon register overflow: step {step} needs {needed} levels, register holds {capacity}")]
    PhononOverflow {
        step: usize,
        needed: usize,
        capacity: usize,
    },

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
