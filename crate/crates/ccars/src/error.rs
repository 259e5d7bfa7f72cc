//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// One-photon detuning is zero; the adiabatic elimination behind the
    /// effective Rabi frequencies divides by it.
    #[error("singular two-level reduction: {0}")]
    SingularReduction(String),

    #[error("integration diverged at step {step} (t = {t}): {what}; reduce the step size")]
    IntegrationDiverged { step: usize, t: f64, what: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Coupling and effective detuning both vanish; the dressed-frame mixing
    /// angle has no value there.
    #[error("mixing angle undefined: coupling and effective detuning are both zero")]
    UndefinedAngle,

    /// Dressed-state formulas assume the AC-Stark shifts cancel.
    #[error("dressed-frame analysis requires AC-Stark cancellation (equal Stark shifts)")]
    CancellationRequired,

    #[error("scan aborted: {failed} of {total} grid points failed; first failure: {first}")]
    ScanFailures {
        failed: usize,
        total: usize,
        first: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
