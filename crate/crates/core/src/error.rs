use thiserror::Error;

/// Error type shared by every module in the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// An arm position coincides with the source-mass position, so the
    /// arm–source distance (and everything built on it) is undefined.
    #[error(
        "{which} arm coincides with the source mass position; arm-source distances must be strictly positive"
    )]
    CoincidentPositions { which: &'static str },

    /// A numeric input is outside its documented domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The mode frequency is zero, making the coupling and the coherent
    /// displacement singular.
    #[error("mode frequency is zero; coupling and displacement are singular")]
    SingularMode,

    /// The requested Fock-space truncation cannot hold the predicted
    /// coherent displacement.
    #[error(
        "truncation risk: predicted peak occupation {predicted:.3e} exceeds N/4 = {limit:.3e}; \
         raise the Fock cutoff"
    )]
    TruncationRisk { predicted: f64, limit: f64 },

    /// The evolved state lost norm beyond tolerance, which signals a
    /// numerically unreliable matrix exponential.
    #[error(
        "evolution norm drifted by {drift:.3e} (tolerance {tol:.3e}); \
         raise the Fock cutoff or shorten the time step"
    )]
    NormDrift { drift: f64, tol: f64 },

    /// The mode cutoff is too small for the analytic tail of the radial
    /// integral to be trustworthy.
    #[error(
        "mode cutoff too small: k_max*d = {achieved:.3e} is below the required {required:.3e}; \
         raise k_max to at least {required_k_max:.3e} m^-1"
    )]
    CutoffTooSmall {
        achieved: f64,
        required: f64,
        required_k_max: f64,
    },

    /// Adaptive quadrature exhausted its subdivision budget before reaching
    /// the requested tolerance.
    #[error(
        "quadrature did not converge: estimated error {error:.3e} exceeds target {target:.3e} \
         after {intervals} subdivisions"
    )]
    QuadratureNoConvergence {
        error: f64,
        target: f64,
        intervals: usize,
    },

    /// The requested scenario contradicts the geometry/timing it was given.
    #[error("scenario inconsistent with geometry/timing: {detail}")]
    ScenarioInconsistent { detail: String },

    /// An integration point sits on (or too close to) a source singularity.
    #[error("integrand is singular: {0}")]
    SingularIntegrand(String),
}

/// Coarse error classification for callers that map failures onto process
/// exit codes: bad inputs versus genuine numerical breakdowns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// The inputs themselves are invalid or mutually inconsistent.
    InvalidInput,
    /// The inputs were acceptable but a numerical procedure failed.
    Numerical,
}

impl Error {
    /// Classify this error as an input problem or a numerical failure.
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::CoincidentPositions { .. }
            | Error::InvalidParameter(_)
            | Error::SingularMode
            | Error::ScenarioInconsistent { .. }
            | Error::SingularIntegrand(_) => ErrorKind::InvalidInput,
            Error::TruncationRisk { .. }
            | Error::NormDrift { .. }
            | Error::CutoffTooSmall { .. }
            | Error::QuadratureNoConvergence { .. } => ErrorKind::Numerical,
        }
    }
}
