use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Failures reported by the workbench. Every variant is a domain error
/// (exit code 1 at the command line) except where noted.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("no interior minimum: {0}")]
    NoInteriorMinimum(String),

    #[error("no classically allowed region at E = {energy} (minimum of U is {u_min})")]
    NoAllowedRegion { energy: f64, u_min: f64 },

    #[error("energy {energy} lies below the centrifugal barrier (negative discriminant {discriminant})")]
    BelowCentrifugalBarrier { energy: f64, discriminant: f64 },

    #[error("no outer turning point at E = {energy}: the motion is unbound")]
    Unbound { energy: f64 },

    #[error("ambiguous turning points at E = {energy}: found roots {roots:?}")]
    AmbiguousRoots { energy: f64, roots: Vec<f64> },

    #[error("complex phase: U < 0 on [{lo}, {hi}]")]
    ComplexPhase { lo: f64, hi: f64 },

    #[error("classically allowed at r = {r}; use the oscillatory radial solution")]
    ClassicallyAllowed { r: f64 },

    #[error("integral diverges: {0}")]
    Divergent(String),

    #[error("quadrature did not converge after {panels} panels (partial value {partial}, error estimate {error})")]
    NonConvergence { partial: f64, error: f64, panels: usize },

    #[error("no bracketing interval found: {0}")]
    NoBracket(String),

    #[error("solver did not converge after {iterations} iterations (last iterate {last})")]
    NotConverged { iterations: usize, last: f64 },

    #[error("wavefunction is not normalizable: {0}")]
    NotNormalizable(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// True for errors caused by malformed user input rather than physics.
    pub fn is_usage(&self) -> bool {
        matches!(self, Error::Config(_))
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
