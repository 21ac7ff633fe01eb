use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Failure modes of the evaluation routines and solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("order {0} outside the admissible range")]
    InvalidOrder(f64),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("series suffers catastrophic cancellation (rounding estimate {rounding:e} exceeds tolerance {tol:e})")]
    CatastrophicCancellation { rounding: f64, tol: f64 },

    #[error("asymptotic expansion diverges at x = {x} (leading term {leading:e})")]
    DivergentRegime { x: f64, leading: f64 },

    #[error("quadrature did not reach tolerance {tol:e} (error estimate {estimate:e} after {evaluations} evaluations)")]
    QuadratureFailure {
        tol: f64,
        estimate: f64,
        evaluations: usize,
    },

    #[error("no algorithm reached tolerance {tol:e} at x = {x} (best estimate {best:e})")]
    AccuracyUnreachable { x: f64, tol: f64, best: f64 },

    #[error("grid too coarse: discretisation error estimate {estimate:e} exceeds tolerance {tol:e}")]
    GridTooCoarse { estimate: f64, tol: f64 },

    #[error("integrand is not decaying on the probe horizon (t = {horizon})")]
    TailUnbounded { horizon: f64 },

    #[error("unsupported order p = {0}: 1/p must be an even integer")]
    UnsupportedOrder(f64),

    #[error("singular Volterra step: 1 + w0 = {0}")]
    SingularSystem(f64),

    #[error("invalid curve: {0}")]
    InvalidCurve(String),
}
