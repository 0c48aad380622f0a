//! Error type shared by every module of the engine.

use thiserror::Error;

/// Result alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Failures raised by the numerical kernels, solvers and pipeline.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Argument outside the mathematical domain of a function.
    #[error("domain error in {function}: {detail}")]
    Domain {
        function: &'static str,
        detail: String,
    },

    /// A configuration or specification value violates its invariant.
    #[error("invalid parameter `{name}`: {detail}")]
    InvalidParameter { name: &'static str, detail: String },

    /// The (A, B) pair cannot be realised by any classifier under (P, Q).
    #[error("infeasible probability pair: {violation}")]
    Infeasible { violation: String },

    /// A monotone root search could not enclose its target.
    #[error("could not bracket {what}: last bracket [{lo}, {hi}] with values ({f_lo}, {f_hi}), target {target}")]
    Bracket {
        what: &'static str,
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
        target: f64,
    },

    /// An iterative method ran out of budget.
    #[error("{what} did not converge after {iterations} iterations (residual {residual:e})")]
    NoConvergence {
        what: &'static str,
        iterations: usize,
        residual: f64,
    },

    /// A solver failure annotated with the radius being tested.
    #[error("solver failed at radius {rho}: {source}")]
    AtRadius { rho: f64, source: Box<Error> },

    /// Reading or writing records failed.
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn domain(function: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain {
            function,
            detail: detail.into(),
        }
    }

    pub(crate) fn invalid(name: &'static str, detail: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            detail: detail.into(),
        }
    }

    /// True for infeasible probability pairs (CLI exit code 2).
    pub fn is_infeasible(&self) -> bool {
        match self {
            Error::Infeasible { .. } => true,
            Error::AtRadius { source, .. } => source.is_infeasible(),
            _ => false,
        }
    }

    /// True for bracket and convergence failures (CLI exit code 3).
    pub fn is_solver_failure(&self) -> bool {
        match self {
            Error::Bracket { .. } | Error::NoConvergence { .. } => true,
            Error::AtRadius { source, .. } => source.is_solver_failure(),
            _ => false,
        }
    }

    /// Short machine-readable tag for error records.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Domain { .. } => "domain",
            Error::InvalidParameter { .. } => "invalid_parameter",
            Error::Infeasible { .. } => "infeasible",
            Error::Bracket { .. } => "bracket",
            Error::NoConvergence { .. } => "no_convergence",
            Error::AtRadius { source, .. } => source.kind(),
            Error::Io(_) => "io",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Io(e.to_string())
    }
}
