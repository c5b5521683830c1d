use crate::quadrature::QuadratureResult;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors shared across the library.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// An argument lies outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// The requested tolerance was not reached within the evaluation budget.
    /// The best estimate obtained so far is carried along.
    #[error("quadrature did not converge: best estimate {} (abs_err {}, {} evaluations)",
            best.value, best.abs_err, best.evaluations)]
    QuadratureConvergence { best: QuadratureResult },

    /// The integrand produced NaN or an infinity at a quadrature node.
    #[error("integrand returned a non-finite value at x = {x}")]
    NonFiniteIntegrand { x: f64 },

    /// Invalid tolerance, options, or configuration values.
    #[error("invalid configuration: {0}")]
    Config(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }
}
