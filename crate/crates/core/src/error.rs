use num_complex::Complex64;
use thiserror::Error;

/// Failure modes shared by every evaluator in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Γ evaluated at (or within pole tolerance of) 0, −1, −2, …
    #[error("gamma pole at z = {0}")]
    Pole(Complex64),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("convergence error: {0}")]
    Convergence(String),

    #[error("branch error: {0}")]
    Branch(String),

    /// The result magnitude exceeds the f64 range; `log_magnitude` is ln|value|.
    #[error("overflow: ln|value| = {log_magnitude}")]
    Overflow { log_magnitude: f64 },

    /// The Appell F3 kernel was requested outside its bi-disk of convergence.
    #[error("kernel divergence: {0}")]
    KernelDivergence(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn convergence(msg: impl Into<String>) -> Self {
        Error::Convergence(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
