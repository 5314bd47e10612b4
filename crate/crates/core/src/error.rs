//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced by kernel construction, quadrature, solvers and the grid
/// minimizer.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An input violated a documented precondition.
    #[error("domain error: {0}")]
    Domain(String),

    /// A quadrature or iteration failed to reach the requested tolerance.
    /// Carries the tolerance that was actually achieved.
    #[error("numerical error: {context} (achieved tolerance {achieved:e}, requested {requested:e})")]
    Numerical {
        context: String,
        achieved: f64,
        requested: f64,
    },

    /// The contact-angle root finder could not bracket a root.
    #[error("solver error: no sign change on the interior grid; residual at endpoints: f({lo}) = {f_lo}, f({hi}) = {f_hi}")]
    NoBracket { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },

    /// Contact-angle measurement on a droplet that does not touch the wall.
    #[error("no contact: droplet does not touch the container boundary")]
    NoContact,

    /// Malformed snapshot or trace data.
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
