use thiserror::Error;

/// Failures raised by the distribution functions and their numerical kernels.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument or parameter lies outside its admissible domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// An iterative method hit its iteration or subdivision cap.
    #[error("{method} failed to converge after {iterations} iterations")]
    Convergence {
        method: &'static str,
        iterations: usize,
    },

    /// A probability was requested above the total mass of a defective distribution.
    #[error("probability {requested} exceeds the total mass {mass} of the distribution")]
    MassExceeded { requested: f64, mass: f64 },

    #[error("overflow: {0}")]
    Overflow(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A parameter file could not be parsed or lacks the requested set.
    #[error("config error: {0}")]
    Config(String),

    #[error("I/O error on {path}: {message}")]
    Io { path: String, message: String },
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Domain(_)
            | Error::Precondition(_)
            | Error::Unsupported(_)
            | Error::Config(_) => 2,
            Error::Convergence { .. } | Error::MassExceeded { .. } | Error::Overflow(_) => 3,
            Error::Io { .. } => 4,
        }
    }

    pub(crate) fn io(path: &std::path::Path, err: std::io::Error) -> Self {
        Error::Io {
            path: path.display().to_string(),
            message: err.to_string(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
