use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("temperature must be positive, got {0} K")]
    NonPositiveTemperature(f64),

    #[error("{name} must be {requirement}, got {value}")]
    Domain {
        name: &'static str,
        requirement: &'static str,
        value: f64,
    },

    #[error("Bloch vector norm {0} exceeds 1")]
    BlochNormExceeded(f64),

    #[error("closed-form eigenvalues need a pure state (|P| = 1), got |P| = {0}; use hermitian_eigenvalues")]
    NotPure(f64),

    #[error("invalid density matrix: {0}")]
    InvalidDensityMatrix(String),

    #[error("no solution: {0}")]
    NoSolution(String),

    #[error("the phonon channel is a direct rate and has no exponential correlation")]
    UnsupportedChannel,

    #[error("simulation plan rejected: {reason}; need at least {required_steps} steps")]
    PlanRejected {
        reason: String,
        required_steps: usize,
    },

    #[error("degenerate statistics at t = {time}: zero standard error with deviation {deviation}")]
    DegenerateStatistics { time: f64, deviation: f64 },

    #[error("time grids differ between simulation and analytic comparison")]
    GridMismatch,

    #[error("configuration error: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub(crate) fn require(
    ok: bool,
    name: &'static str,
    requirement: &'static str,
    value: f64,
) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Domain {
            name,
            requirement,
            value,
        })
    }
}
