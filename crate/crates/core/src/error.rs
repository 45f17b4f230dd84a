use thiserror::Error;

use crate::trajectory::Trajectory;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A temperature source was evaluated outside the interval it covers.
    #[error("time {t} is outside the temperature domain [{start}, {end}]")]
    Domain { t: f64, start: f64, end: f64 },

    #[error("invalid argument: {0}")]
    Argument(String),

    /// Malformed delimited-text input; `line` is 1-based.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A dynamic phase split into more sub-phases than the engine allows.
    /// The trajectory computed up to that point is kept for diagnosis.
    #[error("dynamic phase {phase} exceeded {limit} sub-phases at t = {time}")]
    MaxSubphases {
        phase: usize,
        limit: usize,
        time: f64,
        partial: Box<Trajectory>,
    },

    #[error("calibration setup: {0}")]
    Setup(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }
}
