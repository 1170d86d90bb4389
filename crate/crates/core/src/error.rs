use std::io;

use thiserror::Error;

/// Errors raised across the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{op}: {reason}")]
    Domain { op: &'static str, reason: String },

    #[error("line {line}: cannot parse `{token}` as a decimal number")]
    MalformedLine { line: usize, token: String },

    #[error("line {line}: ordinate {value} is not above the previous one")]
    NonMonotone { line: usize, value: f64 },

    #[error("zero table contains no ordinates")]
    Empty,

    #[error("zero index {index} outside table range {first}..={last}")]
    IndexOutOfRange { index: u64, first: u64, last: u64 },

    #[error("no sign change of 0.28 - eps(t) in [{lo:e}, {hi:e}]")]
    NoSignChange { lo: f64, hi: f64 },

    #[error("{count} sign changes of 0.28 - eps(t) in [{lo:e}, {hi:e}]")]
    MultipleSignChanges { count: usize, lo: f64, hi: f64 },

    #[error("quadrature did not converge (best {best:e} +/- {abs_error:e})")]
    NoConvergence { best: f64, abs_error: f64 },

    #[error("relative tolerance {0:e} outside (1e-12, 1e-2)")]
    InvalidTolerance(f64),

    #[error("region criterion has no zero source: {0}")]
    SourceMissing(&'static str),

    #[error("unknown preset `{0}`")]
    UnknownPreset(String),

    #[error("write failed: {0}")]
    SinkWrite(#[from] io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(op: &'static str, reason: impl Into<String>) -> Error {
    Error::Domain { op, reason: reason.into() }
}
