use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed text input, with 1-based line and column.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("invalid input: {0}")]
    Input(String),

    #[error("relation is not homogeneous: {0}")]
    NotHomogeneous(String),

    /// A computation needed data beyond the degree or homological window.
    #[error("window exceeded: {0}")]
    Window(String),

    /// The request is outside what can be certified here (missing AS
    /// certification, infinite projective dimension, ...).
    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("hypothesis not met: {0}")]
    Hypothesis(String),

    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    pub fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, column, message: message.into() }
    }

    /// Shifts the line number of a parse error (used when a polynomial is
    /// parsed from one line of a larger file).
    pub fn at_line(self, line: usize, column_offset: usize) -> Self {
        match self {
            Error::Parse { column, message, .. } => Error::Parse { line, column: column + column_offset, message },
            other => other,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
