use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of a function.
    #[error("domain error: {0}")]
    Domain(String),

    /// Resolutions, windows or other parameters that cannot produce a meaningful result.
    #[error("configuration error: {0}")]
    Config(String),

    #[error("index error: {0}")]
    Index(String),

    /// A phantom or data set violates a structural invariant (e.g. support outside the unit ball).
    #[error("validation error: {0}")]
    Validation(String),

    /// An iterative method failed; `index` identifies the offending item (e.g. the zero number).
    #[error("numerical error at index {index}: {message}")]
    Numerical { index: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
