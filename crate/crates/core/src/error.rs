use thiserror::Error;

/// Errors raised by the positroid machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Structural validation failure. `index` is the 1-based position of the
    /// first offending entry when one can be named.
    #[error("validation failed{}: {message}", index.map(|i| format!(" at index {i}")).unwrap_or_default())]
    Validation {
        index: Option<usize>,
        message: String,
    },

    #[error("positroid is disconnected (components {components:?}); use decompose_direct_sum and ehrhart_product")]
    Disconnected { components: Vec<Vec<usize>> },

    /// A mathematical invariant that must hold was observed to fail.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn validation(index: Option<usize>, msg: impl Into<String>) -> Self {
        Error::Validation {
            index,
            message: msg.into(),
        }
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
