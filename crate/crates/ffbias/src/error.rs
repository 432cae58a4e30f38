//! Error types shared across the crate.
//!
//! Every fallible public function returns [`Result`]. The variants map onto
//! the CLI exit-code contract:
//!
//! | variant                      | exit code | meaning                                  |
//! |------------------------------|-----------|------------------------------------------|
//! | [`Error::Parse`]             | 2         | malformed polynomial / input text        |
//! | [`Error::Domain`]            | 2         | structurally invalid mathematical input  |
//! | [`Error::Io`], [`Error::Json`] | 2       | input/output problems (files, cache)     |
//! | [`Error::Integrity`]         | 3         | an internal cross-check failed           |
//! | [`Error::Guard`]             | 4         | a resource guard refused the computation |

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced by this crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Text input could not be parsed. `position` is a zero-based byte
    /// offset into the input when one is known.
    #[error("parse error{}: {message}", position.map(|p| format!(" at offset {p}")).unwrap_or_default())]
    Parse {
        /// Description of what went wrong.
        message: String,
        /// Byte offset of the offending token, when known.
        position: Option<usize>,
    },

    /// The input is well-formed but mathematically invalid for the requested
    /// operation (wrong field, non-squarefree modulus, zero divisor, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// An internal consistency check failed. These checks guard results that
    /// are computed twice by independent routes (root-finding residuals,
    /// recurrence validation windows, model/closed-form agreement); a failure
    /// indicates a bug or numerically degenerate input, never a user error.
    #[error("integrity check failed: {0}")]
    Integrity(String),

    /// A resource guard refused to start a computation whose cost estimate
    /// exceeds the configured bound (brute-force enumeration, huge tables).
    #[error("resource guard: {0}")]
    Guard(String),

    /// Underlying I/O failure (cache files, output streams).
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// JSON (de)serialization failure.
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Convenience constructor for parse errors with a known position.
    pub fn parse_at(message: impl Into<String>, position: usize) -> Self {
        Error::Parse {
            message: message.into(),
            position: Some(position),
        }
    }

    /// Convenience constructor for parse errors without a position.
    pub fn parse(message: impl Into<String>) -> Self {
        Error::Parse {
            message: message.into(),
            position: None,
        }
    }

    /// Convenience constructor for [`Error::Domain`].
    pub fn domain(message: impl Into<String>) -> Self {
        Error::Domain(message.into())
    }

    /// Convenience constructor for [`Error::Integrity`].
    pub fn integrity(message: impl Into<String>) -> Self {
        Error::Integrity(message.into())
    }

    /// Convenience constructor for [`Error::Guard`].
    pub fn guard(message: impl Into<String>) -> Self {
        Error::Guard(message.into())
    }

    /// The process exit code associated with this error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::Domain(_) | Error::Io(_) | Error::Json(_) => 2,
            Error::Integrity(_) => 3,
            Error::Guard(_) => 4,
        }
    }
}
