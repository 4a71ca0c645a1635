use alloc::string::String;
use core::fmt;

/// Errors raised by the engine.
///
/// Every variant names the rule or operation that failed so front ends can
/// surface a machine-readable code (see [`Error::code`]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Two characters were built over incompatible symbol declarations.
    ContextMismatch { symbol: String },
    /// A symbol declaration is malformed.
    InvalidSymbol { name: String, detail: String },
    /// A constructor's data violates an invariant of its variant.
    Validation { rule: &'static str, detail: String },
    /// An operation was applied outside of its domain.
    Domain { op: &'static str, detail: String },
    /// The requested computation is not modeled.
    Unsupported { op: &'static str, detail: String },
}

impl Error {
    pub fn validation(rule: &'static str, detail: impl Into<String>) -> Self {
        Error::Validation { rule, detail: detail.into() }
    }

    pub fn domain(op: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain { op, detail: detail.into() }
    }

    pub fn unsupported(op: &'static str, detail: impl Into<String>) -> Self {
        Error::Unsupported { op, detail: detail.into() }
    }

    /// Stable short code for machine consumption.
    pub fn code(&self) -> &'static str {
        match self {
            Error::ContextMismatch { .. } => "context_mismatch",
            Error::InvalidSymbol { .. } => "invalid_symbol",
            Error::Validation { .. } => "invariant_violation",
            Error::Domain { .. } => "domain_error",
            Error::Unsupported { .. } => "unsupported",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ContextMismatch { symbol } => {
                write!(f, "symbol `{symbol}` is declared differently in the two operands")
            }
            Error::InvalidSymbol { name, detail } => write!(f, "invalid symbol `{name}`: {detail}"),
            Error::Validation { rule, detail } => write!(f, "violates {rule}: {detail}"),
            Error::Domain { op, detail } => write!(f, "{op}: outside domain: {detail}"),
            Error::Unsupported { op, detail } => write!(f, "{op}: unsupported: {detail}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
