//! Error type shared by all modules.

use std::fmt;

/// How a failure should be reported at a process boundary.
///
/// `Precondition` maps to caller mistakes (bad input, violated contract),
/// `Refused` to computations declined by a size or cutoff guard, and
/// `Internal` to invariant violations that should never occur: an
/// `Internal` error from a theory-backed identity means the build is
/// defective, not the input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Category {
    Precondition,
    Refused,
    Internal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A number expected to be prime is not.
    NonPrime(u64),
    /// Extension modulus rejected: wrong degree, not monic, or reducible.
    BadModulus(String),
    /// Operands belong to different fields.
    FieldMismatch,
    /// Zero input where a nonzero value is required.
    ZeroInput(&'static str),
    /// Division by zero (field element or polynomial).
    DivisionByZero,
    /// Operation is not defined over this coefficient field.
    UnsupportedField(&'static str),
    /// Text input could not be parsed; byte offset annotated.
    Parse { pos: usize, msg: String },
    /// A precondition other than the above was violated.
    Domain(String),
    /// The function violates the hypotheses of the theorem being applied.
    Exceptional(String),
    /// An orbit invariant needed for the requested bound is unknown at the
    /// configured cutoff; the bound is refused rather than guessed.
    UnknownInvariant(String),
    /// Computation declined by a size guard (degree or factoring limits).
    Refused(String),
    /// An identity guaranteed by the underlying theory failed to hold.
    Internal(String),
}

impl Error {
    pub fn category(&self) -> Category {
        match self {
            Error::UnknownInvariant(_) | Error::Refused(_) => Category::Refused,
            Error::Internal(_) => Category::Internal,
            _ => Category::Precondition,
        }
    }

    pub fn parse(pos: usize, msg: impl Into<String>) -> Error {
        Error::Parse { pos, msg: msg.into() }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonPrime(p) => write!(f, "{p} is not prime"),
            Error::BadModulus(m) => write!(f, "invalid extension modulus: {m}"),
            Error::FieldMismatch => write!(f, "operands belong to different fields"),
            Error::ZeroInput(what) => write!(f, "zero input: {what}"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::UnsupportedField(op) => write!(f, "operation not supported over this field: {op}"),
            Error::Parse { pos, msg } => write!(f, "parse error at byte {pos}: {msg}"),
            Error::Domain(msg) => write!(f, "{msg}"),
            Error::Exceptional(tag) => write!(f, "function is an excluded exceptional shape: {tag}"),
            Error::UnknownInvariant(msg) => write!(f, "invariant unknown at cutoff: {msg}"),
            Error::Refused(msg) => write!(f, "computation refused: {msg}"),
            Error::Internal(msg) => write!(f, "internal invariant violation: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
