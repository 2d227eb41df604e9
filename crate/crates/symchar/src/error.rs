//! Error type shared by all modules, with the exit-code classification
//! used by the command-line tool.

use thiserror::Error;

use crate::symfunc::Basis;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Construction rejected: parts must be positive and weakly decreasing.
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),

    /// The bracketed text form could not be parsed.
    #[error("cannot parse partition from {0:?}; expected e.g. \"[6,2,2]\" or \"[]\"")]
    ParsePartition(String),

    /// `pad(core, n)` needs `n - |core| >= core_1` (and `n >= |core|`).
    #[error("padding of {core} to size {n} is undefined")]
    UndefinedPadding { core: String, n: i64 },

    /// The operation does not handle this basis tag.
    #[error("operation does not support the {0} basis")]
    UnsupportedBasis(Basis),

    /// Adjoint plethysm was asked for fewer degrees than its input carries.
    #[error("truncation degree {degree} is smaller than deg(f) = {needed}")]
    TruncationTooSmall { degree: usize, needed: usize },

    /// A character value was requested for |lambda| != |rho|.
    #[error("size mismatch: |{lambda}| != |{rho}|")]
    SizeMismatch { lambda: String, rho: String },

    /// A multiplicity came out non-integral or negative; this indicates a bug,
    /// not bad input.
    #[error("multiplicity must be a non-negative integer, got {0}")]
    NonIntegralMultiplicity(String),

    /// A structure constant came out negative; internal consistency failure.
    #[error("structure constant must be non-negative, got {0} at {1}")]
    NegativeCoefficient(String, String),

    /// A coefficient asserted integral by construction had a denominator.
    #[error("coefficient expected to be an integer, got {0} at {1}")]
    NonIntegralCoefficient(String, String),

    /// A value certified as stable changed inside the verification window.
    #[error("stability violation: {0}")]
    StabilityViolation(String),

    /// Invalid parameters handed to an operation (reported before any output).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Exit code for the CLI: 2 = parse/validation, 3 = mathematically
    /// undefined request, 4 = internal consistency failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidPartition(_)
            | Error::ParsePartition(_)
            | Error::InvalidArgument(_)
            | Error::Io(_) => 2,
            Error::UndefinedPadding { .. }
            | Error::UnsupportedBasis(_)
            | Error::TruncationTooSmall { .. }
            | Error::SizeMismatch { .. } => 3,
            Error::NonIntegralMultiplicity(_)
            | Error::NegativeCoefficient(_, _)
            | Error::NonIntegralCoefficient(_, _)
            | Error::StabilityViolation(_) => 4,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
