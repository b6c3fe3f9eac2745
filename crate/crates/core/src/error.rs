use thiserror::Error;

use crate::milnor::IsolationCertificate;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("polynomial is not homogeneous: monomial {monomial} has weighted degree {found}, expected {expected}")]
    Inhomogeneous {
        monomial: String,
        found: u64,
        expected: u64,
    },

    #[error("weight vectors differ: {left:?} vs {right:?}")]
    WeightMismatch { left: Vec<u32>, right: Vec<u32> },

    #[error("invalid weights {weights:?}: {reason}")]
    InvalidWeights { weights: Vec<u32>, reason: String },

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: u64, found: u64 },

    #[error("the zero polynomial has no Jacobian algebra")]
    ZeroPolynomial,

    #[error("no isolated singularity at the origin: {}", .0.summary())]
    NotIsolated(Box<IsolationCertificate>),

    #[error("matrix is not invertible")]
    NotInvertible,

    #[error("matrix entry ({row}, {col}) mixes variables of weights {row_weight} and {col_weight}")]
    WeightIncompatible {
        row: usize,
        col: usize,
        row_weight: u32,
        col_weight: u32,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code for the command-line front end.
    ///
    /// 1 for usage errors, including polynomial text that does not parse.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Inconsistency(_) => 3,
            Error::Parse { .. } | Error::InvalidArgument(_) | Error::Io(_) | Error::Json(_) => 1,
            _ => 2,
        }
    }

    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
