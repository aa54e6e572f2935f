use thiserror::Error;

use crate::lie_core::Family;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: Family, rank: usize },

    #[error("node {node} out of range for a rank-{rank} diagram")]
    NodeOutOfRange { node: usize, rank: usize },

    #[error("{op} requires a classical type, got {ty}")]
    NotClassical { op: &'static str, ty: String },

    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("more than one affine factor in expression")]
    MultipleAffine,

    #[error("expression describes the trivial group")]
    EmptyExpression,

    #[error("unknown table `{0}`")]
    UnknownTable(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An internal identity failed. Always a bug in this crate.
    #[error("consistency failure: {0}")]
    Consistency(String),
}

macro_rules! ensure_consistent {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err($crate::error::Error::Consistency(format!($($arg)+)));
        }
    };
}
pub(crate) use ensure_consistent;
