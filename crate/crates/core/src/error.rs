use crate::rational::{fmt_rat, Rat};
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("profile {profile} violated: {reason}")]
    Profile { profile: String, reason: String },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("{0}")]
    Membership(Box<MembershipFailure>),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("linear program: {0}")]
    Lp(String),

    #[error("instance too large: {0}")]
    TooLarge(String),
}

/// A violated cut constraint.
#[derive(Debug, Clone, Error)]
#[error("{polyhedron} membership failed: cut {shore:?} has value {} < {}", fmt_rat(.value), fmt_rat(.rhs))]
pub struct MembershipFailure {
    pub polyhedron: String,
    pub shore: Vec<usize>,
    pub value: Rat,
    pub rhs: Rat,
}

impl Error {
    /// Process exit code used by the command-line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Verification(_) => 1,
            _ => 2,
        }
    }
}
