use thiserror::Error;

use crate::weight::Weight;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("invalid family: {0}")]
    InvalidFamily(String),

    #[error("{operation} is only defined for osp(1,2l) = B(0,l), got {family}")]
    WrongFamily { operation: &'static str, family: String },

    #[error("{0} is not an element of the 0/1 cube Gamma")]
    NotInGamma(Weight),

    #[error("Gamma requires rank l >= 1, got {0}")]
    EmptyGamma(usize),

    #[error("Weyl group order exceeds cap {cap}")]
    GroupTooLarge { cap: usize },

    #[error("central character with lambda+rho = {0} is not generic weakly atypical")]
    NotGenericWeaklyAtypical(Weight),

    #[error("central character with lambda+rho = {0} is not strongly typical")]
    NotStronglyTypical(Weight),

    #[error("central character with lambda+rho = {0} is atypical")]
    Atypical(Weight),

    #[error("no orbit representative with lambda+rho = (k_1, .., k_{{l-1}}, 0), k_i > 0, for {0}")]
    NoMateRepresentative(Weight),

    #[error("expected ambient {expected}, found {found}")]
    AmbientMismatch { expected: String, found: String },

    #[error("flag entry {weight} has the wrong central character")]
    WrongCharacter { weight: Weight },

    #[error("{0} is not a mate for the given central character")]
    NotAMate(Weight),

    #[error("{0}")]
    InvalidContext(String),

    #[error("operation requires mode {0}")]
    ModeMismatch(&'static str),

    #[error("parse error: {0}")]
    Parse(String),
}
