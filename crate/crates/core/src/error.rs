use thiserror::Error;

use crate::algebra::Kind;
use crate::scalar::HalfInt;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} is not valid for generator {kind}")]
    IndexDomain { kind: Kind, index: HalfInt },

    #[error("argument is not parity-homogeneous: {0}")]
    Homogeneity(String),

    #[error("r is not super-skew: {0}")]
    Skewness(String),

    #[error("r must be even for this operation")]
    OddR,

    #[error("degree-zero derivations have no L[0] anchor")]
    DegreeZero,

    #[error("inconsistent window: {0}")]
    Window(String),

    /// `position` is a 1-based character offset into the parsed text.
    #[error("parse error at character {position}: {message}")]
    Parse { position: usize, message: String },
}
