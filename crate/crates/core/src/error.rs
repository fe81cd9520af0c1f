use thiserror::Error;

use crate::numerics::HalfInt;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Sum of a rational and a rational multiple of π.
    #[error("cannot add values of different π degree ({0} and {1})")]
    MixedPiDegree(u8, u8),

    #[error("coefficient vector is identically zero")]
    AllZero,

    #[error("invalid quantum numbers l = {l}, m = {m}: {reason}")]
    InvalidPair {
        l: HalfInt,
        m: HalfInt,
        reason: &'static str,
    },

    #[error("functions have different |m| ({0} and {1})")]
    MixedM(HalfInt, HalfInt),

    #[error("{0}")]
    Domain(String),

    #[error("malformed Legendre function: {0}")]
    Malformed(String),

    #[error("coefficient lists are not proportional")]
    NotProportional,

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },
}
