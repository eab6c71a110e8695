//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("evaluation at z = 0 is not defined for Laurent polynomials")]
    ZeroArgument,

    #[error("total zero multiplicity {0} is odd; a prepared Laurent polynomial needs an even count")]
    OddDegree(usize),

    #[error("zero at the origin is not allowed in a Laurent polynomial spectrum")]
    ZeroRoot,

    #[error("requested exponent {requested} exceeds the declared resolution {declared}")]
    ResolutionExceeded { requested: i64, declared: i64 },

    #[error("argument at distance {dist:.3e} from the support (collar {eps:.3e})")]
    SupportCollision { dist: f64, eps: f64 },

    #[error("quasidefiniteness violated: principal minor pivot {0} vanishes")]
    QuasidefiniteViolation(usize),

    #[error("index {index} out of range (size {size})")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("argument lies in the forbidden disk of the series route (|z| = {modulus:.6})")]
    DomainViolation { modulus: f64 },

    #[error("series truncation tail bound {bound:.3e} exceeds tolerance {tol:.3e}")]
    TailTooLarge { bound: f64, tol: f64 },

    #[error("singular leading block in quasideterminant (|det| = {0:.3e})")]
    SingularLeadingBlock(f64),

    #[error("incompatible truncations: {0}")]
    IncompatibleTruncations(String),

    #[error("unsupported operation: {0}")]
    Unsupported(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
