use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("excluded parameter {value} for family {family}")]
    ExcludedParameter { family: &'static str, value: String },
    #[error("not a quadratic polynomial (leading coefficient is zero)")]
    NotQuadratic,
    #[error("point {0} is not on the curve")]
    InvalidPoint(String),
    #[error("enumeration budget exceeded: field of size {0}")]
    Budget(u64),
    #[error("precision mismatch: {0}")]
    Precision(String),
    #[error("singular branch: {0}")]
    SingularBranch(String),
    #[error("inconsistent zero inventory: {found} known zeros exceed bound {bound}")]
    Inconsistent { found: usize, bound: usize },
    #[error("cannot parse {0:?}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
