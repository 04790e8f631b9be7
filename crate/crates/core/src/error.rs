use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("numeric error: {0}")]
    Numeric(String),
    #[error("invalid region: {0}")]
    Structure(String),
    #[error("non-transversal contact with the ball boundary")]
    Transversality,
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("region is a ball within tolerance (lambda = {0:e})")]
    NearBall(f64),
    #[error("singular parameter: {0}")]
    Singular(String),
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
