use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("pole: denominator vanishes under the assignment ({0})")]
    Pole(String),
    #[error("genericity violated: q may not be specialized to {0}")]
    Genericity(String),
    #[error("arity mismatch: {0}")]
    Arity(String),
    #[error("position out of range: {0}")]
    Position(String),
    #[error("Yang-Baxter residual is nonzero at {nonzero} entries; first witness {witness}")]
    NotYangBaxter { nonzero: usize, witness: String },
    #[error("not a symmetry: {0}")]
    NotSymmetry(String),
    #[error("not skew-invertible: the defining linear system is singular")]
    NotSkewInvertible,
    #[error("bi-rank probe failed: {0}")]
    Birank(String),
    #[error("resource cap exceeded: {0}")]
    Resource(String),
    #[error("not invertible: {0}")]
    Inversion(String),
    #[error("zero vector not allowed")]
    ZeroVector,
    #[error("cannot normalize: leading coefficient is zero")]
    Normalization,
    #[error("requested order {requested} exceeds the exact window of truncation {truncation}")]
    InsufficientTruncation { requested: usize, truncation: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Internal(String),
}
