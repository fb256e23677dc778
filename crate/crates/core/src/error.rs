use thiserror::Error;

pub type Result<T> = std::result::Result<T, LabError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LabError {
    #[error("pole: {0}")]
    Pole(String),
    #[error("outside supported domain: {0}")]
    Domain(String),
    #[error("empty grid: need at least 2 grid points, got {0}")]
    EmptyGrid(usize),
    #[error("isotropic vector: formal norm is zero")]
    IsotropicVector,
    #[error("zero cross-section area: barycenter undefined")]
    ZeroArea,
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}
