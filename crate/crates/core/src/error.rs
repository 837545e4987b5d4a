use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("group order must be at least 1")]
    ZeroOrder,

    #[error("group order {order} exceeds the cap of {cap}")]
    OrderTooLarge { order: u64, cap: u64 },

    #[error("element {element} is out of range for a group of order {order}")]
    ElementOutOfRange { element: u64, order: u64 },

    #[error("invalid group specification: {0}")]
    InvalidSpec(String),

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("matrix with {dimension} rows exceeds the dense cap of {cap}")]
    DenseCapExceeded { dimension: usize, cap: usize },

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("matrix contains a non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("no closed-form theorem covers this group ({0})")]
    UnsupportedFamily(String),

    #[error("malformed matrix dump: {0}")]
    MatrixParse(String),

    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
