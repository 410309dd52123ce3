use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("group order {order} exceeds the order cap {cap}")]
    OrderCapExceeded { order: u64, cap: u64 },

    #[error("group is abelian: the commuting conjugacy class graph has no vertices")]
    AbelianGroup,

    #[error("connected component containing vertex {vertex} is not complete")]
    NotCliqueUnion { vertex: usize },

    #[error("clique structure not realizable: {0}")]
    NotRealizable(String),

    #[error("central quotient is neither Z_p x Z_p nor dihedral")]
    UnknownQuotient,

    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("{matrix} spectrum sums to {spectrum_sum}, trace is {trace}")]
    TraceMismatch {
        matrix: &'static str,
        spectrum_sum: String,
        trace: i64,
    },

    #[error("no family-level closed form for {0}")]
    UnsupportedFamily(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
