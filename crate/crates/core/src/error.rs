use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong in the library.
///
/// The first group are caller errors (bad input); the last two indicate an
/// internal invariant failed and should never surface on valid input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("vector v is zero")]
    ZeroVector,
    #[error("digit count q must be at least 2, got {0}")]
    BadQ(String),
    #[error("matrix is not expanding")]
    NotExpanding,
    #[error("columns are linearly dependent")]
    RankDeficient,
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not unimodular (det = {0})")]
    NotUnimodular(String),
    #[error("Krylov sequence has rank {rank} < {dim}")]
    NotFullRank { rank: usize, dim: usize },
    #[error("Krylov sequence has full rank {0}; use the companion conjugation")]
    FullRank(usize),
    #[error("q = {q} does not divide {value}")]
    NotDivisible { q: u64, value: String },
    #[error("gcd(q, det M1) = 1, no mask-zero witness exists")]
    GcdOne,
    #[error("duplicate frequency in candidate spectrum")]
    DuplicateFrequency,
    #[error("(M*)^-1 failed to contract within {0} iterations")]
    NonConvergent(usize),
    #[error("{count} candidates exceeds the cap of {cap}")]
    TooLarge { count: usize, cap: usize },
    #[error("internal rank assertion failed: expected {expected}, found {found}")]
    InternalRankError { expected: usize, found: usize },
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors that mean "the library has a bug", as opposed to bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::InternalRankError { .. } | Error::Internal(_))
    }
}
