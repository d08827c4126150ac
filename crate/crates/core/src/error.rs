use alloc::string::String;
use alloc::vec::Vec;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("metric is not symmetric positive definite")]
    NotPositiveDefinite,
    #[error("metric volume factor sqrt(det g) is not exact in this scalar backend")]
    IrrationalVolume,
    #[error("Jacobi identity fails on basis triples {0:?}")]
    JacobiFailure(Vec<(usize, usize, usize)>),
    #[error("matrix is singular")]
    Singular,
    #[error("parameter t must be nonzero")]
    ZeroT,
    #[error("degenerate branch {branch}: {reason}")]
    DegenerateBranch { branch: u8, reason: String },
    #[error("branch id {0} is outside 1..=17")]
    UnknownBranch(u8),
    #[error("operation needs an orthonormal basis (identity metric)")]
    NotOrthonormal,
    #[error("no isomorphism found: {0}")]
    NoIsomorphism(String),
}
