use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Every generator was zero, so the subgroup they span is trivial.
    #[error("degenerate subgroup: all generators are zero")]
    DegenerateSubgroup,
    #[error("truncation cap mismatch: {left} vs {right}")]
    CapMismatch { left: usize, right: usize },
    #[error("degree out of range: {degree} > cap {cap}")]
    DegreeOutOfRange { degree: usize, cap: usize },
    #[error("a truncated series needs at least one coefficient")]
    EmptySeries,
    #[error("oracle size limit: j = {j} exceeds {limit}")]
    OracleSizeLimit { j: u32, limit: u32 },
    #[error("invalid parameters m = {m}, n = {n}: need 1 <= m < n")]
    InvalidParams { m: u32, n: u32 },
    /// `(2n+1)!` times a Chern coefficient failed to be an integer.
    #[error("integrality violation at (m, n) = ({m}, {n}), generator {k}")]
    IntegralityViolation { m: u32, n: u32, k: u32 },
}
