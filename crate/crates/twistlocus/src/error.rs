use thiserror::Error;

/// Crate-wide error type. Variants map one-to-one onto the failure modes of
/// the numeric and combinatorial operations; the CLI folds them into exit
/// codes (2 for domain errors, 3 for numerical failures).
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Parameters degenerate the construction (e.g. `t = 0` in a generator
    /// image).
    #[error("degenerate parameter: {0}")]
    DegenerateParameter(String),

    /// A formula has a pole at the requested parameter (e.g. the
    /// diagonalizing conjugation at `t = 1`).
    #[error("pole at parameter: {0}")]
    PoleAtParameter(String),

    /// The point does not satisfy the defining polynomial to the required
    /// residual, so variety-only operations refuse it.
    #[error("not on the representation variety: {0}")]
    NotOnVariety(String),

    /// `m` in `{0, -1}` or `n = 0`: a torus knot, outside this toolkit.
    #[error("invalid knot parameters: {0}")]
    InvalidKnot(String),

    /// A scan found no root in the searched range.
    #[error("no root found: {0}")]
    NoRootFound(String),

    /// Argument outside the documented domain of the operation.
    #[error("out of range: {0}")]
    OutOfRange(String),

    /// A sign change predicted by the bracket construction was not observed.
    #[error("bracket failure: {0}")]
    BracketFailure(String),

    /// Root classification disagrees with the existence guarantees.
    #[error("classification mismatch: {0}")]
    ClassificationMismatch(String),

    /// No starting root of the required type exists for the requested branch.
    #[error("seed failure: {0}")]
    SeedFailure(String),

    /// Continuation lost the root (collision or failed solve).
    #[error("continuation stall: {0}")]
    ContinuationStall(String),

    /// Phase steps could not be brought under the unwrap threshold before the
    /// refinement floor.
    #[error("unwrap violation: {0}")]
    UnwrapViolation(String),

    /// Too few samples in the tail window for a fit.
    #[error("insufficient tail: {0}")]
    InsufficientTail(String),

    /// An iterative estimate failed its convergence residual.
    #[error("not converged: {0}")]
    NotConverged(String),

    /// A quotient with vanishing denominator was requested.
    #[error("division by zero: {0}")]
    DivisionByZero(String),

    /// The operation is only specified for the worked parameter case.
    #[error("outside the worked case: {0}")]
    OutOfCase(String),
}

pub type Result<T> = std::result::Result<T, Error>;
