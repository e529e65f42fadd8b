//! Error taxonomy shared across the workspace.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Ill-formed setup: window mismatches, unknown rule tags, inconsistent
    /// parameter combinations.
    #[error("configuration error: {0}")]
    Config(String),

    /// Arguments outside an operation's domain (`a <= 0`, `n` out of range,
    /// too few samples, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// An iterative solver exhausted its cap without meeting its tolerance.
    #[error("did not converge: {0}")]
    NonConvergence(String),

    /// A measure (or discretized minimax value) whose I-functional vanishes
    /// certifies nothing; refusing beats dividing by it.
    #[error("degenerate measure: {0}")]
    DegenerateMeasure(String),

    /// A step multiplier failed validation; the message itemizes the failures.
    #[error("invalid multiplier: {0}")]
    InvalidMultiplier(String),

    /// A hypothesis the requested estimate relies on does not hold for the
    /// supplied inputs (monotonicity of the multiplier, the (B_alpha)
    /// condition, ...).
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
}

impl Error {
    /// Process exit code for CLI surfaces: solver failures are 3, every other
    /// error is a configuration/usage problem and maps to 2. (Exit code 1 is
    /// reserved for "the computation ran but an inequality check failed".)
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NonConvergence(_) => 3,
            _ => 2,
        }
    }
}
