//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("denominator is not invertible in the field")]
    ZeroDenominator,
    #[error("cannot parse scalar literal `{0}`")]
    BadLiteral(String),
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("subspaces live in different ambient spaces ({0} vs {1})")]
    AmbientMismatch(usize, usize),
    #[error("{have} is not contained in {need}")]
    NotContained { have: String, need: String },
    #[error("enumeration budget exceeded: {metric} > {budget} (the space holds {count} subspaces)")]
    BudgetExceeded { metric: u128, budget: u128, count: u128 },
}

#[derive(Debug, Clone, Error)]
pub enum StructureError {
    #[error("tensor shape inconsistent with declared dimension: {0}")]
    ShapeMismatch(String),
    #[error("structure validation failed:\n{0}")]
    Invalid(String),
    #[error("pair is not validated; call validate() first")]
    Unvalidated,
    #[error("operation requires a unit on {0}")]
    MissingUnit(String),
    #[error("operation requires a counit on {0}")]
    MissingCounit(String),
    #[error("operation requires the one-dimensional ground-field structure for H")]
    AmbientNotScalar,
    #[error("{0}")]
    FieldMismatch(String),
}

#[derive(Debug, Clone, Error)]
pub enum SplitError {
    #[error("the two subspaces do not decompose the total space as a direct sum: {0}")]
    NotDirectSum(String),
    #[error("chosen complement is not a subbialgebra: {}", .0.join("; "))]
    NotSubbialgebra(Vec<String>),
    #[error("chosen subspace is not a biideal: {}", .0.join("; "))]
    NotBiideal(Vec<String>),
    #[error("antipode does not preserve the chosen blocks: {0}")]
    AntipodeNotBlockStable(String),
    #[error("grading violated: {}", .0.join("; "))]
    GradingViolated(Vec<String>),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

#[derive(Debug, Clone, Error)]
pub enum HopfError {
    #[error("the pair does not satisfy the bialgebra conditions: {}", .0.join("; "))]
    NotBialgebra(Vec<String>),
    #[error("the supplied antipode of H fails its convolution axiom: {0}")]
    BadAntipode(String),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Split(#[from] SplitError),
}

#[derive(Debug, Clone, Error)]
pub enum DocError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unknown gallery fixture `{0}`")]
    UnknownFixture(String),
    #[error("document does not declare {0}")]
    MissingDeclaration(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Structure(#[from] StructureError),
}
