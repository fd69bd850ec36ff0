use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("duplicate vertex id `{0}`")]
    DuplicateVertex(String),
    #[error("edge references unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("self-loop on vertex `{0}`")]
    SelfLoop(String),
    #[error("edge {0}-{1} has zero multiplicity")]
    ZeroMultiplicity(String, String),
    #[error("vertex `{0}` has weight 0; weights are positive")]
    ZeroWeight(String),
    #[error("dual graph is disconnected")]
    Disconnected,
    #[error("intersection matrix is not negative definite (leading minor of order {minor} is not positive)")]
    NotNegativeDefinite { minor: usize },
    #[error("vertex `{vertex}` has weight {weight}; a (-1)-curve is only allowed as the single smooth blow-up vertex")]
    IllegalWeight { vertex: String, weight: u64 },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("boundary component `{name}` has coefficient {coeff} outside [0, 1]")]
    CoefficientOutOfRange { name: String, coeff: String },
    #[error("negative entry {value} at position {index}")]
    NegativeEntry { index: usize, value: String },
    #[error("pair is not log-terminal at the point")]
    NotLogTerminal,
    #[error("M^2 = {0} is not positive; M must be nef and big")]
    InvalidNef(String),
    #[error("min M.C = {0} is negative; M must be nef")]
    NegativeIntersection(String),
    #[error("chain weight {0} is below 2")]
    WeightTooSmall(u64),
    #[error("active-set search supports at most {cap} exceptional curves, got {n}")]
    ActiveSetLimit { n: usize, cap: usize },
}
