use thiserror::Error;

/// Errors raised while constructing or combining the objects of this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("labels and probabilities differ in length ({labels} labels, {probs} probabilities)")]
    LengthMismatch { labels: usize, probs: usize },
    #[error("probability at index {index} is not a finite number ({value})")]
    NonFiniteMass { index: usize, value: f64 },
    #[error("probability at index {index} is negative ({value})")]
    NegativeMass { index: usize, value: f64 },
    #[error("probabilities sum to {sum}, expected 1 within 1e-9")]
    NotNormalized { sum: f64 },
    #[error("duplicate outcome label {0}")]
    DuplicateLabel(String),
    #[error("outcome space must contain at least one outcome")]
    EmptySpace,
    #[error("probability {0} lies outside [0, 1]")]
    ProbabilityOutOfRange(f64),
    #[error("product space would hold {size} outcomes, cap is {cap}")]
    ProductTooLarge { size: u128, cap: usize },
    #[error("product of zero components")]
    EmptyProduct,
    #[error("event index {index} out of bounds for a space of {len} outcomes")]
    IndexOutOfBounds { index: usize, len: usize },
    #[error("event index {0} listed twice")]
    DuplicateIndex(usize),
    #[error("distributions are defined over different outcome spaces")]
    SpaceMismatch,
    #[error("distribution is not fully supported: outcome {index} has zero probability")]
    NotFullySupported { index: usize },
    #[error("logarithm base must be a finite number greater than 1, got {0}")]
    InvalidBase(f64),

    #[error("baseline probability p = {0} must satisfy 0 < p < 1/2")]
    POutOfRange(f64),
    #[error("informed probability q = {0} must lie in [0, 1]")]
    QOutOfRange(f64),
    #[error("target holds {target} of {space} outcomes, must be strictly fewer than half")]
    TargetTooLarge { target: usize, space: usize },

    #[error("graph needs at least two vertices, got {0}")]
    TooFewVertices(usize),
    #[error("graph has {n} vertices, cap is {cap}")]
    TooManyVertices { n: usize, cap: usize },
    #[error("edge ({u}, {v}) references a vertex outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge ({0}, {1}) listed twice")]
    DuplicateEdge(usize, usize),
    #[error("graph is not regular: vertex 0 has degree {expected}, vertex {vertex} has degree {found}")]
    NotRegular { expected: usize, vertex: usize, found: usize },
    #[error("graph is not connected: vertex {0} is unreachable from vertex 0")]
    NotConnected(usize),
    #[error("laziness {0} must lie in [0, 1)")]
    InvalidLaziness(f64),

    #[error("parameter out of bounds: {0}")]
    ParamOutOfBounds(String),
    #[error("degenerate scale parameter {0}, must be positive")]
    DegenerateScale(f64),
    #[error("invalid discretization: {0}")]
    InvalidGrid(String),
    #[error("hyperparameter grid is empty")]
    EmptyGrid,
    #[error("interval [{a}, {b}] is not contained in the domain [0, {len}]")]
    InvalidInterval { a: f64, b: f64, len: f64 },
    #[error("no grid cell center lies in [{a}, {b}]")]
    EmptyTarget { a: f64, b: f64 },
    #[error("tuning level delta = {0} must satisfy 0 < delta < 1")]
    DeltaOutOfRange(f64),

    #[error("invalid sweep: {0}")]
    InvalidSweep(String),
}

pub type Result<T> = std::result::Result<T, Error>;
