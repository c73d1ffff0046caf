use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix must be nonempty")]
    EmptyMatrix,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("unknown catalog key `{0}`")]
    UnknownKey(String),

    #[error("unknown module label `{0}`")]
    UnknownModule(String),

    #[error("validation failed for `{label}`: {failures:?}")]
    Validation { label: String, failures: Vec<String> },

    #[error("critical group is infinite: {0}")]
    KInfinite(String),

    #[error("nullity of the matrix is {0}, expected 1")]
    Nullity(usize),

    #[error("zero pairing between left and right null vectors")]
    ZeroDotProduct,

    #[error("s has no coordinate equal to 1")]
    NoUnitCoordinate,

    #[error("d = s^T p is zero")]
    ZeroDimension,

    #[error("algebra is not semisimple (dimension of the projective cover of the trivial module is {0})")]
    NotSemisimple(String),

    #[error("matrix is not avalanche-finite")]
    NotAvalancheFinite,

    #[error("matrix is not a nonsingular M-matrix: {0}")]
    NotMMatrix(String),

    #[error("stabilization exceeded the step limit of {0} firings")]
    StepLimitExceeded(u64),

    #[error("configuration is not stable at site {0}")]
    UnstableConfig(usize),

    #[error("fusion multiplicity is not an integer: [S_{j} (x) S_{t} : S_{i}] = {value}")]
    NonIntegralFusion { i: usize, j: usize, t: usize, value: String },

    #[error("fusion multiplicity is negative: [S_{j} (x) S_{t} : S_{i}] = {value}")]
    NegativeMultiplicity { i: usize, j: usize, t: usize, value: String },

    #[error("Brauer table: {0}")]
    BrauerTable(String),

    #[error("Cartan matrix required but absent")]
    MissingCartan,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("finiteness criteria disagree: {0}")]
    EquivalenceViolation(String),

    #[error("internal consistency check failed: {0}")]
    InternalConsistency(String),

    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
