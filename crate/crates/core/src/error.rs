use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed interval [{lo}, {hi}]: endpoints must satisfy 0 <= lo <= hi <= 1")]
    MalformedInterval { lo: String, hi: String },
    #[error("operation needs a nonempty collection")]
    EmptyCollection,
    #[error("scalar {0} is outside [0, 1]")]
    ScalarOutOfRange(String),
    #[error("cannot parse rational {0:?}")]
    BadRational(String),

    #[error("invalid structure: {0}")]
    InvalidStructure(String),
    #[error("argument set {0} of an extended hyperoperation is empty")]
    EmptyArgumentSet(usize),
    #[error("expected {expected} arguments, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("structure has not been validated as a Krasner hyperring")]
    NotValidated,
    #[error("structure fails Krasner axioms: {0}")]
    AxiomFailure(String),
    #[error("subset must be nonempty")]
    EmptySubset,
    #[error("element {elem} out of range for carrier of size {size}")]
    ElementOutOfRange { elem: usize, size: usize },
    #[error("carrier of size {size} exceeds the subset enumeration cap {cap}")]
    CarrierTooLarge { size: usize, cap: usize },
    #[error("exhaustive check needs ~{needed} lookups, above the cap {cap} (set HYPERLAB_MAX_ATOMIC to override)")]
    TooExpensive { needed: u128, cap: u128 },

    #[error("a fuzzy point needs a value other than [0, 0]")]
    ZeroPointValue,
    #[error("fuzzy set is over a carrier of size {got}, expected {expected}")]
    CarrierMismatch { expected: usize, got: usize },
    #[error("alpha = in-and-q is not a valid hypothesis relation")]
    UnsupportedAlpha,
    #[error("malformed thresholds: {0}")]
    MalformedThresholds(String),

    #[error("malformed corpus spec: {0}")]
    MalformedCorpusSpec(String),
    #[error("instance too large for the brute-force oracle (~{0} checks)")]
    InstanceTooLarge(u128),
    #[error("unknown theorem {0:?}")]
    UnknownTheorem(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
