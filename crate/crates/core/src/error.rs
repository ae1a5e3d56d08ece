use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("shape must have at least one factor and every factor dimension must be >= 1, got {0:?}")]
    InvalidShape(Vec<u32>),

    #[error("expected {expected} coordinates, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("factor index {index} out of range for {factors} factors")]
    InvalidFactor { index: usize, factors: usize },

    #[error("a bundle needs at least one summand")]
    EmptyBundle,

    #[error("summand multiplicity must be positive")]
    ZeroMultiplicity,

    #[error("degree entry {0} is outside the supported range +/-2^62")]
    DegreeOverflow(i128),

    #[error("restricting factor {0} would leave an empty product")]
    RestrictionToPoint(usize),

    #[error("{0}")]
    HypothesisDomain(String),

    #[error("r vector out of range: {0}")]
    ROutOfRange(String),

    #[error("shape {0:?} is not a power (P^n)^s with s >= 2")]
    NotPowerShape(Vec<u32>),

    #[error("audit would enumerate {candidates} candidates, above the guard of {guard}")]
    GuardExceeded { candidates: u128, guard: u128 },

    #[error("malformed bundle JSON: {0}")]
    MalformedJson(String),

    #[error("{0}")]
    InvalidInput(String),
}

impl Error {
    /// Stable machine-readable code, printed by the CLI on failure.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidShape(_) => "invalid-shape",
            Error::LengthMismatch { .. } => "shape-mismatch",
            Error::InvalidFactor { .. } => "invalid-factor",
            Error::EmptyBundle => "empty-bundle",
            Error::ZeroMultiplicity => "zero-multiplicity",
            Error::DegreeOverflow(_) => "degree-overflow",
            Error::RestrictionToPoint(_) => "restriction-to-point",
            Error::HypothesisDomain(_) => "hypothesis-domain",
            Error::ROutOfRange(_) => "r-out-of-range",
            Error::NotPowerShape(_) => "not-power-shape",
            Error::GuardExceeded { .. } => "guard-exceeded",
            Error::MalformedJson(_) => "malformed-json",
            Error::InvalidInput(_) => "invalid-input",
        }
    }
}
