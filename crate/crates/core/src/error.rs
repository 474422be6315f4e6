use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("invalid input: (0, 0) is not a slope")]
    ZeroVector,

    #[error("invalid input: determinant is {det}, expected 1")]
    NotUnimodular { det: String },

    #[error("normal curve has no essential component")]
    NoEssentialComponent,

    #[error("violates boundary count: det(Psi_1) = {det1} but det(Psi_2) = {det2}")]
    ViolatesBoundaryCount { det1: String, det2: String },

    #[error("degenerate class: the two T2 boundary classes are linearly dependent")]
    DegenerateClass,

    #[error("no path within bound {bound}")]
    NoPathWithinBound { bound: u64 },

    #[error("invalid input: sigma is not hyperbolic (trace {trace})")]
    NotHyperbolic { trace: String },

    #[error("invalid input: class list is empty")]
    EmptyClassList,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("verification failed: {0}")]
    Verification(String),
}

impl Error {
    /// A stable kebab-case name for the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidInput(_) => "invalid-input",
            Error::ZeroVector => "zero-vector",
            Error::NotUnimodular { .. } => "not-unimodular",
            Error::NoEssentialComponent => "no-essential-component",
            Error::ViolatesBoundaryCount { .. } => "violates-boundary-count",
            Error::DegenerateClass => "degenerate-class",
            Error::NoPathWithinBound { .. } => "no-path-within-bound",
            Error::NotHyperbolic { .. } => "not-hyperbolic",
            Error::EmptyClassList => "empty-class-list",
            Error::Parse(_) => "parse",
            Error::Verification(_) => "verification",
        }
    }
}
