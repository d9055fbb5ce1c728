use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero vector has no primitive direction")]
    ZeroDirection,

    #[error("vector {0:?} is not primitive")]
    NotPrimitive(Vec<String>),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimMismatch { expected: usize, found: usize },

    #[error("point {0} is not in the support of the fan")]
    NotInSupport(String),

    #[error("no vertex with id {0:?}")]
    NoSuchVertex(String),

    #[error("no bounded edge with id {0:?}")]
    NoSuchEdge(String),

    #[error("edge {0:?} has zero length")]
    DegenerateEdge(String),

    #[error("length/weight ratio {ratio} is not an integer; rescale the curve first")]
    NonIntegralRatio { ratio: String },

    #[error("certificate inconsistency: {0}")]
    CertificateInconsistency(String),

    #[error("point does not satisfy the deformation cone equations: {0}")]
    TypeMismatch(String),

    #[error("too large for Hilbert basis enumeration: {0}")]
    TooLargeForHilbert(String),

    #[error("cone too large for facet enumeration ({generators} generators in dimension {dim})")]
    TooLargeForFacets { dim: usize, generators: usize },

    #[error("cone is not pointed")]
    NotPointed,

    #[error("curve has genus {0}, expected genus 1")]
    GenusNotOne(usize),

    #[error("invalid curve: {0}")]
    InvalidCurve(String),

    #[error("curve is not balanced at {0}")]
    Unbalanced(String),

    #[error("fan rays do not support the recession fan; offending rays: {0:?}")]
    RecessionNotSupported(Vec<String>),

    #[error("invalid fan: {0}")]
    InvalidFan(String),
}

impl Error {
    /// Stable snake_case name of the variant, for machine-readable reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::ZeroDirection => "zero_direction",
            Error::NotPrimitive(_) => "not_primitive",
            Error::DimMismatch { .. } => "dim_mismatch",
            Error::NotInSupport(_) => "not_in_support",
            Error::NoSuchVertex(_) => "no_such_vertex",
            Error::NoSuchEdge(_) => "no_such_edge",
            Error::DegenerateEdge(_) => "degenerate_edge",
            Error::NonIntegralRatio { .. } => "non_integral_ratio",
            Error::CertificateInconsistency(_) => "certificate_inconsistency",
            Error::TypeMismatch(_) => "type_mismatch",
            Error::TooLargeForHilbert(_) => "too_large_for_hilbert",
            Error::TooLargeForFacets { .. } => "too_large_for_facets",
            Error::NotPointed => "not_pointed",
            Error::GenusNotOne(_) => "genus_not_one",
            Error::InvalidCurve(_) => "invalid_curve",
            Error::Unbalanced(_) => "unbalanced",
            Error::RecessionNotSupported(_) => "recession_not_supported",
            Error::InvalidFan(_) => "invalid_fan",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
