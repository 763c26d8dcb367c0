use thiserror::Error;

/// Errors raised by root-datum validation and algebra operations.
///
/// Variants ending in `Violation` signal that a structural identity the
/// library relies on failed to hold for concrete data; they indicate a bug
/// (or a falsified closure property) rather than bad user input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("rank mismatch: expected vectors of length {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },

    #[error("not a generalized Cartan matrix: {0}")]
    NotGcm(String),

    #[error("Weyl group enumeration exceeded the cap of {cap} elements; datum is not of finite type")]
    NotFiniteType { cap: usize },

    #[error("unknown preset group `{0}`")]
    UnknownPreset(String),

    #[error("facet generators span an infinite group")]
    InfiniteParabolic,

    #[error("cocharacter is not dominant")]
    NotDominant,

    #[error("exact division failed: {0}")]
    NotDivisible(String),

    #[error("operands belong to different root data")]
    ContextMismatch,

    #[error("integrality violation: {0}")]
    IntegralityViolation(String),

    #[error("parity violation: {0}")]
    ParityViolation(String),

    #[error("centrality violation: {0}")]
    CentralityViolation(String),

    #[error("input element is not central")]
    NotCentralInput,

    #[error("element escapes the expected basis span: {0}")]
    BasisEscape(String),

    #[error("element is not in the span of Bernstein elements: {0}")]
    NotInThetaSpan(String),

    #[error("weight multiplicity oracle mismatch: {0}")]
    OracleMismatch(String),

    #[error("negative multiplicity encountered: {0}")]
    NegativeMultiplicity(String),

    #[error("element parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
