use thiserror::Error;

/// Errors raised by graph construction, cover analysis and ideal arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("loop edge at vertex `{0}`")]
    LoopEdge(String),
    #[error("antiparallel edges between `{0}` and `{1}`")]
    AntiparallelPair(String, String),
    #[error("vertex `{name}` has non-positive weight {weight}")]
    NonpositiveWeight { name: String, weight: i64 },
    #[error("vertex `{name}` has weight {weight}, which exceeds the supported maximum")]
    WeightTooLarge { name: String, weight: i64 },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("graph has {0} vertices; at most 64 are supported")]
    TooManyVertices(usize),
    #[error("set is not stable: it contains the edge {{{0}, {1}}}")]
    NotStableSet(String, String),
    #[error("vertex set does not cover the edge ({0}, {1})")]
    NotACover(String, String),
    #[error("enumeration over {n} vertices exceeds the configured cap of {cap}")]
    SizeCap { n: usize, cap: usize },
    #[error("oracle recursion exceeded {0} splitting steps")]
    OracleBudget(usize),
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("variable {0} appears twice in an irreducible ideal")]
    RepeatedVariable(usize),
    #[error("the unit ideal is not representable")]
    UnitIdeal,
    #[error("decomposition verification failed: {0}")]
    VerificationFailure(String),
    #[error("unmixedness criteria disagree: {0}")]
    CriteriaDisagreement(String),
    #[error("graph is mixed; c-minor closure requires an unmixed graph")]
    NotUnmixed,
    #[error("graph is not a whisker")]
    NotAWhisker,
    #[error("underlying graph is not bipartite")]
    NotBipartite,
    #[error("underlying graph is not a cycle")]
    NotACycle,
    #[error("underlying graph is not a path")]
    NotAPath,
    #[error("underlying graph is not complete")]
    NotComplete,
}

impl Error {
    /// True for errors caused by an enumeration or recursion cap.
    pub fn is_size_cap(&self) -> bool {
        matches!(self, Error::SizeCap { .. } | Error::OracleBudget(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
