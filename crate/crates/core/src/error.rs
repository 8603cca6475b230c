use crate::digraph::EdgeId;
use crate::factors::FactorLanguage;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("morphism is not prolongable from seed '{seed}'")]
    NonProlongable { seed: char },

    #[error("periodic word is empty")]
    EmptyPeriod,

    #[error("explicit prefix has {available} letters, {requested} requested")]
    PrefixTooShort { available: usize, requested: usize },

    /// Factor strata kept changing up to the prefix-length cap. The
    /// uncertified language computed from the capped prefix rides along
    /// so callers can still inspect it.
    #[error("factor strata did not stabilize below a {cap}-letter prefix")]
    SaturationFailed { cap: usize, result: Box<FactorLanguage> },

    #[error("length {k} outside covered range 0..={k_max}")]
    OutOfRange { k: usize, k_max: usize },

    #[error("strata cover lengths <= {k_max}, need {needed}")]
    InsufficientStrata { k_max: usize, needed: usize },

    #[error("n_max={n_max} exceeds brute-force limit {limit}")]
    TooLarge { n_max: usize, limit: usize },

    #[error("edge {edge:?} does not start at a fork")]
    NotAFork { edge: EdgeId },

    #[error("line-digraph budget exceeded: next iterate needs {estimate} (budget {budget})")]
    BudgetExceeded { estimate: usize, budget: usize },

    #[error("graph generation failed after {attempts} attempts (seed {seed})")]
    GenerationFailed { seed: u64, attempts: usize },

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("path already contains the forbidden sub-path")]
    NotGood,

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("invalid word: {0}")]
    InvalidWord(String),

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),

    #[error("invalid sequence spec: {0}")]
    InvalidSpec(String),

    #[error("invalid path: {0}")]
    InvalidPath(String),
}
