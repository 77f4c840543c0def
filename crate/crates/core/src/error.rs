use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet size {0} is not a prime power")]
    NotPrimePower(u64),
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NonSquare { rows: usize, cols: usize },
    #[error("rank requires a field, got Z_{0}")]
    RankOverNonField(u32),
    #[error("operation requires a field, got Z_{0}")]
    NotAField(u32),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("cap exceeded: {needed} needed, limit is {cap}")]
    CapExceeded { needed: u128, cap: u128 },
    #[error("network is not expansive")]
    NotExpansive,
    #[error("network is not bijective")]
    NotBijective,
    #[error("graph has no cycle decomposition")]
    NotCoverable,
    #[error("alphabet size {0} is too small for this construction")]
    AlphabetTooSmall(u32),
    #[error("no linear solution: {0}")]
    NoLinearSolution(String),
    #[error("not a cycle of cycles: {0}")]
    NotCycleOfCycles(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("no super-expansive network exists for n = {n}, q = {q} (q <= n^2 - n)")]
    BushBoundViolated { n: usize, q: u32 },
    #[error("matrix is not super-expansive")]
    NotSuperExpansive,
    #[error("a code needs at least two words, got {0}")]
    TooFewWords(usize),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}
