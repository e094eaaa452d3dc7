use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("operation requires a nonempty word")]
    EmptyWord,
    #[error("{0}")]
    Domain(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown sequence `{0}` (known: t f tr vtm mw pd rs)")]
    UnknownSequence(String),
    #[error("morphism is not prolongable on symbol {0}")]
    NotProlongable(u8),
    #[error("symbol {0} is outside the morphism's domain")]
    SymbolOutOfDomain(u8),
    #[error("not enough partial quotients to reach length {0}")]
    InsufficientQuotients(usize),
    #[error("tuple has {got} components, automaton expects {expected}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("search gave up after {0} backtracking steps")]
    CapExhausted(u64),
    #[error("refusing to scan {subsets} subsets (guard is {guard})")]
    Explosion { subsets: u128, guard: u128 },
    #[error("solution has unexpected shape: {0}")]
    Structural(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
