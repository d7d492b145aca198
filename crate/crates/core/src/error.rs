use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("vertex {0} is isolated; binomial edge ideals are only defined for graphs without isolated vertices")]
    IsolatedVertex(usize),

    #[error("labeling is not a bijection onto 1..=n")]
    NotBijection,

    #[error("graph is not closed under the given labeling: {0}")]
    NotClosed(String),

    #[error("graph admits no closed labeling")]
    NotProperInterval,

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("characteristic mismatch: {0} vs {1}")]
    CharMismatch(u32, u32),

    #[error("inconclusive: {0}")]
    Inconclusive(String),

    #[error("expected a squarefree monomial ideal: {0}")]
    NotSquarefree(String),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
