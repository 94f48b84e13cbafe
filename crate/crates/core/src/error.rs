use thiserror::Error;

/// Errors produced by graph construction, parsing, and the exact solvers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("edge-list parse error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("certificate parse error on line {line}: {reason}")]
    Certificate { line: usize, reason: String },

    #[error("unsupported size: {0}")]
    UnsupportedSize(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph is not connected")]
    Disconnected,

    #[error("k = {k} is outside the admissible range {min}..={max}")]
    KOutOfRange { k: usize, min: usize, max: usize },

    #[error("outside the domain of the closed form: {0}")]
    Domain(String),

    #[error("search budget exceeded: {0}")]
    Budget(String),

    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_k(k: usize, min: usize, max: usize) -> Result<()> {
    if k < min || k > max {
        Err(Error::KOutOfRange { k, min, max })
    } else {
        Ok(())
    }
}
