use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CellError {
    #[error("frame mismatch at {path}: {detail}")]
    FrameMismatch { path: String, detail: String },

    #[error("leaf mismatch: {0}")]
    LeafMismatch(String),

    #[error("companion mismatch: {0}")]
    CompanionMismatch(String),

    #[error("not an inverse: {0}")]
    NotInverse(String),

    #[error("not invertible: {0}")]
    NotInvertible(String),

    #[error("missing companion or conjoint for {0}")]
    MissingCompanion(String),

    #[error("not fibrant: {}", .0.join("; "))]
    NotFibrant(Vec<String>),

    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("{group} axiom failure: {detail}")]
    AxiomFailure { group: String, detail: String },
}

impl CellError {
    pub fn frame(detail: impl Into<String>) -> Self {
        CellError::FrameMismatch { path: String::new(), detail: detail.into() }
    }

    /// Prefix the path of a frame mismatch, leaving other errors alone.
    pub fn at(self, segment: &str) -> Self {
        match self {
            CellError::FrameMismatch { path, detail } => {
                let path = if path.is_empty() { segment.to_string() } else { format!("{segment}/{path}") };
                CellError::FrameMismatch { path, detail }
            }
            other => other,
        }
    }
}

pub type Result<T> = std::result::Result<T, CellError>;
