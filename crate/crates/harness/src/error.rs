use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Core(#[from] coact_core::Error),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parameter {name}: {reason}")]
    Param { name: String, reason: String },
    #[error("unknown check {name:?}; available checks: {}", available.join(", "))]
    UnknownCheck {
        name: String,
        available: Vec<String>,
    },
}

impl HarnessError {
    pub fn param(name: &str, reason: impl Into<String>) -> Self {
        HarnessError::Param {
            name: name.to_string(),
            reason: reason.into(),
        }
    }

    /// Short machine-readable tag.
    pub fn kind(&self) -> &'static str {
        match self {
            HarnessError::Core(_) => "core",
            HarnessError::Precondition(_) => "precondition",
            HarnessError::Param { .. } => "parameter",
            HarnessError::UnknownCheck { .. } => "unknown_check",
        }
    }
}

pub type Result<T> = std::result::Result<T, HarnessError>;
