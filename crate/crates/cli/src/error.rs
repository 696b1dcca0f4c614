use coact_harness::HarnessError;
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid monoid: {0}")]
    Invalid(String),
    #[error("recipe: {0}")]
    Recipe(String),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error(transparent)]
    Core(#[from] coact_core::Error),
    #[error(transparent)]
    Harness(#[from] HarnessError),
}

impl CliError {
    pub fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        CliError::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    pub fn io(path: &str, err: std::io::Error) -> Self {
        CliError::Io {
            path: path.to_string(),
            message: err.to_string(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Parse { .. } => "parse",
            CliError::Invalid(_) => "invalid_monoid",
            CliError::Recipe(_) => "recipe",
            CliError::Usage(_) => "usage",
            CliError::Io { .. } => "io",
            CliError::Core(_) => "core",
            CliError::Harness(e) => e.kind(),
        }
    }

    /// The object written to stderr on failure.
    pub fn to_json(&self) -> Value {
        let mut body = json!({ "kind": self.kind(), "message": self.to_string() });
        match self {
            CliError::Parse { line, column, .. } => {
                body["line"] = json!(line);
                body["column"] = json!(column);
            }
            CliError::Harness(HarnessError::UnknownCheck { available, .. }) => {
                body["available"] = json!(available);
            }
            _ => {}
        }
        json!({ "error": body })
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
