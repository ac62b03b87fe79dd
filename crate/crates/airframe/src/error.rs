use thiserror::Error;

#[derive(Debug, Error)]
pub enum AirframeError {
    #[error(transparent)]
    Core(#[from] airframe_core::Error),
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("unknown system {0:?}")]
    UnknownSystem(String),
    #[error("system {0:?} has no generator table")]
    NoGenerators(String),
    #[error("bad file: {0}")]
    Format(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, AirframeError>;
