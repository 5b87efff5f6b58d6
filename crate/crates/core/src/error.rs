use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("unknown configuration key `{0}`")]
    UnknownKey(String),
    #[error("configuration key `{key}` has the wrong type: {message}")]
    TypeMismatch { key: String, message: String },
    #[error("invalid value for `{key}`: {message}")]
    Invalid { key: &'static str, message: String },
    #[error("override `{0}` is not of the form key=value")]
    MalformedOverride(String),
    #[error("failed to read config {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("failed to parse config {path}: {message}")]
    Parse { path: PathBuf, message: String },
    #[error("config {0} must contain a flat JSON object")]
    NotAnObject(PathBuf),
}

impl ConfigError {
    pub(crate) fn invalid(key: &'static str, message: impl Into<String>) -> Self {
        Self::Invalid {
            key,
            message: message.into(),
        }
    }
}

#[derive(Debug, Error)]
pub enum MetricsError {
    #[error("metrics are undefined for a colony without cooperators")]
    NoCooperators,
}

#[derive(Debug, Error)]
pub enum SweepError {
    #[error("sweep axis `{0}` has no values")]
    EmptyAxis(String),
    #[error("runs_per_cell must be at least 1")]
    NoRuns,
    #[error(transparent)]
    Config(#[from] ConfigError),
}

/// I/O failure while writing an output file.
#[derive(Debug, Error)]
#[error("failed to write {path}: {source}")]
pub struct OutputError {
    pub path: PathBuf,
    #[source]
    pub source: std::io::Error,
}

impl OutputError {
    pub(crate) fn at(path: impl Into<PathBuf>) -> impl FnOnce(std::io::Error) -> Self {
        let path = path.into();
        move |source| Self { path, source }
    }
}
