use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("group of order {order} exceeds the size limit {max_order}")]
    SizeLimit { order: usize, max_order: usize },

    #[error("invalid input: {0}")]
    Validation(String),

    #[error("table is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },

    #[error("subgroup is not normal: conjugating {member} by {by} leaves the subgroup")]
    NotNormal { member: usize, by: usize },

    #[error("invalid parameters: {0}")]
    Parameter(String),

    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error(transparent)]
    Parse(#[from] crate::spec::ParseError),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
