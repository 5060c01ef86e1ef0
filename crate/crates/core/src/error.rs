use std::io;
use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("I/O error: {0}")]
    Io(#[from] io::Error),

    #[error("cannot read {path}: {source}")]
    Path {
        path: PathBuf,
        #[source]
        source: io::Error,
    },

    #[error("corpus is empty")]
    EmptyCorpus,

    #[error("vocabulary is empty")]
    EmptyVocabulary,

    #[error("no documents found in {0}")]
    NoDocuments(PathBuf),

    #[error("duplicate document id {0:?}")]
    DuplicateDocument(String),

    #[error("unknown term {0:?}")]
    UnknownTerm(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(
        "non-finite score while training pair (center {center:?}, output {output:?}) \
         in epoch {epoch} at alpha {alpha}"
    )]
    NonFinite {
        center: String,
        output: String,
        epoch: usize,
        alpha: f64,
    },

    #[error("model needs {required} bytes, limit is {limit}")]
    MemoryLimit { required: u64, limit: u64 },

    #[error("term sets differ: {0:?} is not in both the vocabulary and the vectors")]
    TermMismatch(String),

    #[error("too few eligible terms: need {needed}, found {found}")]
    TooFewTerms { needed: usize, found: usize },

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
