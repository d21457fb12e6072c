//! Error types shared across the crate.

use thiserror::Error;

use crate::chars::Character;
use crate::term::FnName;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("type error: {0}")]
    Type(String),

    #[error("scheme is not closed: undefined function `{0}`")]
    Closure(FnName),

    #[error("divergent evaluation: `{function}` re-entered at index {index}")]
    Divergence { function: FnName, index: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error(
        "not well-defined on \"{input}\": heads for `{first}` and `{second}` \
         both true at index {index}, copy {copy}"
    )]
    WellDefinedness {
        input: String,
        index: usize,
        copy: usize,
        first: Character,
        second: Character,
    },

    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),

    #[error("term is not in normal form: {0}")]
    NormalForm(String),

    #[error("interpretation is not strict: {0}")]
    NotStrict(String),

    #[error("transducer has no final output at state `{0}`")]
    UndefinedFinal(String),

    #[error("parse error at {line}:{col}: {message}")]
    Parse {
        line: usize,
        col: usize,
        message: String,
    },

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn parse(line: usize, col: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            col,
            message: message.into(),
        }
    }
}
