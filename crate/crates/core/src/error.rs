use std::io;
use std::path::PathBuf;

use thiserror::Error;

use crate::diagram::{Bipartition, Node};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("node {node} is not a removable node of {diagram}")]
    NotRemovable { diagram: Bipartition, node: Node },

    #[error("node {node} is not an addable node of {diagram}")]
    NotAddable { diagram: Bipartition, node: Node },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("invalid quantum characteristic e = {0}: expected an integer >= 2 or \"inf\"")]
    InvalidE(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("vertex budget of {budget} exceeded while building level {level}")]
    ResourceLimit { budget: usize, level: usize },

    #[error("{0} is not a Kleshchev bipartition for these parameters")]
    NotKleshchev(Bipartition),

    #[error("residue-shifted path of {0} does not replay in the lattice")]
    ShiftReplayFailed(Bipartition),

    #[error("{diagram} has more than one special node: {first} and {second}")]
    MultipleSpecialNodes {
        diagram: Bipartition,
        first: Node,
        second: Node,
    },

    #[error("H(D_{n}) is not semisimple for e = {e}")]
    NotSemisimple { n: usize, e: String },

    #[error("dimension of {0} overflows 128-bit arithmetic")]
    Overflow(Bipartition),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("schema mismatch: {0}")]
    SchemaMismatch(String),

    #[error("cache miss")]
    CacheMiss,

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
}

impl Error {
    pub(crate) fn parse(column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line: 1,
            column,
            message: message.into(),
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
