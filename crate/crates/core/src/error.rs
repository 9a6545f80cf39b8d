use thiserror::Error;

use crate::tile::Axis;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid color token {0:?}")]
    InvalidColor(String),

    #[error("duplicate tile {tile} (indices {first} and {second})")]
    DuplicateTile {
        tile: String,
        first: usize,
        second: usize,
    },

    #[error("transducer run failed at position {position}: {msg}")]
    Run { position: usize, msg: String },

    #[error("concatenation in direction {axis} is not well-defined: shapes {left:?} and {right:?}")]
    Concat {
        axis: Axis,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("word cannot be assembled: {0}")]
    Assembly(String),

    #[error("composition failed on letter {letter}: {msg}")]
    Composition { letter: usize, msg: String },

    #[error("iteration failed at step {step}: {msg}")]
    Iteration { step: usize, msg: String },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("marker verification failed: {0}")]
    Markers(String),

    #[error("matrix is not primitive")]
    NotPrimitive,

    #[error("geometry error at cell ({x}, {y}): {msg}")]
    Geometry { x: usize, y: usize, msg: String },

    #[error("unknown artifact {name:?}; valid names are {valid}")]
    UnknownArtifact { name: String, valid: String },

    #[error("morphism file: {0}")]
    MorphismFormat(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
