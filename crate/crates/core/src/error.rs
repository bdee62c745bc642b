use thiserror::Error;

use crate::model::CellRef;

/// Errors produced by the hypermap library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DomainMismatch { expected: usize, found: usize },

    #[error("not a permutation: {0}")]
    InvalidPermutation(String),

    #[error("subset is not invariant: {element} maps outside it")]
    NotInvariant { element: usize },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("validation error at line {line}: {message}")]
    Validation { line: usize, message: String },

    #[error("invalid hypermap: {0}")]
    InvalidHypermap(String),

    #[error("no {} cell with id {}", .0.cell_type, .0.id)]
    CellNotFound(CellRef),

    #[error("cell {} {} used where a {expected} cell was expected", .cell.cell_type, .cell.id)]
    CellTypeMismatch {
        cell: CellRef,
        expected: crate::model::CellType,
    },

    #[error("hypermap is not orientable")]
    NotOrientable,

    #[error("color {color} out of range (graph has {colors} colors)")]
    BadColor { color: usize, colors: usize },

    #[error("bad color set: {0}")]
    BadColorSet(String),

    #[error("no bubble of colors {colors:?} with id {id}")]
    BubbleNotFound { colors: Vec<usize>, id: usize },

    #[error("operation needs a [{expected}]-colored graph, got [{found}]")]
    BadDimension { expected: usize, found: usize },

    #[error("bad size: {0}")]
    BadSize(String),

    #[error("generation failed after {attempts} attempts")]
    GenerationFailed { attempts: usize },
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
