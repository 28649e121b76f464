use thiserror::Error;

use crate::partition::Cell;

/// Errors raised by shape construction, element validation and the maps.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("part {index} is smaller than a later part")]
    NotWeaklyDecreasing { index: usize },
    #[error("part {index} is negative")]
    NegativePart { index: usize },
    #[error("cell {0} is not in the diagram")]
    CellOutside(Cell),
    #[error("operation needs a non-empty partition")]
    EmptyShape,
    #[error("star cell {0} is not in the diagram")]
    StarOutside(Cell),
    #[error("label {} is not in the hook of the star", .0 + 1)]
    LabelNotInHook(usize),
    #[error("label {} is not left of or above the star within its diagonal hook", .0 + 1)]
    LabelNotAdmissible(usize),
    #[error("element must carry at least one label")]
    NoLabels,
    #[error("expected {expected} labels, found {found}")]
    WrongLabelCount { expected: usize, found: usize },
    #[error("element is in class {found}, map needs {expected}")]
    WrongClass { expected: &'static str, found: &'static str },
    #[error("invalid element: {0}")]
    InvalidElement(String),
    #[error("map produced cell {0} outside the diagram")]
    TargetOutside(Cell),
    #[error("{0} is not an outside cell")]
    NotOutsideCell(Cell),
    #[error("partition is a hook")]
    IsHook,
    #[error("sum of squared partial hook lengths is odd")]
    OddSum,
    #[error("arithmetic overflow")]
    Overflow,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
