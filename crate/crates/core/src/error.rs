use thiserror::Error;

use crate::model::{Color, Triangle, Vertex};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("asymmetric coloring: color[{u}][{v}] != color[{v}][{u}]")]
    Asymmetric { u: Vertex, v: Vertex },
    #[error("edge {u}-{v} has no color")]
    MissingColor { u: Vertex, v: Vertex },
    #[error("unused color {0}: palette is not tight")]
    UnusedColor(Color),
    #[error("color {color} on edge {u}-{v} is outside the palette of size {palette}")]
    ColorOutOfRange {
        u: Vertex,
        v: Vertex,
        color: Color,
        palette: usize,
    },
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("empty vertex set")]
    EmptyVertexSet,
    #[error("invalid shape: {0}")]
    Shape(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("not a Gallai clique: colorful triangle {witness}")]
    NotGallai { witness: Triangle },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("{what} has {n} vertices, above the cap of {cap}")]
    TooLarge {
        what: &'static str,
        n: usize,
        cap: usize,
    },
    #[error("invalid tree: {0}")]
    InvalidTree(String),
    #[error("invalid homomorphism: {0}")]
    InvalidMap(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
