//! Value types: colored cliques, uncolored graphs, cycles and partitions.

mod clique;
mod cycle;
mod graph;
mod partition;

pub use clique::{validate, ColoredClique, RawColoring};
pub use cycle::Cycle;
pub use graph::SimpleGraph;
pub use partition::Partition;

use std::fmt;

pub type Vertex = usize;

/// Colors are small dense ids in `0..palette_size`.
pub type Color = u32;

/// Three vertices in increasing order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triangle(pub [Vertex; 3]);

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.0;
        write!(f, "({a},{b},{c})")
    }
}
