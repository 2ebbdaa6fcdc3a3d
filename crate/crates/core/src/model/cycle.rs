use std::fmt;

use super::Vertex;
use crate::error::{Error, Result};

/// A cycle on at least three distinct vertices, identified up to rotation
/// and reversal. The stored sequence is the lexicographically least
/// representative.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle {
    vertices: Vec<Vertex>,
}

impl Cycle {
    pub fn new(vertices: Vec<Vertex>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::InvalidArgument(format!(
                "a cycle needs at least 3 vertices, got {}",
                vertices.len()
            )));
        }
        let mut sorted = vertices.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument(
                "cycle vertices must be distinct".into(),
            ));
        }
        Ok(Cycle {
            vertices: canonical(&vertices),
        })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Consecutive pairs, closing back to the first vertex.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }
}

fn canonical(vs: &[Vertex]) -> Vec<Vertex> {
    let n = vs.len();
    let start = (0..n).min_by_key(|&i| vs[i]).unwrap();
    let forward: Vec<_> = (0..n).map(|i| vs[(start + i) % n]).collect();
    let backward: Vec<_> = (0..n).map(|i| vs[(start + n - i) % n]).collect();
    forward.min(backward)
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}
