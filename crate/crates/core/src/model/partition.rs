use std::collections::BTreeSet;

use super::{Color, ColoredClique, Vertex};
use crate::error::{Error, Result};

/// A partition of a clique's vertices together with a color budget `Δ` that
/// contains every color on an edge between distinct blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    blocks: Vec<Vec<Vertex>>,
    delta: BTreeSet<Color>,
}

impl Partition {
    /// Validates coverage, disjointness and `Δ`-validity against `clique`.
    /// Blocks are stored sorted and ordered by least vertex.
    pub fn new(
        clique: &ColoredClique,
        blocks: Vec<Vec<Vertex>>,
        delta: BTreeSet<Color>,
    ) -> Result<Self> {
        let n = clique.order();
        let mut owner = vec![usize::MAX; n];
        let mut blocks: Vec<Vec<Vertex>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        if blocks.iter().any(|b| b.is_empty()) {
            return Err(Error::EmptyVertexSet);
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        for (i, b) in blocks.iter().enumerate() {
            for &v in b {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if owner[v] != usize::MAX {
                    return Err(Error::InvalidArgument(format!(
                        "vertex {v} lies in two blocks"
                    )));
                }
                owner[v] = i;
            }
        }
        if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(Error::InvalidArgument(format!("vertex {v} is not covered")));
        }
        for (u, v, c) in clique.edges() {
            if owner[u] != owner[v] && !delta.contains(&c) {
                return Err(Error::InvalidArgument(format!(
                    "edge {u}-{v} joins two blocks with color {c} outside delta"
                )));
            }
        }
        Ok(Partition { blocks, delta })
    }

    pub fn blocks(&self) -> &[Vec<Vertex>] {
        &self.blocks
    }

    pub fn delta(&self) -> &BTreeSet<Color> {
        &self.delta
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// The colors actually used between distinct blocks.
    pub fn cross_colors(&self, clique: &ColoredClique) -> BTreeSet<Color> {
        let mut out = BTreeSet::new();
        for (i, a) in self.blocks.iter().enumerate() {
            for b in &self.blocks[i + 1..] {
                for &u in a {
                    for &v in b {
                        out.insert(clique.color(u, v));
                    }
                }
            }
        }
        out
    }

    /// Every pair of distinct blocks is joined in a single color.
    pub fn is_homogeneous(&self, clique: &ColoredClique) -> bool {
        self.blocks.iter().enumerate().all(|(i, a)| {
            self.blocks[i + 1..].iter().all(|b| {
                let c = clique.color(a[0], b[0]);
                a.iter()
                    .all(|&u| b.iter().all(|&v| clique.color(u, v) == c))
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_must_cover_cross_edges() {
        let k = ColoredClique::rainbow(3).unwrap();
        assert!(Partition::new(&k, vec![vec![0], vec![1, 2]], BTreeSet::from([0])).is_err());
        let p = Partition::new(&k, vec![vec![1, 2], vec![0]], BTreeSet::from([0, 1])).unwrap();
        assert_eq!(p.blocks(), &[vec![0], vec![1, 2]]);
        assert!(p.is_homogeneous(&k) == false);
    }

    #[test]
    fn rejects_overlap_and_gaps() {
        let k = ColoredClique::monochromatic(3).unwrap();
        let all = BTreeSet::from([0]);
        assert!(Partition::new(&k, vec![vec![0, 1], vec![1, 2]], all.clone()).is_err());
        assert!(Partition::new(&k, vec![vec![0, 1]], all).is_err());
    }
}
