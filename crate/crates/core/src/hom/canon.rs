//! Canonical labeling by exhaustive search: the relabeling whose adjacency
//! bit string is lexicographically least. Bits are read column by column
//! over the upper triangle, so each placed vertex fixes the next column and
//! partial strings can be compared against the best so far.

use crate::error::{Error, Result};
use crate::model::{SimpleGraph, Vertex};

/// Order cap for [`canonical_form`].
pub const CANON_CAP: usize = 10;

/// The canonical representative of `g`'s isomorphism class; fails above
/// [`CANON_CAP`] vertices.
pub fn canonical_form(g: &SimpleGraph) -> Result<SimpleGraph> {
    if g.order() > CANON_CAP {
        return Err(Error::TooLarge {
            what: "graph to canonicalize",
            n: g.order(),
            cap: CANON_CAP,
        });
    }
    Ok(canonical_unbounded(g))
}

pub(crate) fn canonical_unbounded(g: &SimpleGraph) -> SimpleGraph {
    let order = canonical_order(g);
    let mut perm = vec![0; g.order()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    g.relabel(&perm)
}

/// `order[i]` is the vertex placed at position `i`.
fn canonical_order(g: &SimpleGraph) -> Vec<Vertex> {
    let n = g.order();
    if n <= 1 {
        return (0..n).collect();
    }
    let mut search = Search {
        g,
        order: Vec::with_capacity(n),
        used: vec![false; n],
        bits: Vec::with_capacity(n * (n - 1) / 2),
        best_bits: None,
        best_order: Vec::new(),
    };
    search.run();
    search.best_order
}

struct Search<'a> {
    g: &'a SimpleGraph,
    order: Vec<Vertex>,
    used: Vec<bool>,
    bits: Vec<bool>,
    best_bits: Option<Vec<bool>>,
    best_order: Vec<Vertex>,
}

impl Search<'_> {
    fn run(&mut self) {
        let n = self.g.order();
        if self.order.len() == n {
            if self.best_bits.as_ref().is_none_or(|b| self.bits < *b) {
                self.best_bits = Some(self.bits.clone());
                self.best_order = self.order.clone();
            }
            return;
        }
        for v in 0..n {
            if self.used[v] {
                continue;
            }
            let mark = self.bits.len();
            for &u in &self.order {
                self.bits.push(self.g.has_edge(u, v));
            }
            // Prune when the partial column string already exceeds the best.
            let worse = self
                .best_bits
                .as_ref()
                .is_some_and(|best| self.bits[..] > best[..self.bits.len()]);
            if !worse {
                self.used[v] = true;
                self.order.push(v);
                self.run();
                self.order.pop();
                self.used[v] = false;
            }
            self.bits.truncate(mark);
        }
    }
}
