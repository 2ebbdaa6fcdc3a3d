//! Induced subgraph embeddings by backtracking.

use crate::model::{SimpleGraph, Vertex};

/// The lexicographically least injective map `pattern → target` that
/// preserves both adjacency and non-adjacency, as the image of each pattern
/// vertex in order.
pub fn find_induced(pattern: &SimpleGraph, target: &SimpleGraph) -> Option<Vec<Vertex>> {
    if pattern.order() > target.order() {
        return None;
    }
    let mut map = Vec::with_capacity(pattern.order());
    let mut used = vec![false; target.order()];
    extend(pattern, target, &mut map, &mut used).then_some(map)
}

fn extend(p: &SimpleGraph, t: &SimpleGraph, map: &mut Vec<Vertex>, used: &mut [bool]) -> bool {
    let i = map.len();
    if i == p.order() {
        return true;
    }
    for x in 0..t.order() {
        if used[x] {
            continue;
        }
        let consistent = map
            .iter()
            .enumerate()
            .all(|(j, &y)| p.has_edge(i, j) == t.has_edge(x, y));
        if !consistent {
            continue;
        }
        used[x] = true;
        map.push(x);
        if extend(p, t, map, used) {
            return true;
        }
        map.pop();
        used[x] = false;
    }
    false
}
