//! Seeded random workloads and exhaustive graph enumerations.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::constructions::simple_clique;
use crate::hom::canonical_form;
use crate::model::{Color, ColoredClique, SimpleGraph, Vertex};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Cuts `items` into `parts` nonempty consecutive runs at random points.
fn random_cut<T: Clone>(rng: &mut ChaCha8Rng, items: &[T], parts: usize) -> Vec<Vec<T>> {
    let mut cuts = rand::seq::index::sample(rng, items.len() - 1, parts - 1).into_vec();
    cuts.sort_unstable();
    let mut out = Vec::with_capacity(parts);
    let mut start = 0;
    for c in cuts {
        out.push(items[start..=c].to_vec());
        start = c + 1;
    }
    out.push(items[start..].to_vec());
    out
}

/// A random tree 2-clique on `2..=max_n` vertices: a random rooted tree
/// whose sibling families each draw their colors from at most two colors of
/// a small palette.
pub fn random_tree_clique(seed: u64, max_n: usize) -> ColoredClique {
    let mut rng = rng(seed);
    let n = rng.gen_range(2..=max_n.max(2));
    let mut matrix = vec![vec![0 as Color; n]; n];
    let mut vertices: Vec<Vertex> = (0..n).collect();
    vertices.shuffle(&mut rng);
    tree_fill(&mut rng, &vertices, &mut matrix);
    ColoredClique::from_fn(n, |u, v| matrix[u][v]).expect("every pair colored")
}

fn tree_fill(rng: &mut ChaCha8Rng, vs: &[Vertex], matrix: &mut [Vec<Color>]) {
    if vs.len() < 2 {
        return;
    }
    let arity = rng.gen_range(2..=vs.len().min(4));
    let children = random_cut(rng, vs, arity);
    let pair: [Color; 2] = [rng.gen_range(0..6), rng.gen_range(0..6)];
    for i in 0..arity {
        for j in i + 1..arity {
            let c = pair[rng.gen_range(0..2)];
            for &u in &children[i] {
                for &v in &children[j] {
                    matrix[u][v] = c;
                    matrix[v][u] = c;
                }
            }
        }
    }
    for child in &children {
        tree_fill(rng, child, matrix);
    }
}

/// A random exact Gallai clique on `2..=max_n` vertices, built from a random
/// tree whose factors are simple cliques (sizes 2, 4, 5) with children
/// placed in random order, and whose colors avoid those of all ancestors.
pub fn random_exact_gallai(seed: u64, max_n: usize) -> ColoredClique {
    let mut rng = rng(seed);
    let n = rng.gen_range(2..=max_n.max(2));
    let mut matrix = vec![vec![0 as Color; n]; n];
    let mut vertices: Vec<Vertex> = (0..n).collect();
    vertices.shuffle(&mut rng);
    exact_fill(&mut rng, &vertices, &mut Vec::new(), &mut matrix);
    ColoredClique::from_fn(n, |u, v| matrix[u][v]).expect("every pair colored")
}

fn exact_fill(
    rng: &mut ChaCha8Rng,
    vs: &[Vertex],
    ancestors: &mut Vec<Color>,
    matrix: &mut [Vec<Color>],
) {
    if vs.len() < 2 {
        return;
    }
    let sizes: Vec<usize> = [2, 4, 5].into_iter().filter(|&s| s <= vs.len()).collect();
    let size = *sizes.choose(rng).expect("size 2 always fits");
    let mut children = random_cut(rng, vs, size);
    children.shuffle(rng);
    let pool = ancestors.len() as Color + 4;
    let mut fresh = Vec::new();
    while fresh.len() < 2 {
        let c = rng.gen_range(0..pool);
        if !ancestors.contains(&c) && !fresh.contains(&c) {
            fresh.push(c);
        }
    }
    let pattern = simple_clique(size).expect("simple size");
    for i in 0..size {
        for j in i + 1..size {
            let c = fresh[pattern.color(i, j) as usize];
            for &u in &children[i] {
                for &v in &children[j] {
                    matrix[u][v] = c;
                    matrix[v][u] = c;
                }
            }
        }
    }
    let used = if size == 2 { 1 } else { 2 };
    ancestors.extend_from_slice(&fresh[..used]);
    for child in &children {
        exact_fill(rng, child, ancestors, matrix);
    }
    ancestors.truncate(ancestors.len() - used);
}

/// A random connected graph on `2..=max_n` vertices: a random tree plus
/// each remaining pair with a random density, randomly relabeled.
pub fn random_connected_graph(seed: u64, max_n: usize) -> SimpleGraph {
    let mut rng = rng(seed);
    let n = rng.gen_range(2..=max_n.max(2));
    let density: f64 = rng.gen_range(0.0..0.6);
    let mut g = SimpleGraph::empty(n);
    for v in 1..n {
        let u = rng.gen_range(0..v);
        g.add_edge(u, v).expect("in range");
    }
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && rng.gen_bool(density) {
                g.add_edge(u, v).expect("in range");
            }
        }
    }
    let mut perm: Vec<Vertex> = (0..n).collect();
    perm.shuffle(&mut rng);
    g.relabel(&perm)
}

/// Every labeled graph on `n` vertices, `2^(n(n-1)/2)` of them. Bit `i` of
/// the index selects the `i`-th pair in lexicographic order.
pub fn all_graphs(n: usize) -> impl Iterator<Item = SimpleGraph> {
    let pairs: Vec<(Vertex, Vertex)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    assert!(pairs.len() < 64, "too many labeled graphs");
    (0..1u64 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        SimpleGraph::new(n, &edges).expect("valid pairs")
    })
}

/// One canonical representative of each isomorphism class of graphs on `n`
/// vertices (`n ≤ 6`), by canonicalizing every labeled graph.
pub fn nonisomorphic_graphs(n: usize) -> Vec<SimpleGraph> {
    assert!(n <= 6, "labeled enumeration is limited to 6 vertices");
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for g in all_graphs(n) {
        let c = canonical_form(&g).expect("small");
        if seen.insert(c.clone()) {
            out.push(c);
        }
    }
    out
}

/// One canonical representative of each isomorphism class of connected
/// graphs on `n` vertices (`1 ≤ n ≤ 10`). Built by adding a vertex to every
/// connected graph on `n - 1` vertices; every connected graph has a vertex
/// whose removal leaves it connected, so nothing is missed.
pub fn connected_nonisomorphic(n: usize) -> Vec<SimpleGraph> {
    assert!((1..=10).contains(&n));
    if n == 1 {
        return vec![SimpleGraph::empty(1)];
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for base in connected_nonisomorphic(n - 1) {
        for mask in 1u32..1 << (n - 1) {
            let mut g = SimpleGraph::empty(n);
            for (u, v) in base.edges() {
                g.add_edge(u, v).expect("in range");
            }
            for u in 0..n - 1 {
                if mask >> u & 1 == 1 {
                    g.add_edge(u, n - 1).expect("in range");
                }
            }
            let c = canonical_form(&g).expect("small");
            if seen.insert(c.clone()) {
                out.push(c);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallai::{is_exact_gallai, is_gallai};

    #[test]
    fn generators_are_deterministic() {
        assert_eq!(random_tree_clique(7, 12), random_tree_clique(7, 12));
        assert_eq!(random_exact_gallai(7, 50), random_exact_gallai(7, 50));
        assert_eq!(random_connected_graph(7, 20), random_connected_graph(7, 20));
    }

    #[test]
    fn generated_cliques_have_their_properties() {
        for seed in 0..30 {
            let t = random_tree_clique(seed, 12);
            assert!(t.order() <= 12 && is_gallai(&t));
            let e = random_exact_gallai(seed, 50);
            assert!(e.order() <= 50 && is_exact_gallai(&e), "seed {seed}");
            let g = random_connected_graph(seed, 20);
            assert!(g.order() <= 20 && g.is_connected());
        }
    }

    #[test]
    fn known_counts() {
        assert_eq!(all_graphs(4).count(), 64);
        let counts: Vec<usize> = (1..=5).map(|n| nonisomorphic_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34]);
        let connected: Vec<usize> = (1..=6).map(|n| connected_nonisomorphic(n).len()).collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21, 112]);
    }
}
