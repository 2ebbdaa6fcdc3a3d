use std::collections::BTreeSet;

use super::colorful_triangle;
use crate::error::{Error, Result};
use crate::model::{Color, ColoredClique, Partition, Vertex};

/// Least module of the subclique on `s` containing positions `a` and `b`,
/// returned as membership flags over positions of `s`.
///
/// Starting from `{a, b}`, any outside vertex that sees two colors into the
/// current set is pulled in, until nothing changes.
pub(crate) fn closure(k: &ColoredClique, s: &[Vertex], a: usize, b: usize) -> Vec<bool> {
    let len = s.len();
    let mut inside = vec![false; len];
    // Color seen from each outside position into the current set.
    let mut seen: Vec<Option<Color>> = vec![None; len];
    let mut queue = vec![a, b];
    inside[a] = true;
    inside[b] = true;
    while let Some(x) = queue.pop() {
        for w in 0..len {
            if inside[w] {
                continue;
            }
            let c = k.color(s[w], s[x]);
            match seen[w] {
                None => seen[w] = Some(c),
                Some(prev) if prev == c => {}
                Some(_) => {
                    inside[w] = true;
                    queue.push(w);
                }
            }
        }
    }
    inside
}

/// The inclusion-minimal module containing `u` and `v`.
pub fn smallest_module(k: &ColoredClique, u: Vertex, v: Vertex) -> Result<Vec<Vertex>> {
    let n = k.order();
    for vertex in [u, v] {
        if vertex >= n {
            return Err(Error::VertexOutOfRange { vertex, n });
        }
    }
    if u == v {
        return Err(Error::InvalidArgument(
            "smallest_module needs two distinct vertices".into(),
        ));
    }
    let all: Vec<Vertex> = (0..n).collect();
    let inside = closure(k, &all, u, v);
    Ok((0..n).filter(|&w| inside[w]).collect())
}

/// No module `M` with `2 ≤ |M| < n`.
pub fn is_irreducible(k: &ColoredClique) -> bool {
    let n = k.order();
    let all: Vec<Vertex> = (0..n).collect();
    (0..n).all(|u| (u + 1..n).all(|v| closure(k, &all, u, v).iter().all(|&x| x)))
}

/// How the maximal strong modules of a subclique are joined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Split {
    /// Every pair of blocks is joined in this one color.
    Degenerate(Color),
    /// The quotient on the blocks is irreducible.
    Prime,
}

/// Maximal strong modules of the subclique on `s` (`|s| ≥ 2`), each sorted,
/// ordered by least vertex.
///
/// If for some color `c` the edges of other colors leave `s` disconnected,
/// the components are the blocks and the quotient is monochromatic in `c`.
/// Otherwise the quotient is irreducible, two vertices share a block iff
/// their least module is a proper subset, and the blocks are found by
/// merging closures in lexicographic pair order.
pub(crate) fn root_split(k: &ColoredClique, s: &[Vertex]) -> (Vec<Vec<Vertex>>, Split) {
    let len = s.len();
    debug_assert!(len >= 2);
    let colors_at_first: BTreeSet<Color> = s[1..].iter().map(|&v| k.color(s[0], v)).collect();
    for &c in &colors_at_first {
        let mut uf = UnionFind::new(len);
        for i in 0..len {
            for j in i + 1..len {
                if k.color(s[i], s[j]) != c {
                    uf.union(i, j);
                }
            }
        }
        let blocks = uf.blocks(s);
        if blocks.len() > 1 {
            return (blocks, Split::Degenerate(c));
        }
    }
    let mut uf = UnionFind::new(len);
    for i in 0..len {
        for j in i + 1..len {
            if uf.find(i) == uf.find(j) {
                continue;
            }
            let inside = closure(k, s, i, j);
            if inside.iter().all(|&x| x) {
                continue;
            }
            for w in (0..len).filter(|&w| inside[w]) {
                uf.union(i, w);
            }
        }
    }
    (uf.blocks(s), Split::Prime)
}

/// Coarsest homogeneous partition of a Gallai clique with at least two
/// blocks, returned with its cross colors as `Δ` (`|Δ| ≤ 2`).
///
/// When the maximal strong modules are joined monochromatically and there
/// are more than two of them, the first is split off from the union of the
/// rest. Otherwise the maximal strong modules themselves are returned.
pub fn homogeneous_2_partition(k: &ColoredClique) -> Result<Partition> {
    if k.order() < 2 {
        return Err(Error::InvalidArgument(
            "a homogeneous partition needs two vertices".into(),
        ));
    }
    if let Some(witness) = colorful_triangle(k) {
        return Err(Error::NotGallai { witness });
    }
    let all: Vec<Vertex> = (0..k.order()).collect();
    let blocks = two_level_blocks(k, &all);
    let mut delta = BTreeSet::new();
    for (i, a) in blocks.iter().enumerate() {
        for b in &blocks[i + 1..] {
            delta.insert(k.color(a[0], b[0]));
        }
    }
    if delta.len() > 2 {
        return Err(Error::Internal(format!(
            "homogeneous partition of a Gallai clique uses {} cross colors",
            delta.len()
        )));
    }
    let p = Partition::new(k, blocks, delta)?;
    debug_assert!(p.is_homogeneous(k));
    Ok(p)
}

/// Blocks used for one level of decomposition of the subclique on `s`.
pub(crate) fn two_level_blocks(k: &ColoredClique, s: &[Vertex]) -> Vec<Vec<Vertex>> {
    let (mut blocks, split) = root_split(k, s);
    if matches!(split, Split::Degenerate(_)) && blocks.len() > 2 {
        let mut rest: Vec<Vertex> = blocks.drain(1..).flatten().collect();
        rest.sort_unstable();
        blocks.push(rest);
    }
    blocks
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    /// Groups positions by root and maps them through `s`.
    fn blocks(&mut self, s: &[Vertex]) -> Vec<Vec<Vertex>> {
        let mut by_root: Vec<Vec<Vertex>> = vec![Vec::new(); s.len()];
        for i in 0..s.len() {
            let r = self.find(i);
            by_root[r].push(s[i]);
        }
        let mut out: Vec<Vec<Vertex>> = by_root.into_iter().filter(|b| !b.is_empty()).collect();
        for b in &mut out {
            b.sort_unstable();
        }
        out.sort_unstable_by_key(|b| b[0]);
        out
    }
}
