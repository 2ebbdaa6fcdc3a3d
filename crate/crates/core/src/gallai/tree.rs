use std::collections::BTreeSet;

use super::colorful_triangle;
use super::modules::{closure, two_level_blocks};
use crate::error::{Error, Result};
use crate::model::{Color, ColoredClique, Vertex};

#[derive(Debug, Clone, PartialEq, Eq)]
struct Node {
    parent: Option<usize>,
    children: Vec<usize>,
    vertex: Option<Vertex>,
    /// Sibling colors among `children`, row-major by child position.
    sib: Vec<Color>,
}

/// A rooted tree whose sibling pairs carry colors; its leaves are the
/// vertices of the colored clique it generates.
///
/// Node ids are contiguous. Trees produced by this crate number their nodes
/// in preorder with children ordered by least leaf vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GallaiTree {
    nodes: Vec<Node>,
    root: usize,
}

/// The children of one internal node and their sibling coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub node: usize,
    pub children: Vec<usize>,
    colors: Vec<Color>,
}

impl Factor {
    pub fn len(&self) -> usize {
        self.children.len()
    }

    pub fn is_empty(&self) -> bool {
        self.children.is_empty()
    }

    /// Sibling color between child positions `i ≠ j`.
    pub fn color(&self, i: usize, j: usize) -> Color {
        self.colors[i * self.len() + j]
    }

    pub fn color_set(&self) -> BTreeSet<Color> {
        let k = self.len();
        (0..k)
            .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
            .map(|(i, j)| self.color(i, j))
            .collect()
    }

    /// The factor as a colored clique on child positions, palette tightened.
    pub fn as_clique(&self) -> ColoredClique {
        ColoredClique::from_fn(self.len(), |i, j| self.color(i, j)).expect("factor has children")
    }
}

impl GallaiTree {
    /// Builds and validates a tree from parent links, leaf assignments and
    /// sibling colors `(id1, id2, color)`.
    pub fn from_parts(
        parents: Vec<Option<usize>>,
        leaves: &[(usize, Vertex)],
        sibs: &[(usize, usize, Color)],
    ) -> Result<Self> {
        let count = parents.len();
        let bad = |msg: String| Err(Error::InvalidTree(msg));
        if count == 0 {
            return bad("a tree needs at least one node".into());
        }
        let roots: Vec<usize> = (0..count).filter(|&i| parents[i].is_none()).collect();
        if roots.len() != 1 {
            return bad(format!("expected exactly one root, found {}", roots.len()));
        }
        let root = roots[0];
        let mut nodes: Vec<Node> = parents
            .iter()
            .map(|&parent| Node {
                parent,
                children: Vec::new(),
                vertex: None,
                sib: Vec::new(),
            })
            .collect();
        for id in 0..count {
            if let Some(p) = parents[id] {
                if p >= count {
                    return bad(format!("node {id} has unknown parent {p}"));
                }
                nodes[p].children.push(id);
            }
        }
        // Every node must reach the root.
        for id in 0..count {
            let mut x = id;
            let mut steps = 0;
            while let Some(p) = nodes[x].parent {
                x = p;
                steps += 1;
                if steps > count {
                    return bad(format!("parent links through node {id} form a cycle"));
                }
            }
        }
        for (id, node) in nodes.iter().enumerate() {
            if node.children.len() == 1 {
                return bad(format!("internal node {id} has a single child"));
            }
        }
        let leaf_count = nodes.iter().filter(|n| n.children.is_empty()).count();
        let mut vertex_seen = vec![false; leaf_count];
        for &(id, v) in leaves {
            if id >= count {
                return bad(format!("leaf line names unknown node {id}"));
            }
            if !nodes[id].children.is_empty() {
                return bad(format!("node {id} has children but is declared a leaf"));
            }
            if nodes[id].vertex.is_some() {
                return bad(format!("leaf {id} declared twice"));
            }
            if v >= leaf_count || vertex_seen[v] {
                return bad(format!(
                    "leaf vertices must be a bijection onto 0..{leaf_count}"
                ));
            }
            vertex_seen[v] = true;
            nodes[id].vertex = Some(v);
        }
        if let Some(id) =
            (0..count).find(|&i| nodes[i].children.is_empty() && nodes[i].vertex.is_none())
        {
            return bad(format!("leaf {id} has no vertex"));
        }
        const UNSET: Color = Color::MAX;
        for node in nodes.iter_mut() {
            let k = node.children.len();
            node.sib = vec![UNSET; k * k];
        }
        for &(a, b, c) in sibs {
            let parent = match (
                parents.get(a).copied().flatten(),
                parents.get(b).copied().flatten(),
            ) {
                (Some(pa), Some(pb)) if pa == pb && a != b => pa,
                _ => return bad(format!("nodes {a} and {b} are not siblings")),
            };
            let node = &mut nodes[parent];
            let k = node.children.len();
            let i = node.children.iter().position(|&x| x == a).unwrap();
            let j = node.children.iter().position(|&x| x == b).unwrap();
            if node.sib[i * k + j] != UNSET {
                return bad(format!("sibling pair {a} {b} colored twice"));
            }
            node.sib[i * k + j] = c;
            node.sib[j * k + i] = c;
        }
        for (id, node) in nodes.iter_mut().enumerate() {
            let k = node.children.len();
            for i in 0..k {
                // Diagonal entries are unused; zero them as the builders do.
                node.sib[i * k + i] = 0;
                for j in i + 1..k {
                    if node.sib[i * k + j] == UNSET {
                        return bad(format!(
                            "sibling pair {} {} has no color",
                            node.children[i], node.children[j]
                        ));
                    }
                }
            }
            let colors: BTreeSet<Color> = (0..k)
                .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
                .map(|(i, j)| node.sib[i * k + j])
                .collect();
            if colors.len() > 2 {
                return bad(format!("factor at node {id} uses {} colors", colors.len()));
            }
        }
        Ok(GallaiTree { nodes, root })
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, id: usize) -> Option<usize> {
        self.nodes[id].parent
    }

    pub fn children(&self, id: usize) -> &[usize] {
        &self.nodes[id].children
    }

    pub fn leaf_vertex(&self, id: usize) -> Option<Vertex> {
        self.nodes[id].vertex
    }

    pub fn leaf_count(&self) -> usize {
        self.nodes.iter().filter(|n| n.vertex.is_some()).count()
    }

    /// Length of the longest leaf-to-root path.
    pub fn height(&self) -> usize {
        (0..self.nodes.len())
            .map(|mut x| {
                let mut h = 0;
                while let Some(p) = self.nodes[x].parent {
                    x = p;
                    h += 1;
                }
                h
            })
            .max()
            .unwrap_or(0)
    }

    /// All sibling pairs `(id1, id2, color)` with `id1 < id2`, sorted.
    pub fn sibling_colors(&self) -> Vec<(usize, usize, Color)> {
        let mut out = Vec::new();
        for node in &self.nodes {
            let k = node.children.len();
            for i in 0..k {
                for j in i + 1..k {
                    let (a, b) = (node.children[i], node.children[j]);
                    out.push((a.min(b), a.max(b), node.sib[i * k + j]));
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn factor(&self, id: usize) -> Option<Factor> {
        let node = &self.nodes[id];
        (!node.children.is_empty()).then(|| Factor {
            node: id,
            children: node.children.clone(),
            colors: node.sib.clone(),
        })
    }

    /// Factors of all internal nodes in id order.
    pub fn factors(&self) -> Vec<Factor> {
        (0..self.nodes.len())
            .filter_map(|id| self.factor(id))
            .collect()
    }

    /// Ancestors of `id`, nearest first, excluding `id` itself.
    pub fn ancestors(&self, id: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut x = id;
        while let Some(p) = self.nodes[x].parent {
            out.push(p);
            x = p;
        }
        out
    }

    /// Inserts intermediate nodes until every factor is irreducible. Each
    /// step finds a proper module of size at least two inside a factor and
    /// moves it under a new child node; the generated clique is unchanged.
    pub fn refine(&mut self) {
        let mut changed = false;
        let mut id = 0;
        while id < self.nodes.len() {
            if let Some(module) = self.reducible_module(id) {
                self.split_off(id, &module);
                changed = true;
            } else {
                id += 1;
            }
        }
        if changed {
            self.renumber();
        }
    }

    /// A module of child positions with `2 ≤ |M| < k`, if the factor at
    /// `id` is reducible.
    fn reducible_module(&self, id: usize) -> Option<Vec<usize>> {
        let factor = self.factor(id)?;
        let k = factor.len();
        if k < 3 {
            return None;
        }
        let clique = factor.as_clique();
        let positions: Vec<Vertex> = (0..k).collect();
        for i in 0..k {
            for j in i + 1..k {
                let inside = closure(&clique, &positions, i, j);
                if !inside.iter().all(|&x| x) {
                    return Some((0..k).filter(|&w| inside[w]).collect());
                }
            }
        }
        None
    }

    fn split_off(&mut self, id: usize, module: &[usize]) {
        let old = self.nodes[id].clone();
        let k = old.children.len();
        let new_id = self.nodes.len();
        let inner: Vec<usize> = module.iter().map(|&i| old.children[i]).collect();
        let outer: Vec<usize> = (0..k).filter(|i| !module.contains(i)).collect();

        let m = module.len();
        let mut inner_sib = vec![0; m * m];
        for (a, &i) in module.iter().enumerate() {
            for (b, &j) in module.iter().enumerate() {
                if a != b {
                    inner_sib[a * m + b] = old.sib[i * k + j];
                }
            }
        }
        // Outer factor: the remaining children followed by the new node.
        let r = outer.len() + 1;
        let mut outer_sib = vec![0; r * r];
        let rep = module[0];
        let color_to = |i: usize| if i == r - 1 { None } else { Some(outer[i]) };
        for a in 0..r {
            for b in 0..r {
                if a == b {
                    continue;
                }
                outer_sib[a * r + b] = match (color_to(a), color_to(b)) {
                    (Some(i), Some(j)) => old.sib[i * k + j],
                    (Some(i), None) | (None, Some(i)) => old.sib[i * k + rep],
                    (None, None) => unreachable!(),
                };
            }
        }
        for &c in &inner {
            self.nodes[c].parent = Some(new_id);
        }
        self.nodes.push(Node {
            parent: Some(id),
            children: inner,
            vertex: None,
            sib: inner_sib,
        });
        let node = &mut self.nodes[id];
        node.children = outer
            .iter()
            .map(|&i| old.children[i])
            .chain([new_id])
            .collect();
        node.sib = outer_sib;
    }

    /// Preorder ids, children ordered by least leaf vertex.
    fn renumber(&mut self) {
        let count = self.nodes.len();
        let mut min_leaf = vec![usize::MAX; count];
        for id in 0..count {
            if let Some(v) = self.nodes[id].vertex {
                let mut x = Some(id);
                while let Some(y) = x {
                    min_leaf[y] = min_leaf[y].min(v);
                    x = self.nodes[y].parent;
                }
            }
        }
        let mut order = Vec::with_capacity(count);
        let mut stack = vec![self.root];
        while let Some(x) = stack.pop() {
            order.push(x);
            let mut kids = self.nodes[x].children.clone();
            kids.sort_by_key(|&c| std::cmp::Reverse(min_leaf[c]));
            stack.extend(kids);
        }
        let mut new_id = vec![0; count];
        for (i, &old) in order.iter().enumerate() {
            new_id[old] = i;
        }
        let nodes = order
            .iter()
            .map(|&old| {
                let node = &self.nodes[old];
                let k = node.children.len();
                let mut perm: Vec<usize> = (0..k).collect();
                perm.sort_by_key(|&i| min_leaf[node.children[i]]);
                let mut sib = vec![0; k * k];
                for a in 0..k {
                    for b in 0..k {
                        sib[a * k + b] = node.sib[perm[a] * k + perm[b]];
                    }
                }
                Node {
                    parent: node.parent.map(|p| new_id[p]),
                    children: perm.iter().map(|&i| new_id[node.children[i]]).collect(),
                    vertex: node.vertex,
                    sib,
                }
            })
            .collect();
        self.nodes = nodes;
        self.root = 0;
    }
}

/// Expresses a Gallai clique as a tree 2-clique with irreducible factors.
///
/// Each internal node splits its leaf set by [`two_level_blocks`]: the
/// maximal strong modules when their quotient is irreducible, otherwise the
/// first of them against the rest. Both cases give irreducible factors, and
/// [`GallaiTree::refine`] runs afterwards as a fixpoint check.
pub fn decompose(k: &ColoredClique) -> Result<GallaiTree> {
    if let Some(witness) = colorful_triangle(k) {
        return Err(Error::NotGallai { witness });
    }
    let mut builder = Builder {
        k,
        nodes: Vec::new(),
    };
    let all: Vec<Vertex> = (0..k.order()).collect();
    builder.build(&all, None);
    let mut tree = GallaiTree {
        nodes: builder.nodes,
        root: 0,
    };
    tree.refine();
    Ok(tree)
}

struct Builder<'a> {
    k: &'a ColoredClique,
    nodes: Vec<Node>,
}

impl Builder<'_> {
    fn build(&mut self, s: &[Vertex], parent: Option<usize>) -> usize {
        let id = self.nodes.len();
        self.nodes.push(Node {
            parent,
            children: Vec::new(),
            vertex: None,
            sib: Vec::new(),
        });
        if s.len() == 1 {
            self.nodes[id].vertex = Some(s[0]);
            return id;
        }
        let blocks = two_level_blocks(self.k, s);
        let m = blocks.len();
        let mut sib = vec![0; m * m];
        for a in 0..m {
            for b in 0..m {
                if a != b {
                    sib[a * m + b] = self.k.color(blocks[a][0], blocks[b][0]);
                }
            }
        }
        let children = blocks.iter().map(|b| self.build(b, Some(id))).collect();
        self.nodes[id].children = children;
        self.nodes[id].sib = sib;
        id
    }
}

/// The colored clique generated by a tree: a leaf pair takes the sibling
/// color of its two ancestors just below their least common ancestor.
pub fn recompose(t: &GallaiTree) -> Result<ColoredClique> {
    let leaves: Vec<usize> = {
        let mut by_vertex = vec![usize::MAX; t.leaf_count()];
        for (id, node) in t.nodes.iter().enumerate() {
            if let Some(v) = node.vertex {
                by_vertex[v] = id;
            }
        }
        by_vertex
    };
    // Root-first chains from each leaf.
    let chains: Vec<Vec<usize>> = leaves
        .iter()
        .map(|&leaf| {
            let mut chain = t.ancestors(leaf);
            chain.reverse();
            chain.push(leaf);
            chain
        })
        .collect();
    ColoredClique::from_fn(leaves.len(), |u, v| {
        let (cu, cv) = (&chains[u], &chains[v]);
        let split = cu.iter().zip(cv).take_while(|(a, b)| a == b).count();
        let lca = &t.nodes[cu[split - 1]];
        let k = lca.children.len();
        let i = lca.children.iter().position(|&x| x == cu[split]).unwrap();
        let j = lca.children.iter().position(|&x| x == cv[split]).unwrap();
        lca.sib[i * k + j]
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{extremal_exact_gallai, simple_clique};
    use crate::gallai::is_irreducible;

    fn block_k4() -> ColoredClique {
        ColoredClique::from_fn(4, |u, v| match (u, v) {
            (0, 1) => 2,
            (2, 3) => 3,
            _ => 4,
        })
        .unwrap()
    }

    #[test]
    fn k2_tree() {
        let k2 = ColoredClique::monochromatic(2).unwrap();
        let t = decompose(&k2).unwrap();
        assert_eq!(t.node_count(), 3);
        assert_eq!(t.children(t.root()).len(), 2);
        assert_eq!(t.sibling_colors(), vec![(1, 2, 0)]);
        assert_eq!(recompose(&t).unwrap(), k2);
    }

    #[test]
    fn k1_tree_is_single_leaf() {
        let k1 = ColoredClique::monochromatic(1).unwrap();
        let t = decompose(&k1).unwrap();
        assert_eq!(t.node_count(), 1);
        assert_eq!(t.leaf_vertex(0), Some(0));
        assert_eq!(recompose(&t).unwrap(), k1);
    }

    #[test]
    fn block_k4_has_height_two() {
        let k = block_k4();
        let t = decompose(&k).unwrap();
        assert_eq!(t.height(), 2);
        assert_eq!(t.children(t.root()).len(), 2);
        for &c in t.children(t.root()) {
            assert_eq!(t.children(c).len(), 2);
        }
        assert_eq!(recompose(&t).unwrap(), k);
    }

    #[test]
    fn handmade_tree_recomposes_to_block_k4() {
        // root 0 -> {1, 2}; 1 -> leaves {3, 4}; 2 -> leaves {5, 6}
        let parents = vec![None, Some(0), Some(0), Some(1), Some(1), Some(2), Some(2)];
        let leaves = [(3, 0), (4, 1), (5, 2), (6, 3)];
        let sibs = [(1, 2, 2), (3, 4, 0), (5, 6, 1)];
        let t = GallaiTree::from_parts(parents, &leaves, &sibs).unwrap();
        assert_eq!(recompose(&t).unwrap(), block_k4());
    }

    #[test]
    fn extremal_four_factors_are_pentagons() {
        let k = extremal_exact_gallai(4).unwrap();
        let t = decompose(&k).unwrap();
        assert_eq!(t.height(), 2);
        let factors = t.factors();
        assert_eq!(factors.len(), 6);
        assert!(factors.iter().all(|f| f.len() == 5));
        assert_eq!(recompose(&t).unwrap(), k);
    }

    #[test]
    fn monochromatic_becomes_binary_chain() {
        let k = ColoredClique::monochromatic(5).unwrap();
        let t = decompose(&k).unwrap();
        assert!(t.factors().iter().all(|f| f.len() == 2));
        assert_eq!(recompose(&t).unwrap(), k);
    }

    #[test]
    fn refine_splits_reducible_factor() {
        // A root factor with three children joined monochromatically.
        let parents = vec![None, Some(0), Some(0), Some(0)];
        let leaves = [(1, 0), (2, 1), (3, 2)];
        let sibs = [(1, 2, 0), (1, 3, 0), (2, 3, 0)];
        let mut t = GallaiTree::from_parts(parents, &leaves, &sibs).unwrap();
        let before = recompose(&t).unwrap();
        t.refine();
        assert!(t.factors().iter().all(|f| is_irreducible(&f.as_clique())));
        assert_eq!(recompose(&t).unwrap(), before);
    }

    #[test]
    fn simple_cliques_are_single_factors() {
        for size in [2, 4, 5] {
            let k = simple_clique(size).unwrap();
            let t = decompose(&k).unwrap();
            assert_eq!(t.factors().len(), 1);
        }
    }

    #[test]
    fn invalid_trees_rejected() {
        // Single child.
        assert!(GallaiTree::from_parts(vec![None, Some(0)], &[(1, 0)], &[]).is_err());
        // Missing sibling color.
        let p = vec![None, Some(0), Some(0)];
        assert!(GallaiTree::from_parts(p.clone(), &[(1, 0), (2, 1)], &[]).is_err());
        // Not siblings.
        assert!(GallaiTree::from_parts(p.clone(), &[(1, 0), (2, 1)], &[(0, 1, 0)]).is_err());
        // Leaf bijection broken.
        assert!(GallaiTree::from_parts(p.clone(), &[(1, 0), (2, 0)], &[(1, 2, 0)]).is_err());
        // Three colors in one factor.
        let p3 = vec![None, Some(0), Some(0), Some(0)];
        let sibs = [(1, 2, 0), (1, 3, 1), (2, 3, 2)];
        assert!(GallaiTree::from_parts(p3, &[(1, 0), (2, 1), (3, 2)], &sibs).is_err());
        // Two roots.
        assert!(GallaiTree::from_parts(vec![None, None], &[(0, 0), (1, 1)], &[]).is_err());
    }

    #[test]
    fn non_gallai_rejected() {
        assert!(matches!(
            decompose(&ColoredClique::rainbow(3).unwrap()),
            Err(Error::NotGallai { .. })
        ));
    }
}
