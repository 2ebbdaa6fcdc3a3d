//! Full homomorphisms between simple graphs, reduced forms and types,
//! monochromes of colored cliques, and the classifier for the
//! `{C3, P4, A}` versus `C5` duality.
//!
//! Path names count edges: `P4` is the path on five vertices. Under the other
//! common convention it would be called `P5`.

mod canon;
mod duality;
mod induced;
mod mono;
mod oracle;
mod reduce;

pub use canon::{canonical_form, CANON_CAP};
pub use duality::{classify_monochrome, is_exact_gallai_monochrome, DualityResult, Obstruction};
pub use induced::find_induced;
pub use mono::{monochromes, spanning_monochrome, Monochrome};
pub use oracle::{all_full_homs, brute_force_full_hom, ORACLE_CAP};
pub use reduce::{
    exists_full_hom, graph_type, is_reduced, reduced_form, representatives, type_name,
};

use crate::error::{Error, Result};
use crate::model::{SimpleGraph, Vertex};

/// A verified full homomorphism: `uv` is an edge iff `f(u)f(v)` is.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullHom {
    domain: SimpleGraph,
    codomain: SimpleGraph,
    map: Vec<Vertex>,
}

impl FullHom {
    /// Fails with [`Error::InvalidMap`] if `map` is partial, out of range, or
    /// not full.
    pub fn new(domain: SimpleGraph, codomain: SimpleGraph, map: Vec<Vertex>) -> Result<Self> {
        if !is_full_hom(&domain, &codomain, &map)? {
            return Err(Error::InvalidMap("map is not a full homomorphism".into()));
        }
        Ok(FullHom {
            domain,
            codomain,
            map,
        })
    }

    pub fn identity(g: &SimpleGraph) -> Self {
        FullHom {
            domain: g.clone(),
            codomain: g.clone(),
            map: (0..g.order()).collect(),
        }
    }

    pub fn domain(&self) -> &SimpleGraph {
        &self.domain
    }

    pub fn codomain(&self) -> &SimpleGraph {
        &self.codomain
    }

    pub fn map(&self) -> &[Vertex] {
        &self.map
    }

    pub fn apply(&self, v: Vertex) -> Vertex {
        self.map[v]
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.codomain.order()];
        for &x in &self.map {
            hit[x] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub fn is_injective(&self) -> bool {
        let mut hit = vec![false; self.codomain.order()];
        self.map
            .iter()
            .all(|&x| !std::mem::replace(&mut hit[x], true))
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &FullHom) -> Result<FullHom> {
        if self.codomain != other.domain {
            return Err(Error::InvalidMap("codomain and domain differ".into()));
        }
        let map = self.map.iter().map(|&v| other.map[v]).collect();
        FullHom::new(self.domain.clone(), other.codomain.clone(), map)
    }
}

/// Checks the fullness biconditional for every pair of domain vertices.
/// Errors if `map` is not a total map into the codomain.
pub fn is_full_hom(domain: &SimpleGraph, codomain: &SimpleGraph, map: &[Vertex]) -> Result<bool> {
    if map.len() != domain.order() {
        return Err(Error::InvalidMap(format!(
            "map has {} entries for {} vertices",
            map.len(),
            domain.order()
        )));
    }
    if let Some(&x) = map.iter().find(|&&x| x >= codomain.order()) {
        return Err(Error::VertexOutOfRange {
            vertex: x,
            n: codomain.order(),
        });
    }
    let n = domain.order();
    Ok((0..n)
        .all(|u| (u + 1..n).all(|v| domain.has_edge(u, v) == codomain.has_edge(map[u], map[v]))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{named_graph, NamedGraph};

    #[test]
    fn identity_is_full() {
        let a = named_graph(NamedGraph::A).unwrap();
        let id = FullHom::identity(&a);
        assert!(is_full_hom(&a, &a, id.map()).unwrap());
    }

    #[test]
    fn collapsing_an_edge_is_not_full() {
        let p1 = named_graph(NamedGraph::Path(1)).unwrap();
        let k1 = SimpleGraph::empty(1);
        assert!(!is_full_hom(&p1, &k1, &[0, 0]).unwrap());
    }

    #[test]
    fn partial_maps_rejected() {
        let p2 = named_graph(NamedGraph::Path(2)).unwrap();
        let p1 = named_graph(NamedGraph::Path(1)).unwrap();
        assert!(is_full_hom(&p2, &p1, &[0, 1]).is_err());
        assert!(is_full_hom(&p2, &p1, &[0, 1, 2]).is_err());
        assert!(is_full_hom(&p2, &p1, &[0, 1, 0]).unwrap());
    }

    #[test]
    fn composition() {
        let p2 = named_graph(NamedGraph::Path(2)).unwrap();
        let p1 = named_graph(NamedGraph::Path(1)).unwrap();
        let c5 = named_graph(NamedGraph::Cycle(5)).unwrap();
        let f = FullHom::new(p2, p1.clone(), vec![0, 1, 0]).unwrap();
        let g = FullHom::new(p1, c5, vec![3, 4]).unwrap();
        assert_eq!(f.then(&g).unwrap().map(), &[3, 4, 3]);
    }
}
