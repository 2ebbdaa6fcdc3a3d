use super::canon::{canonical_form, CANON_CAP};
use super::induced::find_induced;
use super::FullHom;
use crate::constructions::{named_graph, NamedGraph};
use crate::error::Result;
use crate::model::{SimpleGraph, Vertex};

/// The least vertex of each neighborhood class, in order of first occurrence.
/// This is the section `h` with `r ∘ h = id`.
pub fn representatives(g: &SimpleGraph) -> Vec<Vertex> {
    let mut reps: Vec<Vertex> = Vec::new();
    for v in 0..g.order() {
        if !reps.iter().any(|&r| g.row(r) == g.row(v)) {
            reps.push(v);
        }
    }
    reps
}

/// No two vertices share a neighborhood.
pub fn is_reduced(g: &SimpleGraph) -> bool {
    representatives(g).len() == g.order()
}

/// The reduced form `Ĝ`, one vertex per distinct neighborhood, together with
/// the quotient map `r: G → Ĝ`.
pub fn reduced_form(g: &SimpleGraph) -> (SimpleGraph, FullHom) {
    let reps = representatives(g);
    let reduced = g.induced(&reps);
    let map: Vec<Vertex> = (0..g.order())
        .map(|v| {
            reps.iter()
                .position(|&r| g.row(r) == g.row(v))
                .expect("every vertex has a representative")
        })
        .collect();
    let r = FullHom::new(g.clone(), reduced.clone(), map)
        .expect("quotient by equal neighborhoods is full");
    (reduced, r)
}

/// The canonical form of `Ĝ`. Fails if `Ĝ` has more than
/// [`CANON_CAP`] vertices.
pub fn graph_type(g: &SimpleGraph) -> Result<SimpleGraph> {
    canonical_form(&reduced_form(g).0)
}

/// A short name for the type of `g`: `K1`, `Pk`, `Ck`, `A`, or otherwise
/// `G<n>:<edges>` listing the canonical edges. Types too large to
/// canonicalize are named `G<n>` alone.
pub fn type_name(g: &SimpleGraph) -> String {
    let reduced = reduced_form(g).0;
    let n = reduced.order();
    if n > CANON_CAP {
        return format!("G{n}");
    }
    let canon = canonical_form(&reduced).expect("order checked");
    if n == 1 {
        return "K1".into();
    }
    let mut candidates = vec![NamedGraph::Path(n - 1), NamedGraph::A];
    if n >= 3 {
        candidates.push(NamedGraph::Cycle(n));
    }
    for name in candidates {
        let named = named_graph(name).expect("valid name");
        if named.order() == n && canonical_form(&named).expect("small") == canon {
            return name.to_string();
        }
    }
    let edges: Vec<String> = canon
        .edges()
        .iter()
        .map(|(u, v)| format!("{u}-{v}"))
        .collect();
    format!("G{n}:{}", edges.join(","))
}

/// A full homomorphism `G → H` if one exists: an induced embedding
/// `e: Ĝ → Ĥ` assembled as `h_H ∘ e ∘ r_G`.
pub fn exists_full_hom(g: &SimpleGraph, h: &SimpleGraph) -> Option<FullHom> {
    let (g_hat, r_g) = reduced_form(g);
    let (h_hat, _) = reduced_form(h);
    let h_reps = representatives(h);
    let e = find_induced(&g_hat, &h_hat)?;
    let map = (0..g.order()).map(|v| h_reps[e[r_g.apply(v)]]).collect();
    Some(FullHom::new(g.clone(), h.clone(), map).expect("assembled map is full"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn named(n: NamedGraph) -> SimpleGraph {
        named_graph(n).unwrap()
    }

    fn bipartite(a: usize, b: usize) -> SimpleGraph {
        let edges: Vec<_> = (0..a)
            .flat_map(|u| (a..a + b).map(move |v| (u, v)))
            .collect();
        SimpleGraph::new(a + b, &edges).unwrap()
    }

    #[test]
    fn reduced_forms() {
        let (p2_hat, r) = reduced_form(&named(NamedGraph::Path(2)));
        assert_eq!(p2_hat, named(NamedGraph::Path(1)));
        assert_eq!(r.map(), &[0, 1, 0]);
        let c5 = named(NamedGraph::Cycle(5));
        let (c5_hat, r) = reduced_form(&c5);
        assert_eq!(c5_hat, c5);
        assert!(r.is_injective());
        assert_eq!(reduced_form(&bipartite(2, 3)).0.order(), 2);
    }

    #[test]
    fn types() {
        let star = SimpleGraph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(type_name(&star), "P1");
        assert_eq!(type_name(&named(NamedGraph::Path(3))), "P3");
        assert_eq!(type_name(&named(NamedGraph::Cycle(5))), "C5");
        assert_eq!(type_name(&named(NamedGraph::A)), "A");
        assert_eq!(type_name(&SimpleGraph::empty(1)), "K1");
        assert_eq!(type_name(&SimpleGraph::empty(3)), "K1");
        let paw = SimpleGraph::new(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        assert!(type_name(&paw).starts_with("G4:"));
        assert_eq!(
            graph_type(&star).unwrap(),
            graph_type(&named(NamedGraph::Path(1))).unwrap()
        );
    }

    #[test]
    fn existence() {
        let c5 = named(NamedGraph::Cycle(5));
        let f = exists_full_hom(&named(NamedGraph::Path(2)), &c5).unwrap();
        assert_eq!(f.map(), &[0, 1, 0]);
        assert!(exists_full_hom(&named(NamedGraph::Cycle(3)), &c5).is_none());
        assert!(exists_full_hom(&named(NamedGraph::Path(4)), &c5).is_none());
        assert!(exists_full_hom(&bipartite(2, 2), &named(NamedGraph::Path(2))).is_some());
    }
}
