use std::fmt;

use super::induced::find_induced;
use super::reduce::reduced_form;
use super::FullHom;
use crate::constructions::{named_graph, NamedGraph};
use crate::error::{Error, Result};
use crate::model::{SimpleGraph, Vertex};

/// The graphs that block a full homomorphism into `C5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Obstruction {
    C3,
    /// The path with four edges and five vertices.
    P4,
    A,
}

impl Obstruction {
    pub const ALL: [Obstruction; 3] = [Obstruction::C3, Obstruction::P4, Obstruction::A];

    pub fn graph(self) -> SimpleGraph {
        named_graph(match self {
            Obstruction::C3 => NamedGraph::Cycle(3),
            Obstruction::P4 => NamedGraph::Path(4),
            Obstruction::A => NamedGraph::A,
        })
        .expect("fixed graphs are valid")
    }
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Obstruction::C3 => "C3",
            Obstruction::P4 => "P4",
            Obstruction::A => "A",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DualityResult {
    /// A full homomorphism into `C5` (vertices `0..5` in cyclic order).
    Hom(FullHom),
    /// `vertices[i]` is the image of vertex `i` of the obstruction; the
    /// vertices induce a copy of it.
    Witness {
        obstruction: Obstruction,
        vertices: Vec<Vertex>,
    },
}

impl DualityResult {
    pub fn is_hom(&self) -> bool {
        matches!(self, DualityResult::Hom(_))
    }
}

impl fmt::Display for DualityResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DualityResult::Hom(h) => {
                f.write_str("HOM")?;
                for (v, x) in h.map().iter().enumerate() {
                    write!(f, " {v}->{x}")?;
                }
                Ok(())
            }
            DualityResult::Witness {
                obstruction,
                vertices,
            } => {
                let vs: Vec<String> = vertices.iter().map(|v| v.to_string()).collect();
                write!(f, "WITNESS {obstruction} vertices=[{}]", vs.join(","))
            }
        }
    }
}

/// Classifies a connected graph: either the least induced copy of `C3`,
/// `P4` or `A` (tried in that order), or an explicit full homomorphism
/// into `C5`.
///
/// The homomorphism is built from an induced `C5` when there is one, and
/// otherwise from a longest induced path, which then has at most three
/// edges. Each vertex's image is read off its adjacencies to that cycle or
/// path.
pub fn classify_monochrome(g: &SimpleGraph) -> Result<DualityResult> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    for obstruction in Obstruction::ALL {
        if let Some(vertices) = find_induced(&obstruction.graph(), g) {
            return Ok(DualityResult::Witness {
                obstruction,
                vertices,
            });
        }
    }
    let c5 = named_graph(NamedGraph::Cycle(5)).expect("valid");
    let map = match find_induced(&c5, g) {
        Some(cycle) => via_cycle(g, &cycle)?,
        None => via_path(g)?,
    };
    FullHom::new(g.clone(), c5, map)
        .map(DualityResult::Hom)
        .map_err(|_| Error::Internal("constructed map is not a full homomorphism".into()))
}

fn via_cycle(g: &SimpleGraph, c: &[Vertex]) -> Result<Vec<Vertex>> {
    (0..g.order())
        .map(|v| {
            let mut hits =
                (0..5).filter(|&i| g.has_edge(v, c[(i + 4) % 5]) && g.has_edge(v, c[(i + 1) % 5]));
            match (hits.next(), hits.next()) {
                (Some(i), None) => Ok(i),
                _ => Err(Error::Internal(format!(
                    "vertex {v} has no unique place on the 5-cycle"
                ))),
            }
        })
        .collect()
}

fn via_path(g: &SimpleGraph) -> Result<Vec<Vertex>> {
    if g.order() == 1 {
        return Ok(vec![0]);
    }
    let (k, p) = (1..=3)
        .rev()
        .find_map(|k| {
            let path = named_graph(NamedGraph::Path(k)).expect("valid");
            find_induced(&path, g).map(|p| (k, p))
        })
        .ok_or_else(|| Error::Internal("connected graph without an edge".into()))?;
    let adj = |v: Vertex, i: usize| g.has_edge(v, p[i]);
    (0..g.order())
        .map(|v| {
            let options: Vec<bool> = match k {
                1 => vec![v == p[0], v == p[1]],
                2 => vec![adj(v, 1), adj(v, 0) && adj(v, 2)],
                _ => vec![
                    adj(v, 1) && !adj(v, 3),
                    adj(v, 0) && adj(v, 2),
                    adj(v, 1) && adj(v, 3),
                    adj(v, 2) && !adj(v, 0),
                ],
            };
            let mut hits = options
                .iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .map(|(i, _)| i);
            match (hits.next(), hits.next()) {
                (Some(i), None) => Ok(i),
                _ => Err(Error::Internal(format!(
                    "vertex {v} has no unique place on the path"
                ))),
            }
        })
        .collect()
}

/// Whether a connected graph with at least one edge occurs as a monochrome
/// of an exact Gallai clique. Computed twice, through the classifier and
/// through the reduced form, and the answers must agree.
pub fn is_exact_gallai_monochrome(g: &SimpleGraph) -> Result<bool> {
    if g.order() < 2 {
        return Err(Error::InvalidArgument(
            "a monochrome has at least one edge".into(),
        ));
    }
    let by_duality = classify_monochrome(g)?.is_hom();
    let reduced = reduced_form(g).0;
    let by_type = [
        NamedGraph::Path(1),
        NamedGraph::Path(3),
        NamedGraph::Cycle(5),
    ]
    .into_iter()
    .any(|name| {
        let t = named_graph(name).expect("valid");
        t.order() == reduced.order() && find_induced(&t, &reduced).is_some()
    });
    if by_duality != by_type {
        return Err(Error::Internal(format!(
            "classifier says {by_duality}, type says {by_type}"
        )));
    }
    Ok(by_duality)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn named(n: NamedGraph) -> SimpleGraph {
        named_graph(n).unwrap()
    }

    #[test]
    fn witnesses() {
        let r = classify_monochrome(&named(NamedGraph::Cycle(3))).unwrap();
        assert_eq!(r.to_string(), "WITNESS C3 vertices=[0,1,2]");
        let r = classify_monochrome(&named(NamedGraph::A)).unwrap();
        assert_eq!(r.to_string(), "WITNESS A vertices=[0,1,2,3,4,5]");
        let r = classify_monochrome(&named(NamedGraph::Path(5))).unwrap();
        assert_eq!(r.to_string(), "WITNESS P4 vertices=[0,1,2,3,4]");
    }

    #[test]
    fn homs() {
        let r = classify_monochrome(&named(NamedGraph::Cycle(5))).unwrap();
        assert_eq!(r.to_string(), "HOM 0->0 1->1 2->2 3->3 4->4");
        let r = classify_monochrome(&named(NamedGraph::Path(3))).unwrap();
        assert_eq!(r.to_string(), "HOM 0->0 1->1 2->2 3->3");
        let r = classify_monochrome(&named(NamedGraph::Path(2))).unwrap();
        assert_eq!(r.to_string(), "HOM 0->0 1->1 2->0");
        let r = classify_monochrome(&SimpleGraph::empty(1)).unwrap();
        assert_eq!(r.to_string(), "HOM 0->0");
        // C5 with vertex 0 blown up into an independent pair.
        let g =
            SimpleGraph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 1), (5, 4)]).unwrap();
        assert_eq!(
            classify_monochrome(&g).unwrap().to_string(),
            "HOM 0->0 1->1 2->2 3->3 4->4 5->0"
        );
    }

    #[test]
    fn disconnected_rejected() {
        assert!(matches!(
            classify_monochrome(&SimpleGraph::empty(2)),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn exact_monochromes() {
        assert!(is_exact_gallai_monochrome(&named(NamedGraph::Path(3))).unwrap());
        assert!(!is_exact_gallai_monochrome(&named(NamedGraph::Path(4))).unwrap());
        let k22 = SimpleGraph::new(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert!(is_exact_gallai_monochrome(&k22).unwrap());
        assert!(is_exact_gallai_monochrome(&SimpleGraph::empty(1)).is_err());
    }
}
