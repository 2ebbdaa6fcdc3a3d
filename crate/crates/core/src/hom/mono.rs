use crate::error::{Error, Result};
use crate::gallai::colorful_triangle;
use crate::model::{Color, ColoredClique, SimpleGraph, Vertex};

/// A connected component of one color class that has at least one edge.
/// Isolated vertices of a color class are not monochromes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monochrome {
    pub color: Color,
    /// Sorted clique vertices; `graph` vertex `i` is `vertices[i]`.
    pub vertices: Vec<Vertex>,
    pub graph: SimpleGraph,
}

/// All monochromes, by color and then by least vertex.
pub fn monochromes(k: &ColoredClique) -> Vec<Monochrome> {
    let mut out = Vec::new();
    for color in 0..k.palette_size() as Color {
        let class = k.color_class(color);
        for comp in class.components() {
            if comp.len() < 2 {
                continue;
            }
            let graph = class.induced(&comp);
            out.push(Monochrome {
                color,
                vertices: comp,
                graph,
            });
        }
    }
    out
}

/// The monochrome with the most vertices (first in [`monochromes`] order on
/// ties). In a Gallai clique it spans every vertex.
pub fn spanning_monochrome(k: &ColoredClique) -> Result<Monochrome> {
    if k.order() < 2 {
        return Err(Error::InvalidArgument(
            "a spanning monochrome needs at least 2 vertices".into(),
        ));
    }
    if let Some(witness) = colorful_triangle(k) {
        return Err(Error::NotGallai { witness });
    }
    let mut best: Option<Monochrome> = None;
    for m in monochromes(k) {
        if best
            .as_ref()
            .is_none_or(|b| m.vertices.len() > b.vertices.len())
        {
            best = Some(m);
        }
    }
    let best = best.expect("n >= 2 gives at least one edge");
    if best.vertices.len() != k.order() {
        return Err(Error::Internal(
            "largest monochrome of a Gallai clique does not span".into(),
        ));
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{gallai_host, simple_clique};

    fn is_cycle5(g: &SimpleGraph) -> bool {
        g.order() == 5 && g.size() == 5 && g.is_connected() && g.degree_sequence() == vec![2; 5]
    }

    #[test]
    fn simple_clique_monochromes() {
        let m5 = monochromes(&simple_clique(5).unwrap());
        assert_eq!(m5.len(), 2);
        assert!(m5.iter().all(|m| is_cycle5(&m.graph)));
        let m4 = monochromes(&simple_clique(4).unwrap());
        assert_eq!(m4.len(), 2);
        for m in &m4 {
            assert_eq!(m.graph.size(), 3);
            assert!(m.graph.is_connected());
            let mut d = m.graph.degree_sequence();
            d.sort();
            assert_eq!(d, vec![1, 1, 2, 2]);
        }
    }

    #[test]
    fn host_of_a_star() {
        let star = SimpleGraph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let ms = monochromes(&gallai_host(&star).unwrap());
        assert_eq!(ms.len(), 2);
        assert_eq!((ms[0].color, ms[0].graph.clone()), (0, star));
        assert_eq!((ms[1].color, ms[1].vertices.clone()), (1, vec![1, 2, 3]));
        assert_eq!(ms[1].graph.size(), 3);
    }

    #[test]
    fn spanning() {
        let mono = ColoredClique::monochromatic(4).unwrap();
        assert_eq!(spanning_monochrome(&mono).unwrap().graph.size(), 6);
        let s5 = spanning_monochrome(&simple_clique(5).unwrap()).unwrap();
        assert!(is_cycle5(&s5.graph));
        let block =
            ColoredClique::from_fn(4, |u, v| if u / 2 == v / 2 { (u / 2) as Color } else { 2 })
                .unwrap();
        let s = spanning_monochrome(&block).unwrap();
        assert_eq!(s.vertices, vec![0, 1, 2, 3]);
        assert_eq!(s.graph.edges(), vec![(0, 2), (0, 3), (1, 2), (1, 3)]);
        assert!(matches!(
            spanning_monochrome(&ColoredClique::rainbow(3).unwrap()),
            Err(Error::NotGallai { .. })
        ));
        assert!(spanning_monochrome(&ColoredClique::monochromatic(1).unwrap()).is_err());
    }
}
