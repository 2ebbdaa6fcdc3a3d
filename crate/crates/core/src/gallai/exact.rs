use std::collections::BTreeSet;

use super::tree::{decompose, Factor};
use crate::model::{Color, ColoredClique};

/// Whether a factor matches a simple clique: two children; four children
/// whose two color classes are 3-edge paths; or five children whose two
/// color classes are 5-cycles.
pub fn is_simple_factor(f: &Factor) -> bool {
    let k = f.as_clique();
    match (k.order(), k.palette_size()) {
        (2, 1) => true,
        (4, 2) => (0..2).all(|c| {
            let g = k.color_class(c);
            g.is_connected() && g.degree_sequence() == [1, 1, 2, 2]
        }),
        (5, 2) => (0..2).all(|c| {
            let g = k.color_class(c);
            g.is_connected() && g.degree_sequence() == [2; 5]
        }),
        _ => false,
    }
}

/// Structural exactness test: the clique decomposes, every factor is a
/// simple clique, and no color is shared by two factors on one
/// root-to-leaf chain.
pub fn verify_exact_structure(k: &ColoredClique) -> bool {
    let Ok(tree) = decompose(k) else {
        return false;
    };
    let factors = tree.factors();
    if !factors.iter().all(is_simple_factor) {
        return false;
    }
    let mut colors: Vec<Option<BTreeSet<Color>>> = vec![None; tree.node_count()];
    for f in &factors {
        colors[f.node] = Some(f.color_set());
    }
    factors.iter().all(|f| {
        let own = colors[f.node].as_ref().unwrap();
        tree.ancestors(f.node)
            .iter()
            .all(|&a| colors[a].as_ref().is_none_or(|up| up.is_disjoint(own)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{extremal_exact_gallai, simple_clique};

    #[test]
    fn examples() {
        assert!(verify_exact_structure(&simple_clique(4).unwrap()));
        assert!(verify_exact_structure(&extremal_exact_gallai(5).unwrap()));
        assert!(!verify_exact_structure(
            &ColoredClique::monochromatic(3).unwrap()
        ));
        assert!(!verify_exact_structure(&ColoredClique::rainbow(3).unwrap()));
        assert!(verify_exact_structure(
            &ColoredClique::monochromatic(1).unwrap()
        ));
    }
}
