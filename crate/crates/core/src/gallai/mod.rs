//! Gallai and exact Gallai cliques.
//!
//! A set of vertices `M` is a *module* when every vertex outside `M` sees
//! all of `M` in a single color. A partition is homogeneous exactly when
//! its blocks are modules, so homogeneous partitions are computed through
//! module closures.
//!
//! "Nontrivial" is read two ways. For irreducibility a homogeneous
//! partition is trivial when it has one block or only singletons, so a
//! clique is irreducible iff it has no module `M` with `2 ≤ |M| < n`. For
//! [`homogeneous_2_partition`] only the one-block partition is excluded,
//! which lets the all-singleton partition of a simple clique qualify.

mod exact;
mod modules;
mod subsets;
mod tree;

pub use exact::{is_simple_factor, verify_exact_structure};
pub use modules::{homogeneous_2_partition, is_irreducible, smallest_module};
pub use subsets::{check_subset_conditions, SubsetReport, EXHAUSTIVE_CAP, SAMPLE_SIZE};
pub use tree::{decompose, recompose, Factor, GallaiTree};

use crate::model::{ColoredClique, Triangle};

/// The lexicographically least triangle whose three edges have distinct
/// colors.
pub fn colorful_triangle(k: &ColoredClique) -> Option<Triangle> {
    first_triangle(k, |a, b, c| distinct_colors(a, b, c) == 3)
}

pub fn is_gallai(k: &ColoredClique) -> bool {
    colorful_triangle(k).is_none()
}

/// The lexicographically least triangle that does not use exactly two
/// colors.
pub fn inexact_triangle(k: &ColoredClique) -> Option<Triangle> {
    first_triangle(k, |a, b, c| distinct_colors(a, b, c) != 2)
}

/// Every triangle uses exactly two colors. `K₁` and `K₂` qualify vacuously.
pub fn is_exact_gallai(k: &ColoredClique) -> bool {
    inexact_triangle(k).is_none()
}

fn distinct_colors(a: u32, b: u32, c: u32) -> usize {
    1 + (a != b) as usize + (c != a && c != b) as usize
}

fn first_triangle(k: &ColoredClique, bad: impl Fn(u32, u32, u32) -> bool) -> Option<Triangle> {
    let n = k.order();
    for u in 0..n {
        for v in u + 1..n {
            let uv = k.color(u, v);
            for w in v + 1..n {
                if bad(uv, k.color(u, w), k.color(v, w)) {
                    return Some(Triangle([u, v, w]));
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{extremal_exact_gallai, odd_gon_no_squares, simple_clique};

    #[test]
    fn recognition_examples() {
        let mono = ColoredClique::monochromatic(3).unwrap();
        assert!(is_gallai(&mono));
        assert!(!is_exact_gallai(&mono));
        assert_eq!(inexact_triangle(&mono), Some(Triangle([0, 1, 2])));

        let rainbow = ColoredClique::rainbow(3).unwrap();
        assert_eq!(colorful_triangle(&rainbow), Some(Triangle([0, 1, 2])));
        assert!(!is_exact_gallai(&rainbow));

        assert!(!is_gallai(&odd_gon_no_squares(5).unwrap()));
        assert!(is_exact_gallai(&simple_clique(5).unwrap()));
        assert!(is_exact_gallai(&extremal_exact_gallai(3).unwrap()));
        assert!(is_exact_gallai(&ColoredClique::monochromatic(2).unwrap()));
        assert!(is_exact_gallai(&ColoredClique::monochromatic(1).unwrap()));
    }

    #[test]
    fn two_color_triangle_is_exact() {
        let k = ColoredClique::from_fn(3, |u, v| ((u, v) == (0, 1)) as u32).unwrap();
        assert!(is_exact_gallai(&k));
        assert!(is_gallai(&k));
    }
}
