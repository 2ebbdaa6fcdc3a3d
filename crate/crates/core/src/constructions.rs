//! Builders for the explicit colorings and the small named graphs.

use crate::error::{Error, Result};
use crate::model::{Color, ColoredClique, SimpleGraph, Vertex};

/// An odd clique with a colorful Hamiltonian cycle and no colorful square.
///
/// With `m = 2k + 1`, vertex `i` stands for index `i − k`. Same-parity pairs
/// get color `α = 0`; a pair of different parity gets the color `β_i` of its
/// endpoint with the larger absolute index. `β_{−k}, …, β_{−1}, β_1, …, β_k`
/// are colors `1..=2k` in that order.
pub fn odd_gon_no_squares(m: usize) -> Result<ColoredClique> {
    if m < 3 || m.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "m must be odd and at least 3, got {m}"
        )));
    }
    let k = (m / 2) as i64;
    let beta = |i: i64| -> Color {
        if i < 0 {
            (i + k + 1) as Color
        } else {
            (i + k) as Color
        }
    };
    ColoredClique::from_fn(m, |u, v| {
        let (i, j) = (odd_gon_index(m, u), odd_gon_index(m, v));
        if (i - j).rem_euclid(2) == 0 {
            0
        } else if i.abs() > j.abs() {
            beta(i)
        } else {
            beta(j)
        }
    })
}

/// The signed index `i − k` that vertex `v` of [`odd_gon_no_squares`] stands for.
pub fn odd_gon_index(m: usize, v: Vertex) -> i64 {
    v as i64 - (m / 2) as i64
}

/// A `2m`-clique with a colorful Hamiltonian cycle and no colorful
/// `(2m−1)`-cycle.
///
/// The perimeter edge `{i, i+1 mod 2m}` gets color `i`. Vertices `0, 1, 2, 3`
/// play `v₋₂, v₋₁, v₁, v₂`, so `α₋₁ = 0`, `α₀ = 1`, `α₁ = 2`. The chord
/// `v₋₂v₁` is colored `α₁`, the chord `v₋₁v₂` is colored `α₋₁`, and every
/// other chord is colored `α₀`.
pub fn even_gon_no_preceding(m: usize) -> Result<ColoredClique> {
    if m < 3 {
        return Err(Error::InvalidArgument(format!(
            "m must be at least 3, got {m}"
        )));
    }
    let n = 2 * m;
    ColoredClique::from_fn(n, |u, v| match (u, v) {
        (u, v) if v == u + 1 => u as Color,
        (0, v) if v == n - 1 => v as Color,
        (0, 2) => 2,
        (1, 3) => 0,
        _ => 1,
    })
}

/// The simple cliques: `K₂`; the 2-colored `K₄` whose color classes are the
/// paths `0-1-2-3` and `2-0-3-1`; the 2-colored `K₅` whose color classes are
/// the pentagon `0-1-2-3-4` and the pentagram.
pub fn simple_clique(size: usize) -> Result<ColoredClique> {
    match size {
        2 => ColoredClique::monochromatic(2),
        4 => ColoredClique::from_fn(4, |u, v| (v != u + 1) as Color),
        5 => ColoredClique::from_fn(5, |u, v| {
            let d = v - u;
            (d != 1 && d != 4) as Color
        }),
        _ => Err(Error::InvalidArgument(format!(
            "simple cliques have 2, 4 or 5 vertices, not {size}"
        ))),
    }
}

/// Largest order of an exact Gallai clique on `k` colors:
/// `5^(k/2)` for even `k`, `2·5^((k−1)/2)` for odd `k`.
pub fn max_exact_gallai_order(k: u32) -> Result<u64> {
    if k < 1 {
        return Err(Error::InvalidArgument(
            "at least one color is required".into(),
        ));
    }
    let pow = |e: u32| {
        5u64.checked_pow(e)
            .ok_or_else(|| Error::InvalidArgument(format!("order overflows for k={k}")))
    };
    if k.is_multiple_of(2) {
        pow(k / 2)
    } else {
        pow((k - 1) / 2)?
            .checked_mul(2)
            .ok_or_else(|| Error::InvalidArgument(format!("order overflows for k={k}")))
    }
}

/// An exact Gallai clique on exactly `k` colors attaining
/// [`max_exact_gallai_order`].
///
/// Vertices are read as mixed-radix numbers: an optional leading binary
/// digit (odd `k`) followed by `⌊k/2⌋` base-5 digits. The color of `uv` is
/// decided by the most significant digit where `u` and `v` differ: a simple
/// `K₂` factor at the binary digit and a simple `K₅` factor at each base-5
/// digit, every level with its own colors.
pub fn extremal_exact_gallai(k: u32) -> Result<ColoredClique> {
    let n = max_exact_gallai_order(k)?;
    if n > 1 << 16 {
        return Err(Error::InvalidArgument(format!(
            "{n} vertices is too many to build"
        )));
    }
    let n = n as usize;
    let pentagon = simple_clique(5)?;
    let levels = (k / 2) as usize;
    let odd = k % 2 == 1;
    let digits = |mut x: usize| {
        let mut d = vec![0usize; levels];
        for slot in d.iter_mut().rev() {
            *slot = x % 5;
            x /= 5;
        }
        (x, d)
    };
    ColoredClique::from_fn(n, |u, v| {
        let (hu, du) = digits(u);
        let (hv, dv) = digits(v);
        if odd && hu != hv {
            return 0;
        }
        let base = odd as Color;
        let level = (0..levels)
            .find(|&l| du[l] != dv[l])
            .expect("distinct vertices");
        base + 2 * level as Color + pentagon.color(du[level], dv[level])
    })
}

/// Colors the edges of a connected graph 0 and its non-edges 1; when `h` is
/// complete the result is monochromatic.
pub fn gallai_host(h: &SimpleGraph) -> Result<ColoredClique> {
    if h.order() < 2 {
        return Err(Error::InvalidArgument(
            "host graph needs at least two vertices".into(),
        ));
    }
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    ColoredClique::from_fn(h.order(), |u, v| (!h.has_edge(u, v)) as Color)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedGraph {
    /// `P_k`: the path with `k` edges on vertices `0..=k`.
    Path(usize),
    /// `C_k`: the cycle on vertices `0..k`.
    Cycle(usize),
    /// The six-vertex graph with edges `01, 12, 14, 23, 34, 45`.
    A,
}

impl std::str::FromStr for NamedGraph {
    type Err = Error;

    /// Accepts `P3`, `C5`, `A` (case-insensitive).
    fn from_str(s: &str) -> Result<Self> {
        let upper = s.to_ascii_uppercase();
        let bad = || Error::InvalidArgument(format!("unknown graph name `{s}`"));
        if upper == "A" {
            return Ok(NamedGraph::A);
        }
        let (head, tail) = upper.split_at(1.min(upper.len()));
        let k: usize = tail.parse().map_err(|_| bad())?;
        match head {
            "P" => Ok(NamedGraph::Path(k)),
            "C" => Ok(NamedGraph::Cycle(k)),
            _ => Err(bad()),
        }
    }
}

impl std::fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NamedGraph::Path(k) => write!(f, "P{k}"),
            NamedGraph::Cycle(k) => write!(f, "C{k}"),
            NamedGraph::A => write!(f, "A"),
        }
    }
}

pub fn named_graph(name: NamedGraph) -> Result<SimpleGraph> {
    match name {
        NamedGraph::Path(k) if k >= 1 => {
            let edges: Vec<_> = (0..k).map(|i| (i, i + 1)).collect();
            SimpleGraph::new(k + 1, &edges)
        }
        NamedGraph::Cycle(k) if k >= 3 => {
            let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
            SimpleGraph::new(k, &edges)
        }
        NamedGraph::A => SimpleGraph::new(6, &[(0, 1), (1, 2), (1, 4), (2, 3), (3, 4), (4, 5)]),
        other => Err(Error::InvalidArgument(format!("{other} is out of range"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Cycle;
    use crate::spectrum::has_colorful_cycle;

    #[test]
    fn odd_gon_three_is_rainbow() {
        let k = odd_gon_no_squares(3).unwrap();
        assert_eq!(k.palette_size(), 3);
        // v₋₁v₀ = β₋₁, v₋₁v₁ = α, v₀v₁ = β₁
        assert_eq!((k.color(0, 1), k.color(0, 2), k.color(1, 2)), (1, 0, 2));
    }

    #[test]
    fn odd_gon_five_pentagon_is_colorful() {
        let k = odd_gon_no_squares(5).unwrap();
        assert_eq!(k.palette_size(), 5);
        assert!(k.is_colorful(&Cycle::new(vec![0, 1, 2, 3, 4]).unwrap()));
        assert!(has_colorful_cycle(&k, 4).unwrap().is_none());
    }

    #[test]
    fn odd_gon_rejects_even() {
        assert!(odd_gon_no_squares(4).is_err());
        assert!(odd_gon_no_squares(1).is_err());
    }

    #[test]
    fn even_gon_palette_and_special_chords() {
        for m in 3..=6 {
            let k = even_gon_no_preceding(m).unwrap();
            assert_eq!(k.order(), 2 * m);
            assert_eq!(k.palette_size(), 2 * m);
            let (am1, a0, a1) = (k.color(0, 1), k.color(1, 2), k.color(2, 3));
            assert_eq!(k.color(0, 2), a1);
            assert_eq!(k.color(1, 3), am1);
            assert_eq!(k.color(0, 3), a0);
        }
        assert!(even_gon_no_preceding(2).is_err());
    }

    #[test]
    fn simple_clique_shapes() {
        let k2 = simple_clique(2).unwrap();
        assert_eq!((k2.order(), k2.palette_size()), (2, 1));
        let k4 = simple_clique(4).unwrap();
        for c in 0..2 {
            assert_eq!(k4.color_class(c).degree_sequence(), vec![1, 1, 2, 2]);
            assert!(k4.color_class(c).is_connected());
        }
        let k5 = simple_clique(5).unwrap();
        for c in 0..2 {
            let g = k5.color_class(c);
            assert_eq!(g.degree_sequence(), vec![2; 5]);
            assert!(g.is_connected());
        }
        assert!(simple_clique(3).is_err());
    }

    #[test]
    fn extremal_orders() {
        for (k, n) in [(1, 2), (2, 5), (3, 10), (4, 25), (5, 50)] {
            assert_eq!(max_exact_gallai_order(k).unwrap(), n);
            let c = extremal_exact_gallai(k).unwrap();
            assert_eq!(c.order(), n as usize);
            assert_eq!(c.palette_size(), k as usize);
        }
        assert!(max_exact_gallai_order(0).is_err());
    }

    #[test]
    fn host_examples() {
        let p2 = named_graph(NamedGraph::Path(2)).unwrap();
        let k = gallai_host(&p2).unwrap();
        assert_eq!((k.color(0, 1), k.color(1, 2), k.color(0, 2)), (0, 0, 1));
        let c5 = named_graph(NamedGraph::Cycle(5)).unwrap();
        assert_eq!(gallai_host(&c5).unwrap(), simple_clique(5).unwrap());
        let split = SimpleGraph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(gallai_host(&split), Err(Error::Disconnected));
        assert!(gallai_host(&SimpleGraph::empty(1)).is_err());
        let k3 = named_graph(NamedGraph::Cycle(3)).unwrap();
        assert_eq!(gallai_host(&k3).unwrap().palette_size(), 1);
    }

    #[test]
    fn named_graphs() {
        let p3 = named_graph(NamedGraph::Path(3)).unwrap();
        assert_eq!(p3.order(), 4);
        assert_eq!(p3.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        let c5 = named_graph(NamedGraph::Cycle(5)).unwrap();
        assert_eq!((c5.order(), c5.size()), (5, 5));
        let a = named_graph(NamedGraph::A).unwrap();
        assert_eq!(a.degree_sequence(), vec![1, 1, 2, 2, 3, 3]);
        assert!(named_graph(NamedGraph::Path(0)).is_err());
        assert!(named_graph(NamedGraph::Cycle(2)).is_err());
        assert_eq!("c5".parse::<NamedGraph>().unwrap(), NamedGraph::Cycle(5));
        assert!("Q3".parse::<NamedGraph>().is_err());
    }
}
