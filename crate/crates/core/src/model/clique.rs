use std::collections::BTreeSet;

use super::{Color, Cycle, SimpleGraph, Vertex};
use crate::error::{Error, Result};

/// An edge coloring under construction; entries may be missing or
/// asymmetric until [`validate`] accepts it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawColoring {
    n: usize,
    palette_size: usize,
    entries: Vec<Option<Color>>,
}

impl RawColoring {
    pub fn new(n: usize, palette_size: usize) -> Self {
        RawColoring {
            n,
            palette_size,
            entries: vec![None; n * n],
        }
    }

    /// Sets one directed entry; use [`RawColoring::set_edge`] for both.
    pub fn set(&mut self, u: Vertex, v: Vertex, c: Color) {
        self.entries[u * self.n + v] = Some(c);
    }

    pub fn set_edge(&mut self, u: Vertex, v: Vertex, c: Color) {
        self.set(u, v, c);
        self.set(v, u, c);
    }

    pub fn get(&self, u: Vertex, v: Vertex) -> Option<Color> {
        self.entries[u * self.n + v]
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn palette_size(&self) -> usize {
        self.palette_size
    }

    pub fn build(self) -> Result<ColoredClique> {
        validate(&self)?;
        let n = self.n;
        let colors = self.entries.iter().map(|c| c.unwrap_or(0)).collect();
        Ok(ColoredClique {
            n,
            palette: self.palette_size,
            colors,
        })
    }
}

/// Checks every colored-clique invariant, reporting the first violation in
/// lexicographic edge order. Range and symmetry are checked per edge before
/// palette tightness.
pub fn validate(raw: &RawColoring) -> Result<()> {
    let n = raw.n;
    if n == 0 {
        return Err(Error::Shape(
            "a colored clique needs at least one vertex".into(),
        ));
    }
    if n == 1 && raw.palette_size != 0 {
        return Err(Error::UnusedColor(0));
    }
    let mut used = vec![false; raw.palette_size];
    for u in 0..n {
        for v in u + 1..n {
            let (a, b) = match (raw.get(u, v), raw.get(v, u)) {
                (Some(a), Some(b)) => (a, b),
                _ => return Err(Error::MissingColor { u, v }),
            };
            if a != b {
                return Err(Error::Asymmetric { u, v });
            }
            if a as usize >= raw.palette_size {
                return Err(Error::ColorOutOfRange {
                    u,
                    v,
                    color: a,
                    palette: raw.palette_size,
                });
            }
            used[a as usize] = true;
        }
    }
    if let Some(c) = used.iter().position(|&x| !x) {
        return Err(Error::UnusedColor(c as Color));
    }
    Ok(())
}

/// A complete graph with a symmetric, tight edge coloring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoredClique {
    n: usize,
    palette: usize,
    colors: Vec<Color>,
}

impl ColoredClique {
    /// Builds from a full matrix; the diagonal is ignored.
    pub fn from_matrix(palette_size: usize, matrix: &[Vec<Color>]) -> Result<Self> {
        let n = matrix.len();
        let mut raw = RawColoring::new(n, palette_size);
        for (u, row) in matrix.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Shape(format!(
                    "row {u} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for (v, &c) in row.iter().enumerate() {
                if u != v {
                    raw.set(u, v, c);
                }
            }
        }
        raw.build()
    }

    /// Builds an `n`-clique from a color function evaluated on `u < v`.
    ///
    /// Arbitrary color ids are accepted; they are compacted to `0..k` in
    /// increasing order, so an already tight coloring keeps its ids.
    pub fn from_fn(n: usize, mut color: impl FnMut(Vertex, Vertex) -> Color) -> Result<Self> {
        if n == 0 {
            return Err(Error::Shape(
                "a colored clique needs at least one vertex".into(),
            ));
        }
        let mut colors = vec![0; n * n];
        for u in 0..n {
            for v in u + 1..n {
                let c = color(u, v);
                colors[u * n + v] = c;
                colors[v * n + u] = c;
            }
        }
        let mut clique = ColoredClique {
            n,
            palette: 0,
            colors,
        };
        clique.tighten();
        Ok(clique)
    }

    pub fn monochromatic(n: usize) -> Result<Self> {
        Self::from_fn(n, |_, _| 0)
    }

    /// Every edge gets its own color.
    pub fn rainbow(n: usize) -> Result<Self> {
        Self::from_fn(n, |u, v| (u * n + v) as Color)
    }

    fn tighten(&mut self) {
        let present: BTreeSet<Color> = self.edges().map(|(_, _, c)| c).collect();
        let remap = |c: Color| present.range(..c).count() as Color;
        for u in 0..self.n {
            for v in 0..self.n {
                if u != v {
                    let c = self.colors[u * self.n + v];
                    self.colors[u * self.n + v] = remap(c);
                }
            }
        }
        self.palette = present.len();
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn palette_size(&self) -> usize {
        self.palette
    }

    #[inline]
    pub fn color(&self, u: Vertex, v: Vertex) -> Color {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.colors[u * self.n + v]
    }

    /// Edges `(u, v, color)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex, Color)> + '_ {
        let n = self.n;
        (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v, self.colors[u * n + v])))
    }

    fn check_set(&self, s: &[Vertex]) -> Result<()> {
        if s.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        match s.iter().find(|&&v| v >= self.n) {
            Some(&vertex) => Err(Error::VertexOutOfRange { vertex, n: self.n }),
            None => Ok(()),
        }
    }

    /// The set of colors on edges joining `a` to `b`.
    pub fn colors_between(&self, a: &[Vertex], b: &[Vertex]) -> Result<BTreeSet<Color>> {
        self.check_set(a)?;
        self.check_set(b)?;
        let mut out = BTreeSet::new();
        for &u in a {
            for &v in b {
                if u != v {
                    out.insert(self.color(u, v));
                }
            }
        }
        Ok(out)
    }

    /// True iff the consecutive edges of `cycle` carry pairwise distinct colors.
    pub fn is_colorful(&self, cycle: &Cycle) -> bool {
        let mut seen = BTreeSet::new();
        cycle.edges().all(|(u, v)| seen.insert(self.color(u, v)))
    }

    /// The clique induced on `s`, with colors re-tightened. Vertex `i` of the
    /// result is `s[i]` of `self`; the returned map records that.
    pub fn induced_subclique(&self, s: &[Vertex]) -> Result<(ColoredClique, Vec<Vertex>)> {
        self.check_set(s)?;
        let mut map = s.to_vec();
        map.sort_unstable();
        map.dedup();
        let sub = ColoredClique::from_fn(map.len(), |i, j| self.color(map[i], map[j]))?;
        Ok((sub, map))
    }

    /// The uncolored graph `G(α)` of all edges of color `c`.
    pub fn color_class(&self, c: Color) -> SimpleGraph {
        let edges: Vec<_> = self
            .edges()
            .filter(|&(_, _, x)| x == c)
            .map(|(u, v, _)| (u, v))
            .collect();
        SimpleGraph::new(self.n, &edges).expect("clique edges are valid")
    }

    /// Row-major color matrix with zeros on the diagonal.
    pub fn to_matrix(&self) -> Vec<Vec<Color>> {
        (0..self.n)
            .map(|u| {
                (0..self.n)
                    .map(|v| if u == v { 0 } else { self.color(u, v) })
                    .collect()
            })
            .collect()
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<ColoredClique> {
        if perm.len() != self.n {
            return Err(Error::Shape("permutation length differs from order".into()));
        }
        let mut inv = vec![usize::MAX; self.n];
        for (v, &p) in perm.iter().enumerate() {
            if p >= self.n || inv[p] != usize::MAX {
                return Err(Error::Shape("not a permutation".into()));
            }
            inv[p] = v;
        }
        ColoredClique::from_fn(self.n, |a, b| self.color(inv[a], inv[b]))
    }
}
