//! Colorful cycles, spectra, and the monoid `ℕ(2)` with `m∘n = m+n−2`.
//!
//! A spectrum is the set of lengths `n ≥ 2` for which a colored clique has
//! no colorful `n`-cycle. It always contains 2 and every length above the
//! vertex count, so it is stored as finitely many absent lengths plus the
//! point from which every length is present.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::model::{ColoredClique, Cycle, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Spectrum {
    exceptions: BTreeSet<usize>,
    solid_from: usize,
}

impl Spectrum {
    /// `exceptions` are the lengths `≥ 3` that are absent. `solid_from` is
    /// lowered to the least value consistent with the exceptions.
    pub fn new(exceptions: BTreeSet<usize>, solid_from: usize) -> Result<Self> {
        if let Some(&e) = exceptions.iter().find(|&&e| e < 3) {
            return Err(Error::InvalidArgument(format!(
                "{e} can never be an exception"
            )));
        }
        if let Some(&e) = exceptions.iter().find(|&&e| e >= solid_from) {
            return Err(Error::InvalidArgument(format!(
                "exception {e} is not below solid_from={solid_from}"
            )));
        }
        let solid_from = exceptions.last().map_or(2, |&m| m + 1);
        Ok(Spectrum {
            exceptions,
            solid_from,
        })
    }

    /// The spectrum containing every length.
    pub fn full() -> Self {
        Spectrum {
            exceptions: BTreeSet::new(),
            solid_from: 2,
        }
    }

    pub fn exceptions(&self) -> &BTreeSet<usize> {
        &self.exceptions
    }

    pub fn solid_from(&self) -> usize {
        self.solid_from
    }

    pub fn contains(&self, len: usize) -> bool {
        len >= 2 && !self.exceptions.contains(&len)
    }

    /// Members in `[2, limit]`.
    pub fn members_up_to(&self, limit: usize) -> BTreeSet<usize> {
        (2..=limit).filter(|&l| self.contains(l)).collect()
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ex: Vec<String> = self.exceptions.iter().map(|e| e.to_string()).collect();
        write!(
            f,
            "spectrum exceptions=[{}] solid_from={}",
            ex.join(","),
            self.solid_from
        )
    }
}

/// Searches for a colorful cycle with exactly `len` vertices and returns the
/// first one found in canonical enumeration order.
///
/// Each undirected cycle is visited once: it starts at its least vertex and
/// its second vertex is smaller than its last. Colors along the partial path
/// are tracked so that any repeated color prunes the branch.
pub fn has_colorful_cycle(k: &ColoredClique, len: usize) -> Result<Option<Cycle>> {
    if len < 3 {
        return Err(Error::InvalidArgument(format!(
            "colorful cycles have at least 3 vertices, got {len}"
        )));
    }
    let n = k.order();
    if len > n || len > k.palette_size() {
        return Ok(None);
    }
    let mut search = CycleSearch {
        k,
        len,
        path: Vec::with_capacity(len),
        on_path: vec![false; n],
        used: vec![false; k.palette_size()],
    };
    for start in 0..=n - len {
        search.path.push(start);
        search.on_path[start] = true;
        if search.extend() {
            return Ok(Some(Cycle::new(search.path)?));
        }
        search.on_path[start] = false;
        search.path.pop();
    }
    Ok(None)
}

struct CycleSearch<'a> {
    k: &'a ColoredClique,
    len: usize,
    path: Vec<Vertex>,
    on_path: Vec<bool>,
    used: Vec<bool>,
}

impl CycleSearch<'_> {
    /// On success the full cycle is left in `path`.
    fn extend(&mut self) -> bool {
        let start = self.path[0];
        let last = *self.path.last().unwrap();
        if self.path.len() == self.len {
            if self.path[1] > last {
                return false;
            }
            return !self.used[self.k.color(last, start) as usize];
        }
        for next in start + 1..self.k.order() {
            if self.on_path[next] {
                continue;
            }
            let c = self.k.color(last, next) as usize;
            if self.used[c] {
                continue;
            }
            self.used[c] = true;
            self.on_path[next] = true;
            self.path.push(next);
            if self.extend() {
                return true;
            }
            self.path.pop();
            self.on_path[next] = false;
            self.used[c] = false;
        }
        false
    }
}

/// The exact spectrum of `k`.
pub fn spectrum(k: &ColoredClique) -> Spectrum {
    let exceptions: BTreeSet<usize> = (3..=k.order())
        .filter(|&len| has_colorful_cycle(k, len).expect("len >= 3").is_some())
        .collect();
    let solid_from = exceptions.last().map_or(2, |&m| m + 1);
    Spectrum::new(exceptions, solid_from).expect("exceptions are in range")
}

/// `m∘n = m+n−2`.
pub fn compose(m: usize, n: usize) -> usize {
    m + n - 2
}

/// The submonoid of `ℕ(2)` generated by `generators` (2 is the identity),
/// restricted to `[2, limit]`.
pub fn monoid_closure(generators: &BTreeSet<usize>, limit: usize) -> Result<BTreeSet<usize>> {
    if limit < 2 {
        return Err(Error::InvalidArgument(format!(
            "limit must be at least 2, got {limit}"
        )));
    }
    if let Some(&g) = generators.iter().find(|&&g| g < 2) {
        return Err(Error::InvalidArgument(format!(
            "{g} is not an element of N(2)"
        )));
    }
    // Shift to the additive monoid: n ↦ n − 2.
    let steps: Vec<usize> = generators
        .iter()
        .map(|g| g - 2)
        .filter(|&s| s > 0)
        .collect();
    let top = limit - 2;
    let mut reach = vec![false; top + 1];
    reach[0] = true;
    for x in 1..=top {
        reach[x] = steps.iter().any(|&s| s <= x && reach[x - s]);
    }
    Ok((0..=top).filter(|&x| reach[x]).map(|x| x + 2).collect())
}

/// Checks the laws every realizable spectrum satisfies: closure under `∘`,
/// `3 ∈ S` forces everything, and `4 ∈ S` forces
/// `S = {2, 4, 6, …, m−1, m, m+1, …}` for some odd `m ≥ 3`.
pub fn check_spectrum_laws(s: &Spectrum) -> bool {
    // Pairs with either factor at or above `solid_from` compose to a member.
    let below: Vec<usize> = (2..s.solid_from()).filter(|&l| s.contains(l)).collect();
    let closed = below
        .iter()
        .all(|&a| below.iter().all(|&b| s.contains(compose(a, b))));
    if !closed {
        return false;
    }
    if s.contains(3) && !s.exceptions().is_empty() {
        return false;
    }
    if s.contains(4) {
        // Exceptions must be exactly the odd numbers 3, 5, …, m − 2.
        let expected: BTreeSet<usize> = (3..s.solid_from()).step_by(2).collect();
        if *s.exceptions() != expected {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    #[test]
    fn rainbow_triangle() {
        let k = ColoredClique::rainbow(3).unwrap();
        let c = has_colorful_cycle(&k, 3).unwrap().unwrap();
        assert_eq!(c.vertices(), &[0, 1, 2]);
        let s = spectrum(&k);
        assert_eq!(s.exceptions(), &set(&[3]));
        assert_eq!(s.solid_from(), 4);
        assert_eq!(s.to_string(), "spectrum exceptions=[3] solid_from=4");
    }

    #[test]
    fn monochromatic_has_full_spectrum() {
        let s = spectrum(&ColoredClique::monochromatic(4).unwrap());
        assert_eq!(s, Spectrum::full());
        assert_eq!(s.to_string(), "spectrum exceptions=[] solid_from=2");
    }

    #[test]
    fn short_lengths_rejected() {
        let k = ColoredClique::rainbow(3).unwrap();
        assert!(has_colorful_cycle(&k, 2).is_err());
        assert_eq!(has_colorful_cycle(&k, 4).unwrap(), None);
    }

    #[test]
    fn closure_examples() {
        assert_eq!(
            monoid_closure(&set(&[4]), 12).unwrap(),
            set(&[2, 4, 6, 8, 10, 12])
        );
        assert_eq!(
            monoid_closure(&set(&[3]), 6).unwrap(),
            set(&[2, 3, 4, 5, 6])
        );
        assert_eq!(monoid_closure(&set(&[]), 5).unwrap(), set(&[2]));
        assert_eq!(
            monoid_closure(&set(&[5, 6]), 12).unwrap(),
            set(&[2, 5, 6, 8, 9, 10, 11, 12])
        );
        assert!(monoid_closure(&set(&[]), 1).is_err());
    }

    #[test]
    fn law_examples() {
        assert!(check_spectrum_laws(&Spectrum::new(set(&[3]), 4).unwrap()));
        assert!(!check_spectrum_laws(&Spectrum::new(set(&[4]), 5).unwrap()));
        assert!(check_spectrum_laws(
            &Spectrum::new(set(&[3, 5]), 6).unwrap()
        ));
        assert!(!check_spectrum_laws(&Spectrum::new(set(&[5]), 6).unwrap()));
        assert!(check_spectrum_laws(&Spectrum::full()));
    }

    #[test]
    fn spectrum_normalizes_solid_from() {
        let s = Spectrum::new(set(&[3]), 9).unwrap();
        assert_eq!(s.solid_from(), 4);
        assert!(Spectrum::new(set(&[2]), 9).is_err());
        assert!(Spectrum::new(set(&[5]), 5).is_err());
    }
}
