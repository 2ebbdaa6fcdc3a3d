use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::model::{Color, ColoredClique, Vertex};

/// Largest order checked over every subset; the exhaustive scan keeps
/// color sets in a `u128`, and `n(n−1)/2 ≤ 128` holds up to 16.
pub const EXHAUSTIVE_CAP: usize = 15;
/// Number of seeded random larger subsets drawn above the cutoff.
pub const SAMPLE_SIZE: usize = 10_000;
const SAMPLE_SEED: u64 = 0;
const SMALL_SUBSET: usize = 5;

/// Outcome of the two subset conditions that characterize Gallai cliques:
///
/// - disjoint `b`, `c`: `|colors(b,c) ∖ colors(b,b)| ≤ |c|`;
/// - any `b`: `|colors(b,b)| ≤ |b| − 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetReport {
    pub exhaustive: bool,
    pub subsets_checked: u64,
    /// First `(b, c)` violating the disjoint-pair condition.
    pub cross_violation: Option<(Vec<Vertex>, Vec<Vertex>)>,
    /// First `b` violating the inner-color budget.
    pub inner_violation: Option<Vec<Vertex>>,
}

impl SubsetReport {
    pub fn passed(&self) -> bool {
        self.cross_violation.is_none() && self.inner_violation.is_none()
    }
}

/// Evaluates both conditions over every subset when
/// `n ≤ min(cutoff, EXHAUSTIVE_CAP)`. Larger cliques get a deterministic
/// sample: every subset of at most five vertices (every split of it into
/// `b` and `c` for the disjoint-pair condition) plus [`SAMPLE_SIZE`] random
/// larger subsets drawn with seed 0, each with one random split.
pub fn check_subset_conditions(k: &ColoredClique, cutoff: usize) -> SubsetReport {
    if k.order() <= cutoff.min(EXHAUSTIVE_CAP) {
        exhaustive(k)
    } else {
        sampled(k)
    }
}

fn bits(mask: u32) -> Vec<Vertex> {
    (0..32).filter(|&i| mask >> i & 1 == 1).collect()
}

fn exhaustive(k: &ColoredClique) -> SubsetReport {
    let n = k.order();
    let full = (1u32 << n) - 1;
    let size = 1usize << n;
    // to[v][b]: colors on edges from v into b (v ∉ b contributes nothing to itself).
    let mut to = vec![vec![0u128; size]; n];
    for (v, row) in to.iter_mut().enumerate() {
        for b in 1..size {
            let low = b.trailing_zeros() as usize;
            let rest = b & (b - 1);
            row[b] = row[rest]
                | if low == v {
                    0
                } else {
                    1u128 << k.color(v, low)
                };
        }
    }
    let mut inner = vec![0u128; size];
    for b in 1..size {
        let low = b.trailing_zeros() as usize;
        let rest = b & (b - 1);
        inner[b] = inner[rest] | to[low][rest];
    }
    let inner_violation = (1..size)
        .find(|&b| inner[b].count_ones() + 1 > b.count_ones())
        .map(|b| bits(b as u32));
    let cross_violation = (1..size as u32).into_par_iter().find_map_first(|b| {
        let comp = full & !b;
        let mut c = comp;
        // Submasks in decreasing order; the least one is found last.
        let mut found = None;
        while c != 0 {
            let mut cross = 0u128;
            let mut rest = c;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                cross |= to[v][b as usize];
                rest &= rest - 1;
            }
            if (cross & !inner[b as usize]).count_ones() > c.count_ones() {
                found = Some(c);
            }
            c = (c - 1) & comp;
        }
        found.map(|c| (bits(b), bits(c)))
    });
    let pairs: u64 = 3u64.pow(n as u32) + 1 - 2u64.pow(n as u32 + 1);
    SubsetReport {
        exhaustive: true,
        subsets_checked: size as u64 - 1 + pairs,
        cross_violation,
        inner_violation,
    }
}

fn inner_colors(k: &ColoredClique, b: &[Vertex]) -> Vec<Color> {
    let mut out = Vec::new();
    for (i, &u) in b.iter().enumerate() {
        for &v in &b[i + 1..] {
            out.push(k.color(u, v));
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

fn inner_ok(k: &ColoredClique, b: &[Vertex]) -> bool {
    inner_colors(k, b).len() < b.len().max(1)
}

fn cross_ok(k: &ColoredClique, b: &[Vertex], c: &[Vertex]) -> bool {
    let inner = inner_colors(k, b);
    let mut cross: Vec<Color> = b
        .iter()
        .flat_map(|&u| c.iter().map(move |&v| k.color(u, v)))
        .filter(|x| inner.binary_search(x).is_err())
        .collect();
    cross.sort_unstable();
    cross.dedup();
    cross.len() <= c.len()
}

/// Splits `s` by the bits of `mask` (bit `i` set sends `s[i]` to `b`).
fn split(s: &[Vertex], mask: u32) -> (Vec<Vertex>, Vec<Vertex>) {
    let (mut b, mut c) = (Vec::new(), Vec::new());
    for (i, &v) in s.iter().enumerate() {
        if mask >> i & 1 == 1 {
            b.push(v);
        } else {
            c.push(v);
        }
    }
    (b, c)
}

fn combinations(n: usize, r: usize) -> Vec<Vec<Vertex>> {
    fn rec(n: usize, r: usize, start: usize, cur: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            if n - v < r - cur.len() {
                break;
            }
            cur.push(v);
            rec(n, r, v + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, r, 0, &mut Vec::new(), &mut out);
    out
}

fn sampled(k: &ColoredClique) -> SubsetReport {
    let n = k.order();
    let mut subsets: Vec<Vec<Vertex>> = (1..=SMALL_SUBSET.min(n))
        .flat_map(|r| combinations(n, r))
        .collect();
    let small = subsets.len();
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
    let mut splits: Vec<Vec<(Vec<Vertex>, Vec<Vertex>)>> = Vec::new();
    if n > SMALL_SUBSET {
        for _ in 0..SAMPLE_SIZE {
            let size = rng.gen_range(SMALL_SUBSET + 1..=n);
            let mut s = sample(&mut rng, n, size).into_vec();
            s.sort_unstable();
            let cut = rng.gen_range(1..size);
            let mut shuffled = s.clone();
            rand::seq::SliceRandom::shuffle(shuffled.as_mut_slice(), &mut rng);
            let mut b = shuffled[..cut].to_vec();
            let mut c = shuffled[cut..].to_vec();
            b.sort_unstable();
            c.sort_unstable();
            subsets.push(s);
            splits.push(vec![(b, c)]);
        }
    }
    let inner_violation = subsets.par_iter().find_first(|b| !inner_ok(k, b)).cloned();
    let small_cross = subsets[..small].par_iter().find_map_first(|s| {
        let t = s.len() as u32;
        (1..(1u32 << t) - 1)
            .map(|mask| split(s, mask))
            .find(|(b, c)| !cross_ok(k, b, c))
    });
    let cross_violation = small_cross.or_else(|| {
        splits
            .iter()
            .flatten()
            .find(|(b, c)| !cross_ok(k, b, c))
            .cloned()
    });
    let small_pairs: u64 = subsets[..small].iter().map(|s| (1u64 << s.len()) - 2).sum();
    SubsetReport {
        exhaustive: false,
        subsets_checked: (subsets.len() as u64) + small_pairs + splits.len() as u64,
        cross_violation,
        inner_violation,
    }
}
