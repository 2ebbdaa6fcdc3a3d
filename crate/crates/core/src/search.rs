//! Exhaustive search for a coloring of `K_n` with a colorful cycle of a
//! required length and no colorful cycle of any forbidden length.
//!
//! The required cycle is fixed on vertices `0..required` in order and its
//! edges receive colors `0..required`. Every other edge is a variable whose
//! value is an existing color or one fresh color (the next unused id); fresh
//! ids are interchangeable, so trying a single one removes the palette
//! relabeling symmetry. Each forbidden-length cycle is a constraint "two of
//! my edges share a color". Forward checking narrows the last free edge of
//! a cycle to the colors already on it, and the most constrained edge is
//! branched on first.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::model::{Color, ColoredClique, Vertex};
use crate::spectrum::has_colorful_cycle;

/// Colors are tracked in a `u128`, which bounds the edge count.
pub const MAX_ORDER: usize = 16;
const MAX_CONSTRAINTS: usize = 5_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Sat { witness: ColoredClique, nodes: u64 },
    Unsat { nodes: u64 },
    Timeout { nodes: u64 },
}

impl SearchOutcome {
    pub fn nodes(&self) -> u64 {
        match *self {
            SearchOutcome::Sat { nodes, .. }
            | SearchOutcome::Unsat { nodes }
            | SearchOutcome::Timeout { nodes } => nodes,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            SearchOutcome::Sat { .. } => "SAT",
            SearchOutcome::Unsat { .. } => "UNSAT",
            SearchOutcome::Timeout { .. } => "TIMEOUT",
        }
    }
}

pub fn search_coloring(
    n: usize,
    forbidden: &BTreeSet<usize>,
    required: usize,
    budget: u64,
) -> Result<SearchOutcome> {
    if !(3..=n).contains(&required) {
        return Err(Error::InvalidArgument(format!(
            "required length {required} must lie in [3, {n}]"
        )));
    }
    if let Some(&f) = forbidden.iter().find(|&&f| !(3..=n).contains(&f)) {
        return Err(Error::InvalidArgument(format!(
            "forbidden length {f} must lie in [3, {n}]"
        )));
    }
    if forbidden.contains(&required) {
        return Err(Error::InvalidArgument(format!(
            "length {required} is both required and forbidden"
        )));
    }
    if n > MAX_ORDER {
        return Err(Error::TooLarge {
            what: "search clique",
            n,
            cap: MAX_ORDER,
        });
    }
    let mut solver = Solver::new(n, forbidden, budget)?;
    let outcome = match solver.run(required) {
        Status::Found => {
            let witness = solver.witness();
            check_witness(&witness, forbidden, required)?;
            SearchOutcome::Sat {
                witness,
                nodes: solver.nodes,
            }
        }
        Status::Exhausted => SearchOutcome::Unsat {
            nodes: solver.nodes,
        },
        Status::Timeout => SearchOutcome::Timeout {
            nodes: solver.nodes,
        },
    };
    Ok(outcome)
}

fn check_witness(k: &ColoredClique, forbidden: &BTreeSet<usize>, required: usize) -> Result<()> {
    if has_colorful_cycle(k, required)?.is_none() {
        return Err(Error::Internal(
            "witness lacks the required colorful cycle".into(),
        ));
    }
    for &f in forbidden {
        if let Some(c) = has_colorful_cycle(k, f)? {
            return Err(Error::Internal(format!(
                "witness has forbidden colorful cycle {c}"
            )));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Status {
    Found,
    Exhausted,
    Timeout,
}

/// `None` means unrestricted: any existing color or a fresh one.
type Domain = Option<u128>;

struct Solver {
    n: usize,
    edge_index: Vec<usize>,
    /// Flattened constraint cycles, `cycle_len[i]` edges each.
    cycle_edges: Vec<u16>,
    cycle_start: Vec<usize>,
    cycles_of_edge: Vec<Vec<u32>>,
    assign: Vec<Option<u8>>,
    domain: Vec<Domain>,
    trail: Vec<(usize, Domain)>,
    colors_used: usize,
    nodes: u64,
    budget: u64,
}

impl Solver {
    fn new(n: usize, forbidden: &BTreeSet<usize>, budget: u64) -> Result<Self> {
        let mut edge_index = vec![usize::MAX; n * n];
        let mut e = 0;
        for u in 0..n {
            for v in u + 1..n {
                edge_index[u * n + v] = e;
                edge_index[v * n + u] = e;
                e += 1;
            }
        }
        let mut solver = Solver {
            n,
            edge_index,
            cycle_edges: Vec::new(),
            cycle_start: vec![0],
            cycles_of_edge: vec![Vec::new(); e],
            assign: vec![None; e],
            domain: vec![None; e],
            trail: Vec::new(),
            colors_used: 0,
            nodes: 0,
            budget,
        };
        for &len in forbidden {
            solver.add_cycles(len)?;
        }
        Ok(solver)
    }

    fn edge(&self, u: Vertex, v: Vertex) -> usize {
        self.edge_index[u * self.n + v]
    }

    /// Registers every `len`-cycle once (least vertex first, second vertex
    /// below the last).
    fn add_cycles(&mut self, len: usize) -> Result<()> {
        let mut path = Vec::with_capacity(len);
        let mut on = vec![false; self.n];
        for start in 0..=self.n - len {
            path.push(start);
            on[start] = true;
            self.walk(len, &mut path, &mut on)?;
            on[start] = false;
            path.pop();
        }
        Ok(())
    }

    fn walk(&mut self, len: usize, path: &mut Vec<Vertex>, on: &mut [bool]) -> Result<()> {
        if path.len() == len {
            if path[1] < path[len - 1] {
                let id = self.cycle_start.len() - 1;
                if id >= MAX_CONSTRAINTS {
                    return Err(Error::InvalidArgument(format!(
                        "more than {MAX_CONSTRAINTS} forbidden cycles; instance too large"
                    )));
                }
                for i in 0..len {
                    let e = self.edge(path[i], path[(i + 1) % len]);
                    self.cycle_edges.push(e as u16);
                    self.cycles_of_edge[e].push(id as u32);
                }
                self.cycle_start.push(self.cycle_edges.len());
            }
            return Ok(());
        }
        for next in path[0] + 1..self.n {
            if !on[next] {
                on[next] = true;
                path.push(next);
                self.walk(len, path, on)?;
                path.pop();
                on[next] = false;
            }
        }
        Ok(())
    }

    fn run(&mut self, required: usize) -> Status {
        for i in 0..required {
            let e = self.edge(i, (i + 1) % required);
            let c = self.colors_used;
            if !self.assign_edge(e, c) {
                return Status::Exhausted;
            }
        }
        self.dfs()
    }

    fn domain_size(&self, e: usize) -> u32 {
        match self.domain[e] {
            None => self.colors_used as u32 + 1,
            Some(mask) => mask.count_ones(),
        }
    }

    fn dfs(&mut self) -> Status {
        let pick = (0..self.assign.len())
            .filter(|&e| self.assign[e].is_none())
            .min_by_key(|&e| self.domain_size(e));
        let Some(e) = pick else {
            return Status::Found;
        };
        let values: Vec<usize> = match self.domain[e] {
            None => (0..=self.colors_used).collect(),
            Some(mask) => (0..128).filter(|&c| mask >> c & 1 == 1).collect(),
        };
        for c in values {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Status::Timeout;
            }
            let mark = self.trail.len();
            let colors_before = self.colors_used;
            if self.assign_edge(e, c) {
                match self.dfs() {
                    Status::Exhausted => {}
                    other => return other,
                }
            }
            self.undo(mark);
            self.assign[e] = None;
            self.colors_used = colors_before;
        }
        Status::Exhausted
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (e, d) = self.trail.pop().unwrap();
            self.domain[e] = d;
        }
    }

    /// Assigns and forward-checks; returns false on a conflict. The caller
    /// restores state on failure.
    fn assign_edge(&mut self, e: usize, c: usize) -> bool {
        self.assign[e] = Some(c as u8);
        if c == self.colors_used {
            self.colors_used += 1;
        }
        for idx in 0..self.cycles_of_edge[e].len() {
            let id = self.cycles_of_edge[e][idx] as usize;
            let edges = &self.cycle_edges[self.cycle_start[id]..self.cycle_start[id + 1]];
            let mut seen: u128 = 0;
            let mut free = None;
            let mut free_count = 0;
            let mut repeated = false;
            for &x in edges {
                match self.assign[x as usize] {
                    Some(col) => {
                        let bit = 1u128 << col;
                        if seen & bit != 0 {
                            repeated = true;
                            break;
                        }
                        seen |= bit;
                    }
                    None => {
                        free_count += 1;
                        free = Some(x as usize);
                    }
                }
            }
            if repeated {
                continue;
            }
            match (free_count, free) {
                (0, _) => return false,
                (1, Some(x)) => {
                    let old = self.domain[x];
                    let narrowed = old.map_or(seen, |m| m & seen);
                    if narrowed == 0 {
                        return false;
                    }
                    if old != Some(narrowed) {
                        self.trail.push((x, old));
                        self.domain[x] = Some(narrowed);
                    }
                }
                _ => {}
            }
        }
        true
    }

    fn witness(&self) -> ColoredClique {
        ColoredClique::from_fn(self.n, |u, v| {
            self.assign[self.edge(u, v)].expect("all edges assigned") as Color
        })
        .expect("n >= 3")
    }
}
