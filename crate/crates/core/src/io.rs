//! Line-oriented text formats.
//!
//! - `.cgr`: `cgraph <n> <k>` followed by all `n(n-1)/2` lines `<u> <v> <c>`
//!   in lexicographic `(u, v)` order with `u < v`.
//! - `.ug`: `graph <n> <m>` followed by `m` lines `<u> <v>`, `u < v`, in
//!   strictly increasing lexicographic order.
//! - `.gt`: `gtree <node_count>`, then `node <id> parent <pid|->` for every
//!   node in id order, `sib <id1> <id2> <color>` for every sibling pair
//!   (`id1 < id2`, lexicographic), and `leaf <id> vertex <v>` for every leaf.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::gallai::GallaiTree;
use crate::model::{Color, ColoredClique, RawColoring, SimpleGraph};

/// Non-blank lines with their 1-based line numbers; `#` starts a comment.
fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then(|| (i + 1, l.split_whitespace().collect()))
    })
}

fn num<T: std::str::FromStr>(line: usize, tok: &str) -> Result<T> {
    tok.parse().map_err(|_| {
        Error::parse(
            line,
            format!("expected a non-negative integer, got `{tok}`"),
        )
    })
}

fn header<'a>(
    it: &mut impl Iterator<Item = (usize, Vec<&'a str>)>,
    keyword: &str,
    arity: usize,
) -> Result<(usize, Vec<&'a str>)> {
    match it.next() {
        Some((line, toks)) if toks.first() == Some(&keyword) && toks.len() == arity + 1 => {
            Ok((line, toks))
        }
        Some((line, _)) => Err(Error::parse(line, format!("expected `{keyword}` header"))),
        None => Err(Error::parse(0, "empty input")),
    }
}

pub fn write_cgr(k: &ColoredClique) -> String {
    let mut out = format!("cgraph {} {}\n", k.order(), k.palette_size());
    for (u, v, c) in k.edges() {
        writeln!(out, "{u} {v} {c}").unwrap();
    }
    out
}

pub fn parse_cgr(text: &str) -> Result<ColoredClique> {
    let mut it = lines(text);
    let (hline, h) = header(&mut it, "cgraph", 2)?;
    let n: usize = num(hline, h[1])?;
    let k: usize = num(hline, h[2])?;
    if n == 0 {
        return Err(Error::parse(
            hline,
            "a colored clique needs at least one vertex",
        ));
    }
    let mut raw = RawColoring::new(n, k);
    let mut expected = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    for (line, toks) in it {
        if toks.len() != 3 {
            return Err(Error::parse(line, "expected `<u> <v> <c>`"));
        }
        let u: usize = num(line, toks[0])?;
        let v: usize = num(line, toks[1])?;
        let c: Color = num(line, toks[2])?;
        if u >= n || v >= n {
            return Err(Error::parse(line, format!("vertex out of range for n={n}")));
        }
        if (c as usize) >= k {
            return Err(Error::parse(
                line,
                format!("color {c} out of range for k={k}"),
            ));
        }
        match expected.next() {
            Some(e) if e == (u, v) => raw.set_edge(u, v, c),
            Some((eu, ev)) => {
                let why = if u >= v {
                    "edges must be written with u < v".to_string()
                } else if (u, v) < (eu, ev) {
                    format!("duplicate or out-of-order edge {u} {v}")
                } else {
                    format!("missing edge {eu} {ev}")
                };
                return Err(Error::parse(line, why));
            }
            None => return Err(Error::parse(line, "more edge lines than n(n-1)/2")),
        }
    }
    if let Some((u, v)) = expected.next() {
        return Err(Error::parse(0, format!("missing edge {u} {v}")));
    }
    raw.build()
}

pub fn write_ug(g: &SimpleGraph) -> String {
    let edges = g.edges();
    let mut out = format!("graph {} {}\n", g.order(), edges.len());
    for (u, v) in edges {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn parse_ug(text: &str) -> Result<SimpleGraph> {
    let mut it = lines(text);
    let (hline, h) = header(&mut it, "graph", 2)?;
    let n: usize = num(hline, h[1])?;
    let m: usize = num(hline, h[2])?;
    let mut g = SimpleGraph::empty(n);
    let mut last: Option<(usize, usize)> = None;
    let mut count = 0;
    for (line, toks) in it {
        if toks.len() != 2 {
            return Err(Error::parse(line, "expected `<u> <v>`"));
        }
        let u: usize = num(line, toks[0])?;
        let v: usize = num(line, toks[1])?;
        if u >= v {
            return Err(Error::parse(line, "edges must be written with u < v"));
        }
        if v >= n {
            return Err(Error::parse(line, format!("vertex out of range for n={n}")));
        }
        if last.is_some_and(|l| l >= (u, v)) {
            return Err(Error::parse(
                line,
                format!("duplicate or out-of-order edge {u} {v}"),
            ));
        }
        last = Some((u, v));
        g.add_edge(u, v)?;
        count += 1;
    }
    if count != m {
        return Err(Error::parse(
            hline,
            format!("header declares {m} edges, found {count}"),
        ));
    }
    Ok(g)
}

pub fn write_gt(t: &GallaiTree) -> String {
    let mut out = format!("gtree {}\n", t.node_count());
    for id in 0..t.node_count() {
        match t.parent(id) {
            Some(p) => writeln!(out, "node {id} parent {p}").unwrap(),
            None => writeln!(out, "node {id} parent -").unwrap(),
        }
    }
    for (a, b, c) in t.sibling_colors() {
        writeln!(out, "sib {a} {b} {c}").unwrap();
    }
    for id in 0..t.node_count() {
        if let Some(v) = t.leaf_vertex(id) {
            writeln!(out, "leaf {id} vertex {v}").unwrap();
        }
    }
    out
}

/// Parses a `.gt` file; node, sib and leaf lines may appear in any order
/// after the header. All tree invariants are validated.
pub fn parse_gt(text: &str) -> Result<GallaiTree> {
    let mut it = lines(text);
    let (hline, h) = header(&mut it, "gtree", 1)?;
    let count: usize = num(hline, h[1])?;
    let mut parents: Vec<Option<Option<usize>>> = vec![None; count];
    let mut sibs = Vec::new();
    let mut leaves = Vec::new();
    let id_in_range = |line: usize, id: usize| {
        if id < count {
            Ok(id)
        } else {
            Err(Error::parse(line, format!("node id {id} out of range")))
        }
    };
    for (line, toks) in it {
        match toks.as_slice() {
            ["node", id, "parent", p] => {
                let id = id_in_range(line, num(line, id)?)?;
                let p = if *p == "-" {
                    None
                } else {
                    Some(id_in_range(line, num(line, p)?)?)
                };
                if parents[id].replace(p).is_some() {
                    return Err(Error::parse(line, format!("node {id} declared twice")));
                }
            }
            ["sib", a, b, c] => {
                let a = id_in_range(line, num(line, a)?)?;
                let b = id_in_range(line, num(line, b)?)?;
                if a >= b {
                    return Err(Error::parse(
                        line,
                        "sibling pairs must be written with id1 < id2",
                    ));
                }
                sibs.push((a, b, num::<Color>(line, c)?));
            }
            ["leaf", id, "vertex", v] => {
                let id = id_in_range(line, num(line, id)?)?;
                leaves.push((id, num(line, v)?));
            }
            _ => return Err(Error::parse(line, "expected a node, sib or leaf line")),
        }
    }
    let parents = parents
        .into_iter()
        .enumerate()
        .map(|(id, p)| p.ok_or_else(|| Error::parse(0, format!("node {id} has no node line"))))
        .collect::<Result<Vec<_>>>()?;
    GallaiTree::from_parts(parents, &leaves, &sibs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cgr_round_trip_and_errors() {
        let k = ColoredClique::from_fn(3, |u, v| (u + v) as Color % 2).unwrap();
        let text = write_cgr(&k);
        assert_eq!(text, "cgraph 3 2\n0 1 1\n0 2 0\n1 2 1\n");
        assert_eq!(parse_cgr(&text).unwrap(), k);

        let dup = "cgraph 3 1\n0 1 0\n0 1 0\n1 2 0\n";
        assert!(matches!(parse_cgr(dup), Err(Error::Parse { line: 3, .. })));
        let gap = "cgraph 3 1\n0 1 0\n1 2 0\n";
        assert!(matches!(parse_cgr(gap), Err(Error::Parse { line: 3, .. })));
        let range = "cgraph 3 1\n0 1 0\n0 2 1\n1 2 0\n";
        assert!(parse_cgr(range).is_err());
        let unused = "cgraph 3 2\n0 1 0\n0 2 0\n1 2 0\n";
        assert_eq!(parse_cgr(unused), Err(Error::UnusedColor(1)));
        assert!(parse_cgr("cgraph 1 0\n").is_ok());
    }

    #[test]
    fn ug_round_trip_and_errors() {
        let g = SimpleGraph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let text = write_ug(&g);
        assert_eq!(text, "graph 4 3\n0 1\n1 2\n2 3\n");
        assert_eq!(parse_ug(&text).unwrap(), g);
        assert!(parse_ug("graph 3 2\n1 2\n0 1\n").is_err());
        assert!(parse_ug("graph 3 1\n1 1\n").is_err());
        assert!(parse_ug("graph 3 2\n0 1\n").is_err());
        assert!(parse_ug("graph 3 1\n0 3\n").is_err());
    }
}
