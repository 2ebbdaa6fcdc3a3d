//! End-to-end check suites, shared by the `verify` command and the
//! acceptance tests. Each suite reports pass/fail with a one-line detail and
//! its wall time; time limits are left to the caller.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::constructions::{
    even_gon_no_preceding, extremal_exact_gallai, gallai_host, named_graph, odd_gon_no_squares,
    NamedGraph,
};
use crate::gallai::{
    check_subset_conditions, decompose, is_exact_gallai, is_gallai, recompose,
    verify_exact_structure, EXHAUSTIVE_CAP,
};
use crate::generate::{
    all_graphs, connected_nonisomorphic, nonisomorphic_graphs, random_connected_graph,
    random_exact_gallai, random_tree_clique,
};
use crate::hom::{
    all_full_homs, brute_force_full_hom, classify_monochrome, is_exact_gallai_monochrome,
    is_full_hom, is_reduced, monochromes, reduced_form, spanning_monochrome, type_name,
    DualityResult,
};
use crate::model::{ColoredClique, SimpleGraph};
use crate::search::{search_coloring, SearchOutcome};
use crate::spectrum::{has_colorful_cycle, spectrum, Spectrum};

pub const TREE_CLIQUES: u64 = 500;
pub const TREE_MAX_N: usize = 12;
pub const EXACT_CLIQUES: u64 = 200;
pub const EXACT_MAX_N: usize = 50;
pub const HOSTS: u64 = 100;
pub const HOST_MAX_N: usize = 20;
pub const DECAGON_BUDGET: u64 = 1_000_000_000;

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl std::fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} {} elapsed={:.3}s {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.elapsed.as_secs_f64(),
            self.detail
        )
    }
}

type Check = std::result::Result<String, String>;

fn run(name: &'static str, body: impl FnOnce() -> Check) -> SuiteReport {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let (passed, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    SuiteReport {
        name,
        passed,
        detail,
        elapsed,
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn colorful(k: &ColoredClique, len: usize) -> std::result::Result<bool, String> {
    has_colorful_cycle(k, len)
        .map(|c| c.is_some())
        .map_err(|e| e.to_string())
}

/// The suite names accepted by [`run_suite`].
pub const SUITES: [&str; 12] = [
    "odd-gon",
    "even-gon",
    "tree-cliques",
    "search-anchors",
    "decagon",
    "extremal",
    "ramsey-k6",
    "duality-6",
    "duality-7",
    "exact-monochromes",
    "spanning",
    "reduced-forms",
];

/// Runs one named suite; `None` for an unknown name.
pub fn run_suite(name: &str, seed: u64) -> Option<SuiteReport> {
    Some(match name {
        "odd-gon" => odd_gon(),
        "even-gon" => even_gon(),
        "tree-cliques" => tree_cliques(seed, TREE_CLIQUES),
        "search-anchors" => search_anchors(),
        "decagon" => decagon(DECAGON_BUDGET),
        "extremal" => extremal(),
        "ramsey-k6" => ramsey_k6(),
        "duality-6" => duality_labeled(6),
        "duality-7" => duality_connected(7),
        "exact-monochromes" => exact_monochromes(seed, EXACT_CLIQUES),
        "spanning" => spanning(seed),
        "reduced-forms" => reduced_forms(5),
        _ => return None,
    })
}

/// Odd polygons with no colorful 4-cycle, plus full spectra up to 7 vertices.
pub fn odd_gon() -> SuiteReport {
    run("odd-gon", || {
        for m in [3, 5, 7, 9] {
            let k = odd_gon_no_squares(m).map_err(|e| e.to_string())?;
            ensure(colorful(&k, m)?, || format!("m={m}: no colorful {m}-cycle"))?;
            ensure(!colorful(&k, 4)?, || format!("m={m}: colorful 4-cycle"))?;
        }
        let mut spectra = Vec::new();
        for m in [3, 5, 7] {
            let s = spectrum(&odd_gon_no_squares(m).map_err(|e| e.to_string())?);
            ensure(s.contains(4) && !s.contains(m), || format!("m={m}: {s}"))?;
            spectra.push(format!("m={m}:[{}]", fmt_set(s.exceptions())));
        }
        Ok(format!("exceptions {}", spectra.join(" ")))
    })
}

fn fmt_set(s: &BTreeSet<usize>) -> String {
    s.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Colorful `2m`-cycles without colorful `(2m-1)`-cycles.
pub fn even_gon() -> SuiteReport {
    run("even-gon", || {
        for m in [3, 4, 5] {
            let k = even_gon_no_preceding(m).map_err(|e| e.to_string())?;
            ensure(colorful(&k, 2 * m)?, || {
                format!("m={m}: no colorful {}-cycle", 2 * m)
            })?;
            ensure(!colorful(&k, 2 * m - 1)?, || {
                format!("m={m}: colorful {}-cycle", 2 * m - 1)
            })?;
        }
        Ok("m=3,4,5".into())
    })
}

/// Random tree 2-cliques: full spectrum, both subset conditions exhaustively,
/// and an exact decompose/recompose roundtrip.
pub fn tree_cliques(seed: u64, count: u64) -> SuiteReport {
    run("tree-cliques", || {
        let failures: Vec<String> = (0..count)
            .into_par_iter()
            .filter_map(|i| {
                let s = seed.wrapping_add(i);
                let k = random_tree_clique(s, TREE_MAX_N);
                check_tree_clique(&k)
                    .err()
                    .map(|e| format!("seed {s}: {e}"))
            })
            .collect();
        match failures.first() {
            Some(f) => Err(format!("{} failures, first {f}", failures.len())),
            None => Ok(format!("cliques={count}")),
        }
    })
}

fn check_tree_clique(k: &ColoredClique) -> std::result::Result<(), String> {
    ensure(spectrum(k) == Spectrum::full(), || {
        "spectrum has exceptions".into()
    })?;
    let report = check_subset_conditions(k, EXHAUSTIVE_CAP);
    ensure(report.exhaustive && report.passed(), || {
        format!("subset conditions: {report:?}")
    })?;
    let tree = decompose(k).map_err(|e| e.to_string())?;
    let back = recompose(&tree).map_err(|e| e.to_string())?;
    ensure(&back == k, || "roundtrip changed the coloring".into())
}

/// The two small search instances with known answers.
pub fn search_anchors() -> SuiteReport {
    run("search-anchors", || {
        let four = search_coloring(4, &BTreeSet::from([3]), 4, DECAGON_BUDGET)
            .map_err(|e| e.to_string())?;
        ensure(matches!(four, SearchOutcome::Unsat { .. }), || {
            format!("4/3/4 gave {}", four.label())
        })?;
        let six = search_coloring(6, &BTreeSet::from([5]), 6, DECAGON_BUDGET)
            .map_err(|e| e.to_string())?;
        ensure(matches!(six, SearchOutcome::Sat { .. }), || {
            format!("6/5/6 gave {}", six.label())
        })?;
        Ok(format!(
            "4/3/4 UNSAT nodes={} 6/5/6 SAT nodes={}",
            four.nodes(),
            six.nodes()
        ))
    })
}

/// No colorful 10-cycle without a colorful 5-cycle. A timeout fails the suite.
pub fn decagon(budget: u64) -> SuiteReport {
    run("decagon", || {
        let out =
            search_coloring(10, &BTreeSet::from([5]), 10, budget).map_err(|e| e.to_string())?;
        let line = format!("{} nodes={} budget={budget}", out.label(), out.nodes());
        match out {
            SearchOutcome::Unsat { .. } => Ok(line),
            _ => Err(line),
        }
    })
}

/// Extremal exact Gallai cliques have the stated orders.
pub fn extremal() -> SuiteReport {
    run("extremal", || {
        let expected = [2, 5, 10, 25, 50];
        for (k, &n) in (1..=5u32).zip(&expected) {
            let c = extremal_exact_gallai(k).map_err(|e| e.to_string())?;
            ensure(c.order() == n && c.palette_size() == k as usize, || {
                format!("k={k}: n={} colors={}", c.order(), c.palette_size())
            })?;
            ensure(is_exact_gallai(&c) && verify_exact_structure(&c), || {
                format!("k={k}: not exact Gallai")
            })?;
        }
        Ok("orders 2,5,10,25,50".into())
    })
}

/// No two-coloring of K6 is exact Gallai.
pub fn ramsey_k6() -> SuiteReport {
    run("ramsey-k6", || {
        let pairs: Vec<(usize, usize)> = (0..6)
            .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
            .collect();
        let hit = (0u32..1 << 15).into_par_iter().find_first(|&mask| {
            let mut m = [[0u32; 6]; 6];
            for (i, &(u, v)) in pairs.iter().enumerate() {
                m[u][v] = mask >> i & 1;
                m[v][u] = m[u][v];
            }
            let k = ColoredClique::from_fn(6, |u, v| m[u][v]).expect("complete");
            is_exact_gallai(&k)
        });
        match hit {
            None => Ok("colorings=32768 exact=0".into()),
            Some(mask) => Err(format!("mask {mask:#x} is exact Gallai")),
        }
    })
}

const EXACT_TYPES: [&str; 3] = ["P1", "P3", "C5"];

fn check_duality(g: &SimpleGraph, c5: &SimpleGraph) -> std::result::Result<Option<String>, String> {
    let result = classify_monochrome(g).map_err(|e| e.to_string())?;
    let oracle = brute_force_full_hom(g, c5).map_err(|e| e.to_string())?;
    ensure(result.is_hom() == oracle, || {
        format!("{g:?}: {result} but oracle {oracle}")
    })?;
    let exact = is_exact_gallai_monochrome(g).map_err(|e| e.to_string())?;
    ensure(exact == oracle, || {
        format!("{g:?}: exact-monochrome test disagrees")
    })?;
    match result {
        DualityResult::Hom(f) => {
            let t = type_name(g);
            ensure(f.codomain() == c5, || "codomain is not C5".into())?;
            ensure(EXACT_TYPES.contains(&t.as_str()), || {
                format!("{g:?}: hom with type {t}")
            })?;
            Ok(Some(t))
        }
        DualityResult::Witness {
            obstruction,
            vertices,
        } => {
            ensure(g.induced(&vertices) == obstruction.graph(), || {
                format!("{g:?}: {obstruction} witness is not induced")
            })?;
            Ok(None)
        }
    }
}

fn duality_over(graphs: Vec<SimpleGraph>) -> Check {
    let c5 = named_graph(NamedGraph::Cycle(5)).expect("valid");
    let outcomes: Vec<std::result::Result<Option<String>, String>> =
        graphs.par_iter().map(|g| check_duality(g, &c5)).collect();
    let mut types = BTreeSet::new();
    let mut homs = 0;
    for o in outcomes {
        if let Some(t) = o? {
            homs += 1;
            types.insert(t);
        }
    }
    let expected: BTreeSet<String> = EXACT_TYPES.iter().map(|s| s.to_string()).collect();
    ensure(types == expected, || format!("hom types {types:?}"))?;
    Ok(format!("graphs={} homs={homs}", graphs.len()))
}

/// The duality classifier against the oracle on every connected labeled
/// graph with 2 to `max_n` vertices.
pub fn duality_labeled(max_n: usize) -> SuiteReport {
    run("duality-6", || {
        let graphs: Vec<SimpleGraph> = (2..=max_n)
            .flat_map(all_graphs)
            .filter(|g| g.is_connected())
            .collect();
        duality_over(graphs)
    })
}

/// The duality classifier against the oracle on one representative of every
/// connected graph with exactly `n` vertices.
pub fn duality_connected(n: usize) -> SuiteReport {
    run("duality-7", || duality_over(connected_nonisomorphic(n)))
}

/// Every monochrome of a random exact Gallai clique has type P1, P3 or C5.
pub fn exact_monochromes(seed: u64, count: u64) -> SuiteReport {
    run("exact-monochromes", || {
        let mut total = 0;
        for i in 0..count {
            let s = seed.wrapping_add(i);
            let k = random_exact_gallai(s, EXACT_MAX_N);
            ensure(is_exact_gallai(&k), || {
                format!("seed {s}: generator not exact")
            })?;
            for m in monochromes(&k) {
                let t = type_name(&m.graph);
                ensure(EXACT_TYPES.contains(&t.as_str()), || {
                    format!("seed {s}: color {} monochrome of type {t}", m.color)
                })?;
                total += 1;
            }
        }
        Ok(format!("cliques={count} monochromes={total}"))
    })
}

/// Spanning monochromes of the tree and exact cliques, and hosts of random
/// connected graphs.
pub fn spanning(seed: u64) -> SuiteReport {
    run("spanning", || {
        let cliques = (0..TREE_CLIQUES)
            .map(|i| random_tree_clique(seed.wrapping_add(i), TREE_MAX_N))
            .chain(
                (0..EXACT_CLIQUES).map(|i| random_exact_gallai(seed.wrapping_add(i), EXACT_MAX_N)),
            );
        let mut checked = 0;
        for k in cliques {
            let m = spanning_monochrome(&k).map_err(|e| e.to_string())?;
            ensure(m.vertices.len() == k.order(), || {
                "monochrome does not span".into()
            })?;
            checked += 1;
        }
        for i in 0..HOSTS {
            let s = seed.wrapping_add(i);
            let h = random_connected_graph(s, HOST_MAX_N);
            let k = gallai_host(&h).map_err(|e| e.to_string())?;
            ensure(is_gallai(&k), || format!("seed {s}: host not Gallai"))?;
            let m = spanning_monochrome(&k).map_err(|e| e.to_string())?;
            ensure(m.color == 0 && m.graph == h, || {
                format!("seed {s}: spanning monochrome is not the graph")
            })?;
        }
        Ok(format!("cliques={checked} hosts={HOSTS}"))
    })
}

/// Reduced forms on every labeled graph with up to `max_n` vertices: reduced,
/// a full surjection, minimal among full surjective images; full maps out of
/// reduced graphs are injective.
pub fn reduced_forms(max_n: usize) -> SuiteReport {
    run("reduced-forms", || {
        let targets: Vec<SimpleGraph> = (1..=max_n).flat_map(nonisomorphic_graphs).collect();
        let graphs: Vec<SimpleGraph> = (1..=max_n).flat_map(all_graphs).collect();
        let outcomes: Vec<std::result::Result<u64, String>> = graphs
            .par_iter()
            .map(|g| check_reduced(g, &targets))
            .collect();
        let mut homs = 0;
        for o in outcomes {
            homs += o?;
        }
        Ok(format!(
            "graphs={} targets={} homs={homs}",
            graphs.len(),
            targets.len()
        ))
    })
}

fn check_reduced(g: &SimpleGraph, targets: &[SimpleGraph]) -> std::result::Result<u64, String> {
    let (g_hat, r) = reduced_form(g);
    ensure(is_reduced(&g_hat), || {
        format!("{g:?}: reduced form not reduced")
    })?;
    let full = is_full_hom(g, &g_hat, r.map()).map_err(|e| e.to_string())?;
    ensure(full && r.is_surjective(), || {
        format!("{g:?}: r is not a full surjection")
    })?;
    let reduced = is_reduced(g);
    let mut count = 0;
    for h in targets {
        for map in all_full_homs(g, h).map_err(|e| e.to_string())? {
            count += 1;
            let mut hit = vec![false; h.order()];
            let mut injective = true;
            for &x in &map {
                injective &= !std::mem::replace(&mut hit[x], true);
            }
            if reduced {
                ensure(injective, || {
                    format!("{g:?} -> {h:?}: {map:?} not injective")
                })?;
            }
            if hit.iter().all(|&b| b) {
                ensure(g_hat.order() <= h.order(), || {
                    format!("{g:?}: full surjection onto {} vertices", h.order())
                })?;
            }
        }
    }
    Ok(count)
}
