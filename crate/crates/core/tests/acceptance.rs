//! Acceptance criteria 1-9. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails. Every limit below is wall time.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use gallai_core::search::search_coloring;
use gallai_core::verify::{self, SuiteReport, DECAGON_BUDGET};

const SECOND: Duration = Duration::from_secs(1);

struct Part {
    report: SuiteReport,
    limit: Duration,
}

impl Part {
    fn new(report: SuiteReport, limit_secs: u64) -> Self {
        Part {
            report,
            limit: SECOND * limit_secs as u32,
        }
    }

    fn ok(&self) -> bool {
        self.report.passed && self.report.elapsed < self.limit
    }

    fn describe(&self) -> String {
        format!(
            "{}[{} {:.3}s/{}s {}]",
            self.report.name,
            if self.ok() { "ok" } else { "bad" },
            self.report.elapsed.as_secs_f64(),
            self.limit.as_secs(),
            self.report.detail
        )
    }
}

/// One search instance as a suite report that passes on the expected label.
fn anchor(name: &'static str, n: usize, forbid: usize, expect: &str) -> SuiteReport {
    let start = Instant::now();
    let out = search_coloring(n, &BTreeSet::from([forbid]), n, DECAGON_BUDGET);
    let elapsed = start.elapsed();
    let (passed, detail) = match out {
        Ok(o) => (
            o.label() == expect,
            format!("{} nodes={}", o.label(), o.nodes()),
        ),
        Err(e) => (false, e.to_string()),
    };
    SuiteReport {
        name,
        passed,
        detail,
        elapsed,
    }
}

fn main() -> ExitCode {
    let seed = 0;
    let criteria: Vec<(u32, &str, Vec<Part>)> = vec![
        (
            1,
            "odd polygons without colorful squares",
            vec![Part::new(verify::odd_gon(), 10)],
        ),
        (
            2,
            "colorful 2m-gons without colorful (2m-1)-gons",
            vec![Part::new(verify::even_gon(), 60)],
        ),
        (
            3,
            "random tree 2-cliques: no colorful cycles, subset conditions, roundtrip",
            vec![Part::new(
                verify::tree_cliques(seed, verify::TREE_CLIQUES),
                120,
            )],
        ),
        (
            4,
            "decagon search with anchors",
            vec![
                Part::new(anchor("anchor-4/3/4", 4, 3, "UNSAT"), 1),
                Part::new(anchor("anchor-6/5/6", 6, 5, "SAT"), 10),
                Part::new(verify::decagon(DECAGON_BUDGET), 600),
            ],
        ),
        (
            5,
            "extremal exact Gallai orders and the K6 scan",
            vec![
                Part::new(verify::extremal(), 10),
                Part::new(verify::ramsey_k6(), 30),
            ],
        ),
        (
            6,
            "duality classifier against the oracle",
            vec![
                Part::new(verify::duality_labeled(6), 30),
                Part::new(verify::duality_connected(7), 600),
            ],
        ),
        (
            7,
            "monochromes of random exact Gallai cliques",
            vec![Part::new(
                verify::exact_monochromes(seed, verify::EXACT_CLIQUES),
                60,
            )],
        ),
        (
            8,
            "spanning monochromes",
            vec![Part::new(verify::spanning(seed), 30)],
        ),
        (
            9,
            "reduced-form properties",
            vec![Part::new(verify::reduced_forms(5), 60)],
        ),
    ];
    let mut failed = 0;
    for (id, title, parts) in &criteria {
        let ok = parts.iter().all(Part::ok);
        failed += usize::from(!ok);
        let details: Vec<String> = parts.iter().map(Part::describe).collect();
        println!(
            "{} criterion {id}: {title}: {}",
            if ok { "PASS" } else { "FAIL" },
            details.join(" ")
        );
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
