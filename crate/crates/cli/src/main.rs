//! `gallai`: batch front end over `gallai-core`.
//!
//! Exit codes: 0 success or property holds, 1 property fails (a witness is
//! printed), 2 input error, 3 search timeout.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use gallai_core::constructions::{
    even_gon_no_preceding, extremal_exact_gallai, gallai_host, named_graph, odd_gon_index,
    odd_gon_no_squares, simple_clique, NamedGraph,
};
use gallai_core::gallai::{
    check_subset_conditions, colorful_triangle, decompose, inexact_triangle, recompose,
    EXHAUSTIVE_CAP,
};
use gallai_core::hom::{classify_monochrome, monochromes, reduced_form, type_name};
use gallai_core::io::{parse_cgr, parse_gt, parse_ug, write_cgr, write_gt, write_ug};
use gallai_core::search::{search_coloring, SearchOutcome};
use gallai_core::spectrum::{check_spectrum_laws, spectrum};
use gallai_core::verify::{run_suite, SUITES};
use gallai_core::{ColoredClique, Error, SimpleGraph};

#[derive(Parser)]
#[command(
    name = "gallai",
    version,
    about = "Colored cliques, Gallai colorings and monochromes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a coloring (.cgr) or a named graph (.ug).
    Construct {
        #[command(subcommand)]
        kind: Kind,
        /// Output file; stdout if omitted.
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Print the colorful-cycle spectrum of a .cgr file.
    Spectrum { input: PathBuf },
    /// Test a .cgr file for colorful triangles.
    Check {
        input: PathBuf,
        /// Also require every triangle to use exactly two colors.
        #[arg(long)]
        exact: bool,
        /// Also run the subset color-count conditions.
        #[arg(long)]
        subsets: bool,
        /// Largest order checked exhaustively by --subsets.
        #[arg(long, default_value_t = EXHAUSTIVE_CAP)]
        cutoff: usize,
    },
    /// Decompose a Gallai .cgr file into a .gt tree.
    Decompose {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Rebuild a .cgr coloring from a .gt tree.
    Compose {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Classify a connected .ug graph against C5.
    Classify { input: PathBuf },
    /// Print the reduced form of a .ug graph.
    Reduce {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// List the monochromes of a .cgr file.
    Monochromes { input: PathBuf },
    /// Search for a coloring of K_n with a colorful cycle of the required
    /// length and no colorful cycle of any forbidden length.
    Search {
        n: usize,
        #[arg(long, value_delimiter = ',')]
        forbid: Vec<usize>,
        #[arg(long)]
        require: usize,
        /// Node budget; accepts `1000000`, `10^9` or `1e9`.
        #[arg(long, default_value = "10^9", value_parser = parse_budget)]
        budget: u64,
        /// Where to write a SAT witness; stdout if omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run named check suites (all of them by default).
    Verify {
        suites: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum Kind {
    /// Odd clique with a colorful m-cycle and no colorful 4-cycle.
    OddGon { m: usize },
    /// 2m-clique with a colorful 2m-cycle and no colorful (2m-1)-cycle.
    EvenGon { m: usize },
    /// Simple clique of size 2, 4 or 5.
    Simple { size: usize },
    /// Largest exact Gallai clique with k colors.
    Extremal { k: u32 },
    /// Two-coloring whose color-0 monochrome is the given connected .ug graph.
    Host { graph: PathBuf },
    /// Named graph: Pk, Ck or A.
    Named { name: NamedGraph },
}

fn parse_budget(s: &str) -> Result<u64, String> {
    let s = s.replace('_', "");
    let bad = || format!("bad budget `{s}`");
    let power = |base: &str, exp: &str| -> Result<u64, String> {
        let b: u64 = base.parse().map_err(|_| bad())?;
        let e: u32 = exp.parse().map_err(|_| bad())?;
        b.checked_pow(e).ok_or_else(bad)
    };
    if let Some((b, e)) = s.split_once('^') {
        power(b, e)
    } else if let Some((m, e)) = s.split_once(['e', 'E']) {
        let m: u64 = m.parse().map_err(|_| bad())?;
        m.checked_mul(power("10", e)?).ok_or_else(bad)
    } else {
        s.parse().map_err(|_| bad())
    }
}

/// A failure with its exit code; the message goes to stderr.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotGallai { .. } => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn input_error(message: String) -> Failure {
    Failure { code: 2, message }
}

type Outcome = Result<u8, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn read_cgr(path: &Path) -> Result<ColoredClique, Failure> {
    parse_cgr(&read(path)?).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn read_ug(path: &Path) -> Result<SimpleGraph, Failure> {
    parse_ug(&read(path)?).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

/// Writes `text` to `path`, or to stdout; returns whether it went to a file.
fn emit(path: Option<&Path>, text: &str) -> Result<bool, Failure> {
    match path {
        Some(p) => fs::write(p, text)
            .map(|_| true)
            .map_err(|e| input_error(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(false)
        }
    }
}

/// Summary lines go to stdout when the payload went to a file, else stderr.
fn summary(to_file: bool, line: &str) {
    if to_file {
        println!("{line}");
    } else {
        eprintln!("{line}");
    }
}

fn construct(kind: Kind, output: Option<&Path>) -> Outcome {
    let clique = match kind {
        Kind::OddGon { m } => {
            let k = odd_gon_no_squares(m)?;
            let to_file = emit(output, &write_cgr(&k))?;
            summary(
                to_file,
                &format!("built n={} k={}", k.order(), k.palette_size()),
            );
            let map: Vec<String> = (0..m)
                .map(|v| format!("{v}->{}", odd_gon_index(m, v)))
                .collect();
            summary(to_file, &format!("index_map {}", map.join(" ")));
            return Ok(0);
        }
        Kind::EvenGon { m } => even_gon_no_preceding(m)?,
        Kind::Simple { size } => simple_clique(size)?,
        Kind::Extremal { k } => extremal_exact_gallai(k)?,
        Kind::Host { graph } => gallai_host(&read_ug(&graph)?)?,
        Kind::Named { name } => {
            let g = named_graph(name)?;
            let to_file = emit(output, &write_ug(&g))?;
            summary(to_file, &format!("built n={} m={}", g.order(), g.size()));
            return Ok(0);
        }
    };
    let to_file = emit(output, &write_cgr(&clique))?;
    summary(
        to_file,
        &format!("built n={} k={}", clique.order(), clique.palette_size()),
    );
    Ok(0)
}

fn cmd_spectrum(input: &Path) -> Outcome {
    let s = spectrum(&read_cgr(input)?);
    println!("{s}");
    let ok = check_spectrum_laws(&s);
    println!("laws={}", if ok { "ok" } else { "violated" });
    Ok(if ok { 0 } else { 1 })
}

fn cmd_check(input: &Path, exact: bool, subsets: bool, cutoff: usize) -> Outcome {
    let k = read_cgr(input)?;
    let mut code = 0;
    if let Some(t) = colorful_triangle(&k) {
        println!("NOT-GALLAI witness={t}");
        code = 1;
    } else if exact {
        match inexact_triangle(&k) {
            Some(t) => {
                println!("GALLAI NOT-EXACT witness={t}");
                code = 1;
            }
            None => println!("GALLAI EXACT"),
        }
    } else {
        println!("GALLAI");
    }
    if subsets {
        let r = check_subset_conditions(&k, cutoff);
        let mode = if r.exhaustive {
            "exhaustive"
        } else {
            "sampled"
        };
        match (&r.inner_violation, &r.cross_violation) {
            (None, None) => println!("SUBSETS ok {mode} checked={}", r.subsets_checked),
            (Some(b), _) => {
                println!("SUBSETS violated {mode} inner={b:?}");
                code = 1;
            }
            (None, Some((b, c))) => {
                println!("SUBSETS violated {mode} cross={b:?}/{c:?}");
                code = 1;
            }
        }
    }
    Ok(code)
}

fn cmd_decompose(input: &Path, output: Option<&Path>) -> Outcome {
    let k = read_cgr(input)?;
    let t = match decompose(&k) {
        Ok(t) => t,
        Err(Error::NotGallai { witness }) => {
            println!("NOT-GALLAI witness={witness}");
            return Ok(1);
        }
        Err(e) => return Err(e.into()),
    };
    let to_file = emit(output, &write_gt(&t))?;
    summary(
        to_file,
        &format!(
            "tree nodes={} leaves={} height={} factors={}",
            t.node_count(),
            t.leaf_count(),
            t.height(),
            t.factors().len()
        ),
    );
    Ok(0)
}

fn cmd_compose(input: &Path, output: Option<&Path>) -> Outcome {
    let t =
        parse_gt(&read(input)?).map_err(|e| input_error(format!("{}: {e}", input.display())))?;
    let k = recompose(&t)?;
    let to_file = emit(output, &write_cgr(&k))?;
    summary(
        to_file,
        &format!("built n={} k={}", k.order(), k.palette_size()),
    );
    Ok(0)
}

fn cmd_classify(input: &Path) -> Outcome {
    let g = read_ug(input)?;
    let result = classify_monochrome(&g)?;
    println!("TYPE {} {result}", type_name(&g));
    Ok(if result.is_hom() { 0 } else { 1 })
}

fn cmd_reduce(input: &Path, output: Option<&Path>) -> Outcome {
    let g = read_ug(input)?;
    let (reduced, r) = reduced_form(&g);
    let to_file = emit(output, &write_ug(&reduced))?;
    let map: Vec<String> = r.map().iter().map(|x| x.to_string()).collect();
    summary(
        to_file,
        &format!(
            "reduced n={} m={} type={} map=[{}]",
            reduced.order(),
            reduced.size(),
            type_name(&g),
            map.join(",")
        ),
    );
    Ok(0)
}

fn cmd_monochromes(input: &Path) -> Outcome {
    let k = read_cgr(input)?;
    for m in monochromes(&k) {
        let vs: Vec<String> = m.vertices.iter().map(|v| v.to_string()).collect();
        println!(
            "color={} vertices=[{}] edges={} type={}",
            m.color,
            vs.join(","),
            m.graph.size(),
            type_name(&m.graph)
        );
    }
    Ok(0)
}

fn cmd_search(
    n: usize,
    forbid: Vec<usize>,
    require: usize,
    budget: u64,
    output: Option<&Path>,
) -> Outcome {
    let forbidden: BTreeSet<usize> = forbid.into_iter().collect();
    let out = search_coloring(n, &forbidden, require, budget)?;
    println!("{} nodes={}", out.label(), out.nodes());
    Ok(match out {
        SearchOutcome::Sat { witness, .. } => {
            emit(output, &write_cgr(&witness))?;
            0
        }
        SearchOutcome::Unsat { .. } => 1,
        SearchOutcome::Timeout { .. } => 3,
    })
}

fn cmd_verify(suites: Vec<String>, seed: u64) -> Outcome {
    let names: Vec<String> = if suites.is_empty() {
        SUITES.iter().map(|s| s.to_string()).collect()
    } else {
        suites
    };
    if let Some(bad) = names.iter().find(|s| !SUITES.contains(&s.as_str())) {
        return Err(input_error(format!(
            "unknown suite `{bad}`; known: {}",
            SUITES.join(", ")
        )));
    }
    let mut code = 0;
    for name in &names {
        let report = run_suite(name, seed).expect("name checked");
        println!("{report}");
        if !report.passed {
            code = 1;
        }
    }
    Ok(code)
}

fn configure_threads() -> Result<(), Failure> {
    if let Ok(v) = std::env::var("GALLAI_THREADS") {
        let n: usize = v
            .parse()
            .map_err(|_| input_error(format!("GALLAI_THREADS must be a number, got `{v}`")))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| input_error(e.to_string()))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads().and_then(|_| match cli.command {
        Command::Construct { kind, output } => construct(kind, output.as_deref()),
        Command::Spectrum { input } => cmd_spectrum(&input),
        Command::Check {
            input,
            exact,
            subsets,
            cutoff,
        } => cmd_check(&input, exact, subsets, cutoff),
        Command::Decompose { input, output } => cmd_decompose(&input, output.as_deref()),
        Command::Compose { input, output } => cmd_compose(&input, output.as_deref()),
        Command::Classify { input } => cmd_classify(&input),
        Command::Reduce { input, output } => cmd_reduce(&input, output.as_deref()),
        Command::Monochromes { input } => cmd_monochromes(&input),
        Command::Search {
            n,
            forbid,
            require,
            budget,
            output,
        } => cmd_search(n, forbid, require, budget, output.as_deref()),
        Command::Verify { suites, seed } => cmd_verify(suites, seed),
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
