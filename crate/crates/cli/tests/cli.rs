use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use gallai_core::generate::random_tree_clique;
use gallai_core::io::write_cgr;
use gallai_core::ColoredClique;
use tempfile::TempDir;

fn gallai(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gallai"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited")
}

fn path(dir: &TempDir, name: &str) -> PathBuf {
    dir.path().join(name)
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn write_clique(dir: &TempDir, name: &str, k: &ColoredClique) -> PathBuf {
    let p = path(dir, name);
    fs::write(&p, write_cgr(k)).unwrap();
    p
}

#[test]
fn construct_and_spectrum() {
    let dir = TempDir::new().unwrap();
    let f = path(&dir, "o5.cgr");
    let o = gallai(&["construct", "odd-gon", "5", "-o", s(&f)]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("built n=5 k=5\n"));
    let o = gallai(&["spectrum", s(&f)]);
    assert_eq!(
        stdout(&o),
        "spectrum exceptions=[3,5] solid_from=6\nlaws=ok\n"
    );

    let mono = write_clique(&dir, "mono4.cgr", &ColoredClique::monochromatic(4).unwrap());
    assert!(stdout(&gallai(&["spectrum", s(&mono)]))
        .starts_with("spectrum exceptions=[] solid_from=2\n"));
    let rainbow = write_clique(&dir, "rainbow3.cgr", &ColoredClique::rainbow(3).unwrap());
    assert!(stdout(&gallai(&["spectrum", s(&rainbow)]))
        .starts_with("spectrum exceptions=[3] solid_from=4\n"));
}

#[test]
fn construct_to_stdout_reports_on_stderr() {
    let o = gallai(&["construct", "simple", "4"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("cgraph 4 2\n"));
    assert_eq!(String::from_utf8_lossy(&o.stderr), "built n=4 k=2\n");
    let o = gallai(&["construct", "extremal", "2"]);
    assert!(stdout(&o).starts_with("cgraph 5 2\n"));
    assert_eq!(code(&gallai(&["construct", "simple", "3"])), 2);
}

#[test]
fn check_reports_witnesses() {
    let dir = TempDir::new().unwrap();
    let s5 = path(&dir, "s5.cgr");
    gallai(&["construct", "simple", "5", "-o", s(&s5)]);
    let o = gallai(&["check", "--exact", s(&s5)]);
    assert_eq!((stdout(&o).as_str(), code(&o)), ("GALLAI EXACT\n", 0));

    let rainbow = write_clique(&dir, "r3.cgr", &ColoredClique::rainbow(3).unwrap());
    let o = gallai(&["check", s(&rainbow)]);
    assert_eq!(
        (stdout(&o).as_str(), code(&o)),
        ("NOT-GALLAI witness=(0,1,2)\n", 1)
    );

    let mono = write_clique(&dir, "m3.cgr", &ColoredClique::monochromatic(3).unwrap());
    let o = gallai(&["check", "--exact", s(&mono)]);
    assert_eq!(
        (stdout(&o).as_str(), code(&o)),
        ("GALLAI NOT-EXACT witness=(0,1,2)\n", 1)
    );

    let e3 = path(&dir, "e3.cgr");
    gallai(&["construct", "extremal", "3", "-o", s(&e3)]);
    let o = gallai(&["check", "--subsets", s(&e3)]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("SUBSETS ok exhaustive"));
}

#[test]
fn malformed_input_exits_two() {
    let dir = TempDir::new().unwrap();
    let bad = path(&dir, "bad.cgr");
    fs::write(&bad, "cgraph 3 2\n0 1 0\n0 2 1\n").unwrap();
    let o = gallai(&["check", s(&bad)]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
    assert_eq!(
        code(&gallai(&["spectrum", s(&path(&dir, "missing.cgr"))])),
        2
    );
}

#[test]
fn decompose_compose_roundtrip() {
    let dir = TempDir::new().unwrap();
    let e3 = path(&dir, "e3.cgr");
    let gt = path(&dir, "e3.gt");
    let back = path(&dir, "back.cgr");
    gallai(&["construct", "extremal", "3", "-o", s(&e3)]);
    let o = gallai(&["decompose", s(&e3), "-o", s(&gt)]);
    assert_eq!(stdout(&o), "tree nodes=13 leaves=10 height=2 factors=3\n");
    gallai(&["compose", s(&gt), "-o", s(&back)]);
    assert_eq!(fs::read(&e3).unwrap(), fs::read(&back).unwrap());

    let k2 = write_clique(&dir, "k2.cgr", &ColoredClique::monochromatic(2).unwrap());
    let o = gallai(&["decompose", s(&k2)]);
    assert!(stdout(&o).starts_with("gtree 3\n"));

    let rainbow = write_clique(&dir, "r3.cgr", &ColoredClique::rainbow(3).unwrap());
    let o = gallai(&["decompose", s(&rainbow)]);
    assert_eq!(
        (stdout(&o).as_str(), code(&o)),
        ("NOT-GALLAI witness=(0,1,2)\n", 1)
    );
}

#[test]
fn random_tree_cliques_roundtrip_through_files() {
    let dir = TempDir::new().unwrap();
    for seed in 0..100 {
        let k = write_clique(&dir, "k.cgr", &random_tree_clique(seed, 12));
        let gt = path(&dir, "k.gt");
        let back = path(&dir, "back.cgr");
        assert_eq!(code(&gallai(&["decompose", s(&k), "-o", s(&gt)])), 0);
        assert_eq!(code(&gallai(&["compose", s(&gt), "-o", s(&back)])), 0);
        assert_eq!(
            fs::read(&k).unwrap(),
            fs::read(&back).unwrap(),
            "seed {seed}"
        );
    }
}

#[test]
fn classify_named_graphs() {
    let dir = TempDir::new().unwrap();
    let run = |name: &str| {
        let f = path(&dir, &format!("{name}.ug"));
        gallai(&["construct", "named", name, "-o", s(&f)]);
        gallai(&["classify", s(&f)])
    };
    let o = run("P3");
    assert_eq!(
        (stdout(&o).as_str(), code(&o)),
        ("TYPE P3 HOM 0->0 1->1 2->2 3->3\n", 0)
    );
    let o = run("C5");
    assert_eq!(
        (stdout(&o).as_str(), code(&o)),
        ("TYPE C5 HOM 0->0 1->1 2->2 3->3 4->4\n", 0)
    );
    let o = run("A");
    assert_eq!(
        (stdout(&o).as_str(), code(&o)),
        ("TYPE A WITNESS A vertices=[0,1,2,3,4,5]\n", 1)
    );
    let o = run("P2");
    assert_eq!(stdout(&o), "TYPE P1 HOM 0->0 1->1 2->0\n");

    let disconnected = path(&dir, "d.ug");
    fs::write(&disconnected, "graph 3 1\n0 1\n").unwrap();
    assert_eq!(code(&gallai(&["classify", s(&disconnected)])), 2);
}

#[test]
fn reduce_and_monochromes() {
    let dir = TempDir::new().unwrap();
    let p2 = path(&dir, "p2.ug");
    gallai(&["construct", "named", "P2", "-o", s(&p2)]);
    let o = gallai(&["reduce", s(&p2)]);
    assert_eq!(stdout(&o), "graph 2 1\n0 1\n");
    assert_eq!(
        String::from_utf8_lossy(&o.stderr),
        "reduced n=2 m=1 type=P1 map=[0,1,0]\n"
    );

    let s4 = path(&dir, "s4.cgr");
    gallai(&["construct", "simple", "4", "-o", s(&s4)]);
    let o = gallai(&["monochromes", s(&s4)]);
    assert_eq!(
        stdout(&o),
        "color=0 vertices=[0,1,2,3] edges=3 type=P3\ncolor=1 vertices=[0,1,2,3] edges=3 type=P3\n"
    );

    let star = path(&dir, "star.ug");
    fs::write(&star, "graph 4 3\n0 1\n0 2\n0 3\n").unwrap();
    let host = path(&dir, "host.cgr");
    let o = gallai(&["construct", "host", s(&star), "-o", s(&host)]);
    assert_eq!(stdout(&o), "built n=4 k=2\n");
    let o = gallai(&["monochromes", s(&host)]);
    assert_eq!(
        stdout(&o),
        "color=0 vertices=[0,1,2,3] edges=3 type=P1\ncolor=1 vertices=[1,2,3] edges=3 type=C3\n"
    );
}

#[test]
fn search_outcomes_and_exit_codes() {
    let dir = TempDir::new().unwrap();
    let o = gallai(&["search", "4", "--forbid", "3", "--require", "4"]);
    assert_eq!((stdout(&o).as_str(), code(&o)), ("UNSAT nodes=0\n", 1));

    let w = path(&dir, "w.cgr");
    let o = gallai(&[
        "search",
        "6",
        "--forbid",
        "5",
        "--require",
        "6",
        "-o",
        s(&w),
    ]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("SAT nodes="));
    // The witness has a colorful 6-cycle and no colorful 5-cycle.
    let spectrum = stdout(&gallai(&["spectrum", s(&w)]));
    let exceptions = spectrum
        .split('[')
        .nth(1)
        .unwrap()
        .split(']')
        .next()
        .unwrap();
    let exceptions: Vec<&str> = exceptions.split(',').collect();
    assert!(
        exceptions.contains(&"6") && !exceptions.contains(&"5"),
        "{spectrum}"
    );

    let o = gallai(&[
        "search",
        "10",
        "--forbid",
        "5",
        "--require",
        "10",
        "--budget",
        "10^9",
    ]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).starts_with("UNSAT"));

    let o = gallai(&[
        "search",
        "10",
        "--forbid",
        "5",
        "--require",
        "10",
        "--budget",
        "5",
    ]);
    assert_eq!(code(&o), 3);
    assert!(stdout(&o).starts_with("TIMEOUT"));

    assert_eq!(
        code(&gallai(&["search", "5", "--forbid", "5", "--require", "5"])),
        2
    );
    assert_ne!(
        code(&gallai(&[
            "search",
            "5",
            "--require",
            "5",
            "--budget",
            "lots"
        ])),
        0
    );
}

#[test]
fn verify_runs_named_suites() {
    let o = Command::new(env!("CARGO_BIN_EXE_gallai"))
        .args(["verify", "extremal", "search-anchors"])
        .env("GALLAI_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("PASS extremal"));
    assert!(lines[1].starts_with("PASS search-anchors"));
    assert_eq!(code(&gallai(&["verify", "nonsense"])), 2);
}
