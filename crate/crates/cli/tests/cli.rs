use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

struct Files {
    dir: TempDir,
}

impl Files {
    fn new() -> Self {
        Files { dir: tempfile::tempdir().unwrap() }
    }

    fn graph(&self, name: &str, text: &str) -> PathBuf {
        let p = self.dir.path().join(name);
        fs::write(&p, text).unwrap();
        p
    }

    fn p5(&self) -> PathBuf {
        self.graph("p5.el", "# path on five vertices\n5 4\n0 1\n1 2\n2 3\n3 4\n")
    }

    fn c4(&self) -> PathBuf {
        self.graph("c4.el", "4 4\n0 1\n1 2\n2 3\n0 3\n")
    }

    fn p4(&self) -> PathBuf {
        self.graph("p4.el", "4 3\n0 1\n1 2\n2 3\n")
    }
}

fn lexdom(args: &[&dyn AsRef<std::ffi::OsStr>]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_lexdom"));
    for a in args {
        cmd.arg(a);
    }
    cmd.output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn p(path: &Path) -> &std::ffi::OsStr {
    path.as_os_str()
}

#[test]
fn stats_of_p5() {
    let f = Files::new();
    let o = lexdom(&[&"stats", &p(&f.p5())]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for line in ["gamma 2", "gamma_t 3", "upper_gamma 3", "alpha 3"] {
        assert!(out.lines().any(|l| l == line), "{out}");
    }
    let j = json(&lexdom(&[&"--json", &"stats", &p(&f.p5())]));
    assert_eq!((j["gamma"].as_u64(), j["gamma_t"].as_u64(), j["upper_gamma"].as_u64(), j["alpha"].as_u64()), (Some(2), Some(3), Some(3), Some(3)));
}

#[test]
fn stats_with_isolated_vertex() {
    let f = Files::new();
    let g = f.graph("iso.el", "3 1\n0 1\n");
    let j = json(&lexdom(&[&"--json", &"stats", &p(&g)]));
    assert!(j["gamma_t"].is_null());
    assert_eq!(j["gamma"].as_u64(), Some(2));
}

#[test]
fn c4_is_well_dominated() {
    let f = Files::new();
    let o = lexdom(&[&"well-dominated", &p(&f.c4())]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("verdict true") && out.contains("method gamma2") && out.contains("gamma 2"), "{out}");
    let j = json(&lexdom(&[&"--json", &"well-dominated", &p(&f.c4())]));
    assert_eq!(j["verdict"], true);
    assert_eq!(j["method"], "gamma2");
    assert_eq!(j["gamma"], 2);
}

#[test]
fn p4_times_c4_is_not_well_dominated() {
    let f = Files::new();
    let o = lexdom(&[&"well-dominated", &"--lex", &p(&f.p4()), &p(&f.c4())]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("verdict false") && out.contains("witness smaller") && out.contains("witness larger"), "{out}");
    let j = json(&lexdom(&[&"--json", &"well-dominated", &"--lex", &p(&f.p4()), &p(&f.c4())]));
    let w = &j["witness"];
    assert_eq!(w["kind"], "product_sizes");
    let size = |k: &str| w[k]["pairs"].as_array().unwrap().len();
    assert_ne!(size("smaller"), size("larger"));
}

#[test]
fn methods_can_be_forced() {
    let f = Files::new();
    let p5 = f.p5();
    for method in ["auto", "enum", "gamma2", "bounded-k"] {
        let o = lexdom(&[&"well-dominated", &p(&p5), &"--method", &method]);
        assert_eq!(o.status.code(), Some(1), "{method}: {}", stderr(&o));
    }
    let o = lexdom(&[&"well-dominated", &p(&p5), &"--method", &"bounded-k", &"--k", &"2"]);
    assert_eq!(o.status.code(), Some(1));
    let o = lexdom(&[&"well-dominated", &p(&p5), &"--method", &"bounded-k", &"--k", &"3"]);
    assert_eq!(o.status.code(), Some(2));
    let o = lexdom(&[&"well-dominated", &p(&p5), &"--k", &"2"]);
    assert_eq!(o.status.code(), Some(2));
    let k3 = f.graph("k3.el", "3 3\n0 1\n1 2\n0 2\n");
    let o = lexdom(&[&"well-dominated", &p(&k3), &"--method", &"gamma2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("domination number is 1"));
}

#[test]
fn input_errors_exit_two() {
    let f = Files::new();
    let bad = f.graph("bad.el", "3 1\n0 7\n");
    let o = lexdom(&[&"stats", &p(&bad)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));
    let o = lexdom(&[&"stats", &f.dir.path().join("missing.el").as_os_str()]);
    assert_eq!(o.status.code(), Some(2));
    let o = lexdom(&[&"--cap", &"3", &"enumerate-mds", &p(&f.p5())]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("cap"));
    let o = lexdom(&[&"check-set", &p(&f.p5()), &"--set", &"1,9"]);
    assert_eq!(o.status.code(), Some(2));
    let o = lexdom(&[&"no-such-command"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn enumeration_listing() {
    let f = Files::new();
    let o = lexdom(&[&"enumerate-mds", &p(&f.p5())]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "minimal dominating sets: 4\n{0,3}\n{1,3}\n{1,4}\n{0,2,4}\n");
    let j = json(&lexdom(&[&"--json", &"enumerate-mds", &"--irreducible", &p(&f.p4())]));
    assert_eq!(j["kind"], "irreducible");
    let p3 = f.graph("p3.el", "3 2\n0 1\n1 2\n");
    let j = json(&lexdom(&[&"--json", &"enumerate-mds", &p(&f.p5()), &"--lex", &p(&p3)]));
    assert_eq!(j["count"], 124);
}

#[test]
fn check_set_report() {
    let f = Files::new();
    let o = lexdom(&[&"check-set", &p(&f.p5()), &"--set", &"1,3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for line in ["dominating true", "minimal_dominating true", "total_dominating false", "private 1 {0,1}"] {
        assert!(out.lines().any(|l| l == line), "{out}");
    }
}

#[test]
fn product_edge_list_round_trips() {
    let f = Files::new();
    let p3 = f.graph("p3.el", "3 2\n0 1\n1 2\n");
    let o = lexdom(&[&"product", &p(&f.p5()), &p(&p3)]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("# lexicographic product G[H], |V(G)| = 5, |V(H)| = 3\n"));
    let prod = lexdom::parse_graph(&text).unwrap();
    let p5 = lexdom::named::path(5);
    let h = lexdom::named::path(3);
    assert_eq!(prod, lexdom::lex_product(&p5, &h).unwrap().flat().clone());
    let written = f.graph("prod.el", &text);
    let o = lexdom(&[&"stats", &p(&written)]);
    assert!(stdout(&o).lines().any(|l| l == "n 15"));
}

#[test]
fn verify_small_passes_and_is_deterministic() {
    let f = Files::new();
    let dump = f.dir.path().join("dumps");
    let a = lexdom(&[&"verify", &"--seed", &"3", &"--dump-dir", &dump.as_os_str()]);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    let out = stdout(&a);
    assert!(out.starts_with("verify scale=small seed=3\n"));
    assert!(out.lines().filter(|l| l.starts_with("PASS ")).count() >= 13);
    assert!(!dump.exists());
    let b = lexdom(&[&"verify", &"--seed", &"3", &"--dump-dir", &dump.as_os_str()]);
    assert_eq!(a.stdout, b.stdout);
    let j = json(&lexdom(&[&"--json", &"verify"]));
    assert!(j["suites"].as_array().unwrap().iter().all(|s| s["passed"] == true));
}
