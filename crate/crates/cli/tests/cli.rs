use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn hermtool(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hermtool"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

struct Workspace {
    dir: TempDir,
}

impl Workspace {
    fn new() -> Self {
        let ws = Workspace { dir: TempDir::new().unwrap() };
        ws.write("A.hmat", "hmat v1\nfield complex\nn 2\n2 0\n0 0\n");
        ws.write("B.hmat", "hmat v1\nfield complex\nn 2\n3 0\n0 1\n");
        ws.write("k2.graph", "graph v1 n=2\nedge 0 1\n");
        ws.write("p3.graph", "# path on three vertices\ngraph v1 n=3\nedge 0 1\nedge 1 2\n");
        ws.write("cycle.graph", "graph v1 n=3\narc 0 1\narc 1 2\narc 2 0\n");
        ws
    }

    fn write(&self, name: &str, text: &str) -> PathBuf {
        let path = self.dir.path().join(name);
        std::fs::write(&path, text).unwrap();
        path
    }

    fn run(&self, args: &[&str]) -> Output {
        hermtool(args, self.dir.path())
    }
}

#[test]
fn check_shift_one_holds() {
    let ws = Workspace::new();
    let out = ws.run(&["check", "--m", "1", "A.hmat", "B.hmat", "--method", "both"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.starts_with("# tolerance: relative 1e-9"));
    assert_eq!(text.lines().last(), Some(r#"{"holds":true}"#));

    let json = ws.run(&["--json", "check", "--m", "1", "A.hmat", "B.hmat"]);
    assert_eq!(stdout(&json), "{\"holds\":true}\n");
}

#[test]
fn check_shift_zero_is_a_violation() {
    let ws = Workspace::new();
    for method in ["spectral", "inertia", "both"] {
        let out = ws.run(&["check", "--m", "0", "A.hmat", "B.hmat", "--method", method, "--json"]);
        assert_eq!(code(&out), 1, "{method}");
        let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(report["holds"], false);
        assert!(report["witness"]["kind"].is_string());
    }
}

#[test]
fn check_negative_shift_and_exact_shifts() {
    let ws = Workspace::new();
    ws.write("C.hmat", "hmat v1\nfield q(-1)\nn 2\n2 0\n0 0\n");
    ws.write("D.hmat", "hmat v1\nfield q(-1)\nn 2\n3 0\n0 1\n");
    let exact = ws.run(&["check", "--m", "1", "C.hmat", "D.hmat", "--exact-shifts", "3,2,1,0,-1", "--json"]);
    assert_eq!((code(&exact), stdout(&exact).as_str()), (0, "{\"holds\":true}\n"));
    let fails = ws.run(&["check", "--m", "0", "C.hmat", "D.hmat", "--exact-shifts", "2", "--json"]);
    assert_eq!(code(&fails), 1);
    let negative = ws.run(&["check", "--m", "-1", "B.hmat", "A.hmat", "--json"]);
    assert_eq!(code(&negative), 1);
}

#[test]
fn check_relations_on_root_lists() {
    let ws = Workspace::new();
    ws.write("f.roots", "[2, 0]\n");
    ws.write("g.roots", "3 1\n");
    ws.write("pair.roots", "[2, 0]\n[3, 1]\n");
    let interlace = ws.run(&["check", "--relation", "interlace", "f.roots", "g.roots"]);
    assert_eq!(code(&interlace), 0);
    let single_file = ws.run(&["check", "--m", "1", "pair.roots", "--json"]);
    assert_eq!(stdout(&single_file), "{\"holds\":true}\n");
    let reversed = ws.run(&["check", "--relation", "interlace", "g.roots", "f.roots"]);
    assert_eq!(code(&reversed), 1);
    let compatible = ws.run(&["check", "--relation", "compatible", "g.roots", "f.roots", "--method", "inertia"]);
    assert_eq!(code(&compatible), 0);
    let mixed = ws.run(&["check", "--m", "1", "A.hmat", "g.roots"]);
    assert_eq!(code(&mixed), 0);
}

#[test]
fn spectra_of_small_graphs() {
    let ws = Workspace::new();
    let k2 = ws.run(&["spectrum", "k2.graph", "--operator", "normalized_laplacian"]);
    assert_eq!((code(&k2), stdout(&k2).as_str()), (0, "2 0\n"));
    let p3 = ws.run(&["spectrum", "p3.graph", "--operator", "normalized_laplacian"]);
    assert_eq!(stdout(&p3), "2 1 0\n");
    let laplacian = ws.run(&["spectrum", "p3.graph"]);
    assert_eq!(stdout(&laplacian), "3 1 0\n");
    let cycle = ws.run(&["spectrum", "cycle.graph", "--operator", "herm_adjacency_i", "--json"]);
    let report: serde_json::Value = serde_json::from_str(&stdout(&cycle)).unwrap();
    let values: Vec<f64> = serde_json::from_value(report["eigenvalues"].clone()).unwrap();
    let root3 = 3f64.sqrt();
    for (got, want) in values.iter().zip([root3, 0.0, -root3]) {
        assert!((got - want).abs() < 1e-10);
    }
    assert_eq!(report["operator"], "herm_adjacency_i");
}

#[test]
fn inertia_with_shift_and_degree_pencil() {
    let ws = Workspace::new();
    let plain = ws.run(&["inertia", "B.hmat", "--shift", "2"]);
    assert_eq!(code(&plain), 0);
    assert!(stdout(&plain).contains("inertia of A - 2 I: (1, 1, 0)"));

    let pencil = ws.run(&["inertia", "p3.graph", "--pencil-degree", "--shift", "1", "--exact", "--json"]);
    assert_eq!(code(&pencil), 0, "{}", stderr(&pencil));
    let report: serde_json::Value = serde_json::from_str(&stdout(&pencil)).unwrap();
    assert_eq!(report["inertia"], serde_json::json!({"n_plus": 1, "n_minus": 1, "n_zero": 1}));
    assert_eq!(report["method"], "exact");

    let float_pencil = ws.run(&["inertia", "p3.graph", "--pencil-degree", "--shift", "1/2", "--json"]);
    let report: serde_json::Value = serde_json::from_str(&stdout(&float_pencil)).unwrap();
    assert_eq!(report["inertia"]["n_plus"], 2);
}

#[test]
fn build_writes_a_readable_matrix() {
    let ws = Workspace::new();
    let out = ws.run(&["build", "cycle.graph", "--operator", "herm_laplacian_omega", "-o", "cycle.hmat"]);
    assert_eq!(code(&out), 0);
    let text = std::fs::read_to_string(ws.dir.path().join("cycle.hmat")).unwrap();
    assert!(text.starts_with("hmat v1\nfield q(-3)\nn 3\n"));
    let spectrum = ws.run(&["spectrum", "cycle.hmat"]);
    assert_eq!(code(&spectrum), 0);
    let direct = ws.run(&["spectrum", "cycle.graph", "--operator", "herm_laplacian_omega"]);
    assert_eq!(stdout(&spectrum), stdout(&direct));
}

#[test]
fn delete_edge_reports_both_relations() {
    let ws = Workspace::new();
    let out = ws.run(&["--json", "delete-edge", "p3.graph", "--record", "0", "--operator", "laplacian"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["operator_interlaces"]["holds"], true);
    assert_eq!(report["normalized_compatible"]["holds"], true);
    assert_eq!(report["difference"]["w"], "1");
    assert_eq!(report["before"]["operator"], serde_json::json!([3.0, 1.0, 0.0]));

    let omega = ws.run(&["delete-edge", "cycle.graph", "--record", "1", "--operator", "herm_laplacian_omega"]);
    assert_eq!(code(&omega), 0);
    assert!(stdout(&omega).starts_with("# tolerance:"));
}

#[test]
fn verify_mohar_deletion_holds() {
    let ws = Workspace::new();
    let out = ws.run(&["verify", "mohar_deletion", "--trials", "500", "--seed", "1", "--size", "10"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(stdout(&out).contains("passed 500"));
}

#[test]
fn verify_negative_control_exits_one() {
    let ws = Workspace::new();
    let out = ws.run(&["verify", "weyl_indexed", "--trials", "200", "--seed", "5", "--mutated", "--json"]);
    assert_eq!(code(&out), 1);
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["claim"], "mutated");
    assert!(!report["failures"].as_array().unwrap().is_empty());
}

#[test]
fn verify_json_is_byte_identical() {
    let ws = Workspace::new();
    let args = ["verify", "cauchy", "--trials", "50", "--seed", "42", "--size", "6", "--json"];
    let first = ws.run(&args);
    let second = ws.run(&args);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, second.stdout);
    let report: serde_json::Value = serde_json::from_str(&stdout(&first)).unwrap();
    for key in ["theorem", "claim", "trials", "rng_seed", "size_bound", "tolerance", "passed", "indeterminate", "failures"] {
        assert!(report.get(key).is_some(), "{key}");
    }
}

#[test]
fn tolerance_flag_is_reported() {
    let ws = Workspace::new();
    let out = ws.run(&["--tol", "1e-6", "inertia", "A.hmat"]);
    assert!(stdout(&out).starts_with("# tolerance: absolute 1e-6"));
    let json = ws.run(&["verify", "nu_criterion", "--trials", "5", "--tol", "1e-6", "--json"]);
    let report: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(report["tolerance"], "absolute 1e-6");
}

#[test]
fn near_ties_are_indeterminate() {
    let ws = Workspace::new();
    ws.write("one.hmat", "hmat v1\nfield complex\nn 1\n1\n");
    ws.write("close.hmat", "hmat v1\nfield complex\nn 1\n1.000000005\n");
    let out = ws.run(&["check", "--m", "0", "one.hmat", "close.hmat", "--method", "spectral", "--json"]);
    assert_eq!(code(&out), 3);
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["indeterminate"], true);

    ws.write("small.hmat", "hmat v1\nfield complex\nn 2\n0.000000005 0\n0 1\n");
    let inertia = ws.run(&["inertia", "small.hmat"]);
    assert_eq!(code(&inertia), 3);
    assert!(stdout(&inertia).contains("ambiguous"));
}

#[test]
fn parse_errors_name_file_line_and_token() {
    let ws = Workspace::new();
    ws.write("bad.hmat", "hmat v1\nfield complex\nn 2\n1 0\n0 oops\n");
    let out = ws.run(&["spectrum", "bad.hmat"]);
    assert_eq!(code(&out), 2);
    let message = stderr(&out);
    assert_eq!(message.lines().count(), 1);
    assert!(message.contains("bad.hmat:5:"), "{message}");
    assert!(message.contains("`oops`"), "{message}");

    ws.write("bad.graph", "graph v1 n=2\nedge 0 1\nedge 0 7\n");
    let graph = ws.run(&["build", "bad.graph", "--operator", "laplacian"]);
    assert_eq!(code(&graph), 2);
    assert!(stderr(&graph).contains("bad.graph:3: bad token `7`"));

    ws.write("bad.roots", "[1, 2]\n");
    let roots = ws.run(&["check", "--m", "0", "bad.roots", "bad.roots"]);
    assert_eq!(code(&roots), 2);
    assert!(stderr(&roots).contains("bad.roots:1:"));
}

#[test]
fn usage_errors_exit_two() {
    let ws = Workspace::new();
    let cases: Vec<Vec<&str>> = vec![
        vec!["spectrum", "missing.hmat"],
        vec!["spectrum", "k2.graph", "--operator", "nonsense"],
        vec!["check", "A.hmat", "B.hmat"],
        vec!["check", "--m", "1", "--relation", "interlace", "A.hmat", "B.hmat"],
        vec!["check", "--m", "1", "A.hmat"],
        vec!["inertia", "A.hmat", "--exact"],
        vec!["inertia", "A.hmat", "--pencil-degree"],
        vec!["inertia", "A.hmat", "--shift", "abc"],
        vec!["delete-edge", "k2.graph", "--record", "3"],
        vec!["delete-edge", "k2.graph", "--record", "0", "--operator", "adjacency"],
        vec!["verify", "no_such_theorem"],
        vec!["verify", "cauchy", "--trials", "0"],
        vec!["--tol", "-1", "spectrum", "A.hmat"],
        vec![],
    ];
    for args in cases {
        let out = ws.run(&args);
        assert_eq!(code(&out), 2, "{args:?}: {}", stderr(&out));
    }
}
