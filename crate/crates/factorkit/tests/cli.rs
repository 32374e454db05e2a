//! End-to-end tests of the binary: formats, exit codes, determinism.

use std::path::Path;
use std::process::{Command, Output};

fn factorkit(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_factorkit"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn code_of(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn generate_then_compute_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = factorkit(
        &["gen", "--family", "gm", "--m", "4", "--output", "gm4.txt"],
        dir.path(),
    );
    assert_eq!(code_of(&out), 0);

    let out = factorkit(
        &["compute", "--input", "gm4.txt", "--param", "t"],
        dir.path(),
    );
    assert_eq!(code_of(&out), 0);
    let text = stdout_of(&out);
    assert!(text.starts_with("3/4\n"), "got {text:?}");
    assert!(text.contains("witness: 0 1 2"));
}

#[test]
fn compute_infinite_value_on_complete_graph() {
    let dir = tempfile::tempdir().unwrap();
    factorkit(
        &["gen", "--family", "complete", "--n", "6", "--output", "k6.txt"],
        dir.path(),
    );
    let out = factorkit(&["compute", "--input", "k6.txt", "--param", "t"], dir.path());
    assert_eq!(code_of(&out), 0);
    assert_eq!(stdout_of(&out), "inf\n");

    // binding number of a complete graph stays finite
    let out = factorkit(
        &["compute", "--input", "k6.txt", "--param", "bind"],
        dir.path(),
    );
    assert!(stdout_of(&out).starts_with("5\n"));
}

#[test]
fn compute_json_output() {
    let dir = tempfile::tempdir().unwrap();
    factorkit(
        &["gen", "--family", "hm", "--m", "3", "--output", "h3.txt"],
        dir.path(),
    );
    let out = factorkit(
        &[
            "compute", "--input", "h3.txt", "--param", "bind", "--json", "bind.json",
        ],
        dir.path(),
    );
    assert_eq!(code_of(&out), 0);
    assert!(stdout_of(&out).starts_with("4/3\n"));
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("bind.json")).unwrap())
            .unwrap();
    assert_eq!(json["parameter"], "bind");
    assert_eq!(json["value"], "4/3");
    assert!(json["witness"].is_array());
}

#[test]
fn factor_exit_codes_and_certificates() {
    let dir = tempfile::tempdir().unwrap();
    factorkit(
        &["gen", "--family", "cycle", "--n", "5", "--output", "c5.txt"],
        dir.path(),
    );
    let out = factorkit(&["factor", "--input", "c5.txt"], dir.path());
    assert_eq!(code_of(&out), 0);
    let text = stdout_of(&out);
    assert!(text.starts_with("FACTOR\n"));
    assert!(text.contains("cycle(0 1 2 3 4)"));

    factorkit(
        &["gen", "--family", "hm", "--m", "2", "--output", "h2.txt"],
        dir.path(),
    );
    let out = factorkit(&["factor", "--input", "h2.txt", "--min-cycle", "5"], dir.path());
    assert_eq!(code_of(&out), 1);
    let text = stdout_of(&out);
    assert!(text.starts_with("NO-FACTOR\n"));
    assert!(text.contains("violating set {0} with c_tc = 2 > |S| = 1"));

    // with triangles allowed the same graph has a factor
    let out = factorkit(&["factor", "--input", "h2.txt", "--min-cycle", "3"], dir.path());
    assert_eq!(code_of(&out), 0);
}

#[test]
fn parse_errors_exit_2_with_line_numbers() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("bad.txt"), "n 3\n0 0\n").unwrap();
    let out = factorkit(&["compute", "--input", "bad.txt", "--param", "t"], dir.path());
    assert_eq!(code_of(&out), 2);
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("line 2"), "got {err:?}");
    assert!(err.contains("self-loop"));

    let out = factorkit(&["compute", "--input", "absent.txt", "--param", "t"], dir.path());
    assert_eq!(code_of(&out), 2);
}

#[test]
fn cap_violations_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    factorkit(
        &["gen", "--family", "path", "--n", "30", "--output", "p30.txt"],
        dir.path(),
    );
    let out = factorkit(&["compute", "--input", "p30.txt", "--param", "t"], dir.path());
    assert_eq!(code_of(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));

    // raising the cap makes it tractable again
    let out = factorkit(
        &["compute", "--input", "p30.txt", "--param", "t", "--cap", "30"],
        dir.path(),
    );
    assert_eq!(code_of(&out), 0);
}

#[test]
fn gen_is_deterministic_for_seeded_families() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["a.txt", "b.txt"] {
        factorkit(
            &[
                "gen", "--family", "random", "--n", "12", "--p", "0.4", "--seed", "9",
                "--output", name,
            ],
            dir.path(),
        );
    }
    let a = std::fs::read(dir.path().join("a.txt")).unwrap();
    let b = std::fs::read(dir.path().join("b.txt")).unwrap();
    assert_eq!(a, b);
    assert!(!a.is_empty());

    let out = factorkit(
        &["gen", "--family", "cactus", "--blocks", "5", "--seed", "3"],
        dir.path(),
    );
    assert_eq!(code_of(&out), 0);
    assert!(stdout_of(&out).starts_with("n 11\n"));
}

#[test]
fn gen_rejects_invalid_parameters() {
    let dir = tempfile::tempdir().unwrap();
    let out = factorkit(&["gen", "--family", "gm", "--m", "1"], dir.path());
    assert_eq!(code_of(&out), 2);
    let out = factorkit(&["gen", "--family", "random", "--n", "5"], dir.path());
    assert_eq!(code_of(&out), 2);
}

#[test]
fn sweep_writes_deterministic_csv() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "sweep", "--sizes", "5,6", "--per-size", "6", "--probs", "0.3,0.7",
        "--seed", "5", "--output",
    ];
    for name in ["s1.csv", "s2.csv"] {
        let mut full: Vec<&str> = args.to_vec();
        full.push(name);
        let out = factorkit(&full, dir.path());
        assert_eq!(code_of(&out), 0);
    }
    let a = std::fs::read_to_string(dir.path().join("s1.csv")).unwrap();
    let b = std::fs::read_to_string(dir.path().join("s2.csv")).unwrap();
    assert_eq!(a, b);
    assert!(a.starts_with("id,n,p,t,i,iprime,bind,factor,note\n"));
    assert_eq!(a.lines().count(), 13, "header plus 12 rows");
    // exact rationals only, never decimals, in the parameter columns
    for line in a.lines().skip(1) {
        let fields: Vec<&str> = line.split(',').collect();
        for value in &fields[3..7] {
            assert!(
                value.chars().all(|c| c.is_ascii_digit() || c == '/') || *value == "inf",
                "non-exact value {value} in {line}"
            );
        }
    }
}

#[test]
fn jobs_flag_leaves_results_unchanged() {
    let dir = tempfile::tempdir().unwrap();
    factorkit(
        &["gen", "--family", "random", "--n", "14", "--p", "0.5", "--seed", "21", "--output", "g.txt"],
        dir.path(),
    );
    let mut outputs = Vec::new();
    for jobs in ["1", "4"] {
        let out = factorkit(
            &["compute", "--input", "g.txt", "--param", "bind", "--jobs", jobs],
            dir.path(),
        );
        assert_eq!(code_of(&out), 0);
        outputs.push(stdout_of(&out));
    }
    assert_eq!(outputs[0], outputs[1]);
}
