use std::io::Write;
use std::process::{Command, Stdio};

fn run(args: &[&str], input: &str) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_wiener-extremal"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn wiener_of_c4() {
    let (code, out, _) = run(&["wiener"], "Cl\n");
    assert_eq!((code, out.as_str()), (0, "8\n"));
}

#[test]
fn domain_errors_exit_one() {
    let (code, out, err) = run(&["bound", "--which", "max-uni", "--n", "3", "--m", "1"], "");
    assert_eq!(code, 1);
    assert!(out.is_empty() && err.starts_with("error:"));
    assert_eq!(
        run(&["verify", "--suite", "main", "--n-max", "13"], "").0,
        1
    );
    assert_eq!(run(&["wiener"], "not graph6\n").0, 1);
    assert_eq!(run(&["table", "--n", "5", "--frobnicate"], "").0, 1);
    assert_eq!(run(&["--jobs", "0", "table", "--n", "5"], "").0, 1);
}

#[test]
fn bounds() {
    let cases = [
        ("max-uni", "10", "3", "129"),
        ("dank-min", "6", "2", "21"),
        ("dank-max", "8", "3", "79"),
        ("dz-tree", "7", "3", "44"),
        ("dz-uni", "6", "3", "26"),
    ];
    for (which, n, m, want) in cases {
        let (code, out, _) = run(&["bound", "--which", which, "--n", n, "--m", m], "");
        assert_eq!((code, out.trim()), (0, want), "{which}");
    }
}

#[test]
fn construct_pipes_into_measurements() {
    let (_, g6, _) = run(&["construct", "--family", "g3", "--params", "0,3"], "");
    assert_eq!(run(&["wiener"], &g6).1, "31\n");
    assert_eq!(run(&["match"], &g6).1, "3\n");
    let (_, json, _) = run(
        &[
            "--format",
            "json",
            "construct",
            "--family",
            "anm",
            "--params",
            "8,3",
        ],
        "",
    );
    assert_eq!(run(&["--format", "json", "wiener"], &json).1, "79\n");
}

#[test]
fn enumerate_streams_one_graph_per_line() {
    assert_eq!(run(&["enumerate", "--n", "6"], "").1.lines().count(), 13);
    assert_eq!(
        run(&["enumerate", "--n", "7", "--trees"], "")
            .1
            .lines()
            .count(),
        11
    );
    assert_eq!(run(&["enumerate", "--n", "10", "--trees"], "").0, 1);
}

#[test]
fn table_csv() {
    let (code, out, _) = run(&["table", "--n", "6", "--csv"], "");
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "n,m,w_max,extremal_count,extremal_g6");
    assert!(lines[1].starts_with("6,2,28,2,"));
    assert_eq!(lines[1].split(',').nth(4).unwrap().split(';').count(), 2);
    assert!(lines[2].starts_with("6,3,31,1,"));
    let parallel = run(&["--jobs", "4", "table", "--n", "6", "--csv"], "").1;
    assert_eq!(parallel, out);
}

#[test]
fn verify_reports_json() {
    let (code, out, _) = run(&["verify", "--suite", "main", "--n-max", "9"], "");
    assert_eq!(code, 0);
    let report: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["passed"], true);
    assert_eq!(report["suite"], "main");
}

#[test]
fn transforms_emit_reports() {
    let (code, out, _) = run(&["transform", "--op", "g2"], "Dhc\n");
    assert_eq!(code, 0);
    let rep: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(rep["before"], "Dhc");
    assert!(rep["delta_wiener"].as_i64().unwrap() > 0);
    assert_eq!(run(&["transform", "--op", "g1"], "Cl\n").0, 1);
    assert_eq!(run(&["transform", "--op", "spr"], "Dhc\n").0, 1);
    let a = run(
        &[
            "--seed",
            "3",
            "transform",
            "--op",
            "path-regraft",
            "--random",
            "20",
        ],
        "",
    )
    .1;
    let b = run(
        &[
            "--seed",
            "3",
            "transform",
            "--op",
            "path-regraft",
            "--random",
            "20",
        ],
        "",
    )
    .1;
    assert_eq!(a.lines().count(), 20);
    assert_eq!(a, b);
}
