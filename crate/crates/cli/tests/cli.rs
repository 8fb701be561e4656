use std::process::{Command, Output};

use serde_json::{json, Value};

fn hermite2d(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hermite2d"))
        .args(args)
        .env_remove("HERMITE2D_MAX_DEGREE")
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn coeffs_examples() {
    let out = hermite2d(&["coeffs", "--m", "1", "--n", "1"]);
    assert_eq!(
        stdout_json(&out),
        json!({"terms": [{"exp": {"z1": 1, "z2": 1}, "coeff": "1"}, {"exp": {}, "coeff": "-1"}]})
    );
    let out = hermite2d(&["coeffs", "--m", "0", "--n", "0"]);
    assert_eq!(
        stdout_json(&out),
        json!({"terms": [{"exp": {}, "coeff": "1"}]})
    );
    let out = hermite2d(&["coeffs", "--m", "2", "--n", "1", "--g", "0,1;1,0"]);
    assert_eq!(
        stdout_json(&out),
        json!({"terms": [{"exp": {"z1": 1, "z2": 2}, "coeff": "1"}, {"exp": {"z2": 1}, "coeff": "-2"}]})
    );
}

#[test]
fn coeffs_csv() {
    let out = hermite2d(&["coeffs", "--m", "2", "--n", "2", "--format", "csv"]);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "m,n,exp_z1,exp_z2,coeff\n2,2,2,2,1\n2,2,1,1,-4\n2,2,0,0,2\n"
    );
}

#[test]
fn malformed_g_names_the_token() {
    let out = hermite2d(&["coeffs", "--m", "1", "--n", "1", "--g", "1,2;3,q"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("\"q\""));
}

#[test]
fn eval_on_the_diagonal() {
    let out = hermite2d(&["eval", "--m", "1", "--n", "1", "--z", "1+i"]);
    assert_eq!(stdout_json(&out)["value"], "1");
    let out = hermite2d(&["eval", "--m", "2", "--n", "1", "--z1", "i", "--z2", "-1"]);
    // z1² z2 − 2 z1 at (i, −1)
    assert_eq!(stdout_json(&out)["value"], "1-2i");
}

#[test]
fn matrix_examples() {
    let out = hermite2d(&["matrix", "--L", "1", "--kind", "real-basis"]);
    assert_eq!(
        stdout_json(&out),
        json!({"kind": "M(L)", "L": 1, "entries": [["-1/2i", "1/2i"], ["1/2", "1/2"]]})
    );
    let out = hermite2d(&[
        "matrix",
        "--L",
        "3",
        "--kind",
        "deformation",
        "--g",
        "1,0;0,1",
    ]);
    let entries = stdout_json(&out)["entries"].clone();
    let identity: Vec<Vec<&str>> = (0..4)
        .map(|r| (0..4).map(|c| if r == c { "1" } else { "0" }).collect())
        .collect();
    assert_eq!(entries, json!(identity));
    let out = hermite2d(&[
        "matrix",
        "--L",
        "1",
        "--kind",
        "deformation",
        "--g",
        "0,1;1,0",
    ]);
    assert_eq!(
        stdout_json(&out)["entries"],
        json!([["0", "1"], ["1", "0"]])
    );
}

#[test]
fn deformation_matrix_requires_g() {
    let out = hermite2d(&["matrix", "--L", "2", "--kind", "deformation"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn det_examples() {
    let out = hermite2d(&["det", "--N", "2", "--s", "0", "--z", "1/2+1/3i"]);
    let record = stdout_json(&out);
    assert_eq!(record["delta"], "1");
    assert_eq!(record["pi_power"], 2);
    assert_eq!(record["positive"], true);
    assert_eq!(record["z"], "1/2+1/3i");

    let out = hermite2d(&["det", "--N", "1", "--s", "0", "--z", "0"]);
    let record = stdout_json(&out);
    assert_eq!(
        (record["delta"].as_str(), record["pi_power"].as_i64()),
        (Some("1"), Some(1))
    );

    let out = hermite2d(&["det", "--N", "2", "--s", "0", "--g", "1,1;0,1", "--z", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_examples() {
    let out = hermite2d(&["verify", "orthogonality", "--max-degree", "3"]);
    assert!(out.status.success());
    let lines = String::from_utf8(out.stdout).unwrap();
    assert!(lines.lines().count() > 0);
    for line in lines.lines() {
        let report: Value = serde_json::from_str(line).unwrap();
        assert_eq!(report["pass"], true, "{line}");
    }

    let out = hermite2d(&["verify", "determinants", "--N", "3"]);
    assert!(out.status.success());
    let lines = String::from_utf8(out.stdout).unwrap();
    assert!(lines.lines().any(|l| l.contains("\"N\":3")));
    assert!(!lines.lines().any(|l| l.contains("\"N\":4")));

    let out = hermite2d(&["verify", "gf", "--max-degree", "-1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());

    let out = hermite2d(&["verify", "no-such-suite"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn max_degree_flag_beats_environment() {
    let count = |out: Output| String::from_utf8(out.stdout).unwrap().lines().count();
    let env_only = Command::new(env!("CARGO_BIN_EXE_hermite2d"))
        .args(["verify", "real-hermite"])
        .env("HERMITE2D_MAX_DEGREE", "2")
        .output()
        .unwrap();
    assert_eq!(count(env_only), 3);
    let both = Command::new(env!("CARGO_BIN_EXE_hermite2d"))
        .args(["verify", "real-hermite", "--max-degree", "4"])
        .env("HERMITE2D_MAX_DEGREE", "2")
        .output()
        .unwrap();
    assert_eq!(count(both), 5);
    assert_eq!(count(hermite2d(&["verify", "real-hermite"])), 13);
}

#[test]
fn verify_writes_to_output_file() {
    let path = std::env::temp_dir().join(format!("hermite2d-swap-{}.jsonl", std::process::id()));
    let out = hermite2d(&[
        "verify",
        "swap",
        "--max-degree",
        "1",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(text.lines().count(), 8);
}
