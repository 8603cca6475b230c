//! End-to-end exercises of the binary: golden outputs, exit codes,
//! config echoes, and byte-level determinism.

use std::process::{Command, Output};

use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cogrowth"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

#[test]
fn generate_fibonacci_prefix() {
    let out = run(&["generate", "--spec", "fibonacci", "--n", "11"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "abaababaaba\n");
    // Payload stays clean; the config echo goes to stderr.
    assert!(stderr_of(&out).starts_with("# config: "));
}

#[test]
fn generate_periodic_prefix() {
    let out = run(&["generate", "--spec", "periodic:ab", "--n", "4"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "abab\n");
}

#[test]
fn generate_missing_spec_file_is_usage_error() {
    let out = run(&["generate", "--spec", "/no/such/spec.json", "--n", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("cannot read spec"));
}

#[test]
fn generate_from_json_spec_file() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("fib.json");
    std::fs::write(
        &path,
        r#"{"name": "fib-json", "variant": "morphic",
            "images": {"a": "ab", "b": "a"}, "seed": "a"}"#,
    )
    .unwrap();
    let out = run(&["generate", "--spec", path.to_str().unwrap(), "--n", "11"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "abaababaaba\n");
}

#[test]
fn spec_without_recurrence_guarantee_is_marked_uncertified() {
    // a -> aaab, b -> b is a valid morphic spec, but its fixed point
    // grows new subwords at exponentially sparse positions, so no
    // finite scan can certify the counts complete.
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("sparse.json");
    std::fs::write(
        &path,
        r#"{"name": "sparse", "variant": "morphic",
            "images": {"a": "aaab", "b": "b"}, "seed": "a"}"#,
    )
    .unwrap();
    let p = path.to_str().unwrap();

    let out = run(&["cogrowth", "--spec", p, "--n-max", "6"]);
    assert!(out.status.success());
    let first = stdout_of(&out).lines().next().unwrap().to_string();
    assert!(first.contains("uncertified"), "{first}");

    let out = run(&["rauzy", "--spec", p, "--k", "2"]);
    assert!(out.status.success());
    let first = stdout_of(&out).lines().next().unwrap().to_string();
    assert!(first.contains("uncertified"), "{first}");

    // Certified counts are still there for sources that guarantee them.
    let out = run(&["cogrowth", "--spec", "fibonacci", "--n-max", "6"]);
    let first = stdout_of(&out).lines().next().unwrap().to_string();
    assert!(!first.contains("uncertified"), "{first}");

    // The classification and regulator-bound checks refuse the spec
    // outright: their verdicts need exact strata.
    for lemma in ["prop1", "corollary-er"] {
        let out = run(&["verify", "--lemma", lemma, "--spec", p]);
        assert_eq!(out.status.code(), Some(3), "lemma {lemma}");
    }
}

#[test]
fn generate_beyond_explicit_prefix_is_data_error() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("short.json");
    std::fs::write(
        &path,
        r#"{"name": "short", "variant": "explicit", "word": "abaab"}"#,
    )
    .unwrap();
    let ok = run(&["generate", "--spec", path.to_str().unwrap(), "--n", "5"]);
    assert_eq!(stdout_of(&ok), "abaab\n");
    let too_long = run(&["generate", "--spec", path.to_str().unwrap(), "--n", "6"]);
    assert_eq!(too_long.status.code(), Some(3));
}

#[test]
fn malformed_json_spec_is_usage_error() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "{not json").unwrap();
    let out = run(&["generate", "--spec", path.to_str().unwrap(), "--n", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cogrowth_csv_layout_and_known_rows() {
    let out = run(&["cogrowth", "--spec", "fibonacci", "--n-max", "5"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].starts_with("# config: "));
    assert_eq!(lines[1], "n,cogrowth,log3n,ratio,running_max");
    assert_eq!(lines[2], "2,1,0.630930,1.584963,1.584963");
    assert_eq!(lines[3], "3,2,1.000000,2.000000,2.000000");
}

#[test]
fn cogrowth_periodic_counts_stay_constant() {
    let out = run(&["cogrowth", "--spec", "periodic:ab", "--n-max", "50"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let mut prev_max = 0.0f64;
    for line in text.lines().skip(2) {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields[1], "2", "row: {line}");
        let running: f64 = fields[4].parse().unwrap();
        assert!(running >= prev_max);
        prev_max = running;
    }
}

#[test]
fn rauzy_dot_for_order_one() {
    let out = run(&["rauzy", "--spec", "fibonacci", "--k", "1"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let (first, rest) = text.split_once('\n').unwrap();
    assert!(first.starts_with("// config: "));
    assert_eq!(
        rest,
        "digraph rauzy_k1 {\n\
         \x20 v0 [label=\"a\"];\n\
         \x20 v1 [label=\"b\"];\n\
         \x20 v0 -> v0 [label=\"aa\"];\n\
         \x20 v0 -> v1 [label=\"ab\"];\n\
         \x20 v1 -> v0 [label=\"ba\"];\n\
         }\n"
    );
}

#[test]
fn rauzy_order_zero_has_one_vertex_two_loops() {
    let out = run(&["rauzy", "--spec", "fibonacci", "--k", "0"]);
    let text = stdout_of(&out);
    assert_eq!(text.matches("[label=").count(), 3); // 1 vertex + 2 edges
    assert_eq!(text.matches("v0 -> v0").count(), 2);
}

#[test]
fn verify_reports_pass_and_echo_config() {
    let out = run(&[
        "verify",
        "--lemma",
        "evol",
        "--seed",
        "42",
        "--count",
        "25",
        "--max-vertices",
        "8",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(doc["pass"], true);
    assert_eq!(doc["config"]["lemma"], "evol");
    assert_eq!(doc["config"]["seed"], 42);
    let report = &doc["reports"][0];
    assert_eq!(report["detail"]["passes"], 25);
    assert_eq!(report["detail"]["violations"].as_array().unwrap().len(), 0);
}

#[test]
fn verify_all_covers_every_lemma() {
    let out = run(&[
        "verify",
        "--lemma",
        "all",
        "--count",
        "5",
        "--max-vertices",
        "5",
        "--n-max",
        "12",
        "--k-max",
        "4",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    let names: Vec<&str> = doc["reports"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["lemma"].as_str().unwrap())
        .collect();
    assert_eq!(
        names,
        ["evol", "del-edge", "main", "corollary-main", "corollary-er", "prop1", "theorem"]
    );
}

#[test]
fn verify_periodic_all_skips_sequence_checks_honestly() {
    // corollary-er rejects periodic specs, which is a data error, not a
    // silent pass.
    let out = run(&["verify", "--lemma", "corollary-er", "--spec", "periodic:ab"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_budget_env_exhaustion_exits_4() {
    let out = bin()
        .env("COGROWTH_BUDGET", "10")
        .args(["verify", "--lemma", "main", "--count", "2", "--max-vertices", "4"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
    assert!(stderr_of(&out).contains("budget"));
}

#[test]
fn verify_budget_env_must_be_numeric() {
    let out = bin()
        .env("COGROWTH_BUDGET", "not-a-number")
        .args(["verify", "--lemma", "main"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_lemma_is_usage_error() {
    let out = run(&["verify", "--lemma", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn out_flag_writes_the_payload_to_a_file() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("profile.csv");
    let out = run(&[
        "cogrowth",
        "--spec",
        "fibonacci",
        "--n-max",
        "5",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout_of(&out).is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.contains("3,2,1.000000,2.000000,2.000000"));
}

#[test]
fn repeated_invocations_are_byte_identical() {
    for args in [
        vec!["generate", "--spec", "thue-morse", "--n", "64"],
        vec!["cogrowth", "--spec", "thue-morse", "--n-max", "30"],
        vec!["rauzy", "--spec", "fibonacci", "--k", "3"],
        vec!["verify", "--lemma", "evol", "--count", "20", "--max-vertices", "7"],
        vec!["verify", "--lemma", "prop1", "--k-max", "6"],
    ] {
        let first = run(&args);
        let second = run(&args);
        assert!(first.status.success(), "{args:?}");
        assert_eq!(first.stdout, second.stdout, "{args:?}");
    }
}
