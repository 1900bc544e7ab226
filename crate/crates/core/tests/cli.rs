use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_matchposet"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
    )
}

fn run_with_stdin(args: &[&str], input: &str) -> (i32, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_matchposet"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
    )
}

#[test]
fn compare_is_deterministic_across_runs_and_threads() {
    let args = ["compare", "--moves", "I,II,x:231-312", "412563", "41263785"];
    let first = run(&args);
    assert_eq!(first.0, 0);
    assert_eq!(run(&args), first);
    let mut threaded = vec!["--threads", "3"];
    threaded.extend(args);
    assert_eq!(run(&threaded), first);
}

#[test]
fn json_result_document() {
    let (code, out) = run(&["--format", "json", "compare", "2143", "34152"]);
    assert_eq!(code, 0);
    let doc: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["comparable"], true);
    assert_eq!(doc["kind"], "permutation");
    assert_eq!(doc["start"], "2143");
    assert_eq!(doc["end"], "34152");
    assert_eq!(doc["certificate"].as_array().unwrap().len(), 2);
    assert!(doc["states_explored"].as_u64().unwrap() > 0);

    let (code, out) = run(&["--format", "json", "compare", "412563", "41263785"]);
    assert_eq!(code, 0);
    let doc: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["comparable"], false);
    assert_eq!(doc["certificate"], Value::Array(Vec::new()));
}

#[test]
fn emitted_certificates_verify_and_tampering_is_caught() {
    for args in [
        ["--format", "json", "compare", "2143", "34152"].as_slice(),
        &[
            "--format", "json", "compare", "--kind", "matching", "1-2", "1-3 2-4",
        ],
        &[
            "--format",
            "json",
            "compare",
            "--moves",
            "I,II,x:231-312",
            "412563",
            "41263785",
        ],
    ] {
        let (_, doc) = run(args);
        assert_eq!(
            run_with_stdin(&["verify", "-"], &doc),
            (
                0,
                format!("valid ({} steps)\n", {
                    let v: Value = serde_json::from_str(&doc).unwrap();
                    v["certificate"].as_array().unwrap().len()
                })
            )
        );
        let path =
            std::env::temp_dir().join(format!("matchposet-cert-{}.json", std::process::id()));
        std::fs::write(&path, &doc).unwrap();
        assert_eq!(run(&["verify", path.to_str().unwrap()]).0, 0);
        std::fs::remove_file(&path).unwrap();
    }
    let (_, doc) = run(&["--format", "json", "compare", "2143", "34152"]);
    let forged = doc.replace("34152", "35142");
    let (code, out) = run_with_stdin(&["verify", "-"], &forged);
    assert_eq!(code, 1);
    assert!(out.starts_with("invalid:"), "{out}");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["compare", "412563", "41263785"]).0, 0);
    assert_eq!(
        run(&["--budget", "20", "compare", "412563", "41263785"]).0,
        2
    );
    assert_eq!(run(&["compare", "4125", "41263785x"]).0, 1);
    assert_eq!(run(&["compare", "--moves", "III", "12", "21"]).0, 1);
    assert_eq!(run(&["frobnicate"]).0, 1);
    assert_eq!(
        run(&["--budget", "20", "compare", "412563", "41263785"]).1,
        "unknown (budget exceeded)\nstates explored: 20\n"
    );
}

#[test]
fn fork_pair_is_an_antichain() {
    let (code, out) = run(&["antichain", "412563", "41263785"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().last(), Some("antichain"));
    let (_, out) = run(&[
        "antichain",
        "--moves",
        "I,II,x:231-312",
        "412563",
        "41263785",
    ]);
    assert_eq!(out.lines().last(), Some("not an antichain"));
}

#[test]
fn dot_output_round_trips_through_graph_input() {
    let (code, dot) = run(&["--format", "dot", "graph", "41263785"]);
    assert_eq!(code, 0);
    assert!(dot.starts_with("//") || dot.contains("graph"), "{dot}");
    let (code, out) = run(&["graph", &dot]);
    assert_eq!(code, 0);
    assert!(out.ends_with("permutation: 41263785\n"), "{out}");
}

#[test]
fn suite_reports_every_property() {
    let (code, out) = run(&[
        "--threads",
        "2",
        "suite",
        "--max-n",
        "5",
        "--max-vertices",
        "6",
    ]);
    assert_eq!(code, 0);
    assert!(out.lines().count() >= 12);
    assert!(out.lines().all(|l| l.starts_with("ok")), "{out}");
}
