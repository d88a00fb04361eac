use std::path::PathBuf;
use std::process::{Command, Output};

use tempfile::TempDir;

const GENERATORS: &str = "\
n=12
(0 10 1 11 2 9)(3 7 4 8 5 6)
(0 3)(1 4)(2 5)(6 10)(7 11)(8 9)
(0 7 2 6 1 8)(3 10 5 9 4 11)
";

fn centra(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_centra"))
        .args(args)
        .env_remove("CENTRA_MAX_ORDER")
        .output()
        .expect("run centra")
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

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

#[test]
fn analyze_c12() {
    let dir = TempDir::new().unwrap();
    let table = stdout(&centra(&["construct", "--name", "c12"]));
    let path = write(&dir, "c12.txt", &table);
    let out = centra(&[
        "analyze",
        "--input",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let v = json(&out);
    assert_eq!(v["order"], 12);
    assert_eq!(v["identity"], 0);
    assert_eq!(v["predicates"]["C"]["holds"], true);
    assert_eq!(v["predicates"]["associative"]["holds"], false);
    assert_eq!(
        v["predicates"]["associative"]["witness"],
        serde_json::json!([3, 6, 3])
    );
}

#[test]
fn analyze_cyclic_three() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "c3.txt", "3\n0 1 2\n1 2 0\n2 0 1\n");
    let out = centra(&[
        "analyze",
        "--input",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    for name in [
        "LC",
        "RC",
        "C",
        "associative",
        "commutative",
        "LIP",
        "RIP",
        "central_square",
    ] {
        assert_eq!(v["predicates"][name]["holds"], true, "{name}");
    }
}

#[test]
fn analyze_text_and_named_fixture() {
    let out = centra(&["analyze", "--name", "q8"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("associative"));
    assert!(text.contains("center         [0, 1]"));
}

#[test]
fn ragged_file_is_malformed() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "ragged.txt", "3\n0 1 2\n1 2\n2 0 1\n");
    let out = centra(&["analyze", "--input", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("line 3"), "{}", stderr(&out));
}

#[test]
fn missing_file_is_malformed() {
    let out = centra(&["analyze", "--input", "/nonexistent/table.txt"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn generate_reproduces_c12_bytes() {
    let dir = TempDir::new().unwrap();
    let gens = write(&dir, "gens.txt", GENERATORS);
    let out = centra(&["generate", "--input", gens.to_str().unwrap(), "--law", "c"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert_eq!(out.stdout, centra(&["construct", "--name", "c12"]).stdout);
}

#[test]
fn generate_from_one_transposition() {
    let dir = TempDir::new().unwrap();
    let gens = write(&dir, "gens.txt", "n=2\n(0 1)\n");
    let out = centra(&[
        "generate",
        "--input",
        gens.to_str().unwrap(),
        "--law",
        "lcrc",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "2\n0 1\n1 0\n");
}

#[test]
fn inconsistent_generators_overflow() {
    let dir = TempDir::new().unwrap();
    let gens = write(&dir, "gens.txt", "n=3\n(0 1)\n(0 1 2)\n");
    let out = centra(&["generate", "--input", gens.to_str().unwrap()]);
    assert_eq!(code(&out), 3);
    assert!(
        stderr(&out).contains("closure exceeded 3"),
        "{}",
        stderr(&out)
    );
}

#[test]
fn malformed_cycle_in_generators() {
    let dir = TempDir::new().unwrap();
    let gens = write(&dir, "gens.txt", "n=3\n(0 1\n");
    let out = centra(&["generate", "--input", gens.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("line 2"));
}

#[test]
fn verify_lc_auto_exhaustive() {
    let out = centra(&[
        "verify",
        "--theorem",
        "lc-auto",
        "--corpus",
        "exhaustive:5",
        "--seed",
        "1",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["items"], 63);
    assert_eq!(v["disagreements"], serde_json::json!([]));
}

#[test]
fn verify_agreement_theorems_on_mixed_corpus() {
    for theorem in ["rc-auto", "c-mu", "closure-lcrc", "closure-c", "power"] {
        let out = centra(&[
            "verify",
            "--theorem",
            theorem,
            "--corpus",
            "exhaustive:4,random:6-7:20,catalog",
            "--seed",
            "3",
        ]);
        assert_eq!(code(&out), 0, "{theorem}: {}", stdout(&out));
    }
}

#[test]
fn verify_iso_lcrc_on_c12() {
    let out = centra(&[
        "verify",
        "--theorem",
        "iso-lcrc",
        "--corpus",
        "c12",
        "--shape",
        "ABB",
        "--seed",
        "1",
        "--budget",
        "10000",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["counterexamples"], 0);
    let f = &v["findings"][0];
    assert_eq!(f["shape"], "ABB");
    assert_eq!(f["budget"], 10000);
    assert_eq!(f["source"].as_str().unwrap().len(), 64);
    assert!(f["keepers"].as_u64().unwrap() > 10000);
    assert!(f["hypothesis_filtered"].is_u64());
}

#[test]
fn verify_central_square_small_budget() {
    let out = centra(&[
        "verify",
        "--theorem",
        "central-square",
        "--seed",
        "2",
        "--budget",
        "50",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["findings"].as_array().unwrap().len(), 12);
}

#[test]
fn verify_output_is_deterministic() {
    let args = [
        "verify",
        "--theorem",
        "iso-cc",
        "--corpus",
        "klein,cyclic:6",
        "--seed",
        "9",
        "--budget",
        "300",
    ];
    let a = centra(&args);
    let b = centra(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_on_non_loop_input_is_malformed() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "q.txt", "3\n0 2 1\n2 1 0\n1 0 2\n");
    let out = centra(&[
        "verify",
        "--theorem",
        "lc-auto",
        "--input",
        path.to_str().unwrap(),
        "--seed",
        "1",
    ]);
    assert_eq!(code(&out), 2, "{}", stderr(&out));
}

#[test]
fn usage_errors() {
    assert_eq!(
        code(&centra(&["verify", "--theorem", "nope", "--seed", "1"])),
        4
    );
    assert_eq!(code(&centra(&["verify", "--theorem", "lc-auto"])), 4);
    assert_eq!(
        code(&centra(&[
            "verify",
            "--theorem",
            "lc-auto",
            "--seed",
            "1",
            "--corpus",
            "bogus"
        ])),
        4
    );
    assert_eq!(
        code(&centra(&[
            "verify",
            "--theorem",
            "iso-c",
            "--seed",
            "1",
            "--shape",
            "AAB"
        ])),
        4
    );
    assert_eq!(code(&centra(&["construct", "--name", "nothing"])), 4);
    assert_eq!(code(&centra(&["frobnicate"])), 4);
    assert_eq!(code(&centra(&["--help"])), 0);
    assert_eq!(code(&centra(&["--version"])), 0);
}

#[test]
fn autotopisms_of_c2() {
    let out = centra(&["autotopisms", "--name", "cyclic:2"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["count"], 4);
    assert_eq!(
        v["triples"][0],
        serde_json::json!({"u": "()", "v": "()", "w": "()"})
    );
}

#[test]
fn autotopism_cap() {
    let out = centra(&["autotopisms", "--name", "c12"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("exceeds"));

    let out = centra(&["autotopisms", "--name", "c12", "--max-order", "12"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["count"], 54);

    let out = Command::new(env!("CARGO_BIN_EXE_centra"))
        .args(["autotopisms", "--name", "c12"])
        .env("CENTRA_MAX_ORDER", "12")
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
}
