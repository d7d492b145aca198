//! End-to-end tests of the `bei` binary: exact outputs, exit codes, and
//! machine-readable formats, driven through real process spawns.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use bei_core::algebra::Poly;
use bei_core::field::PrimeField;

const P3: &str = "n 3\n1 2\n2 3\n";
const STAR: &str = "n 4\n1 2\n1 3\n1 4\n";

fn bei(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_bei"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn bei");
    child
        .stdin
        .as_mut()
        .expect("stdin")
        .write_all(stdin.as_bytes())
        .expect("write stdin");
    child.wait_with_output().expect("wait")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn recognize_reports_labeling_and_facets() {
    let out = bei(&["recognize", "-"], P3);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr_of(&out));
    assert_eq!(stdout_of(&out), "PI; labeling 1 2 3; facets [1,2],[2,3]\n");
}

#[test]
fn recognize_rejects_the_star() {
    let out = bei(&["recognize", "-"], STAR);
    assert_eq!(exit_code(&out), 2);
    assert_eq!(stdout_of(&out), "not PI\n");
}

#[test]
fn malformed_input_is_an_input_error() {
    let out = bei(&["recognize", "-"], "bad\n");
    assert_eq!(exit_code(&out), 1);
    assert!(
        stderr_of(&out).contains("parse error at line 1"),
        "stderr: {}",
        stderr_of(&out)
    );
}

#[test]
fn classify_reg2_covers_all_three_answers() {
    let out = bei(&["classify-reg2", "-"], P3);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(
        stdout_of(&out),
        "reg 2: two overlapping interval cliques [1,2] and [2,3]\n"
    );

    let disjoint = "n 4\n1 2\n3 4\n";
    let out = bei(&["classify-reg2", "-"], disjoint);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(
        stdout_of(&out),
        "reg 2: disjoint complete graphs K_2 and K_2\n"
    );

    let p5 = "n 5\n1 2\n2 3\n3 4\n4 5\n";
    let out = bei(&["classify-reg2", "-"], p5);
    assert_eq!(exit_code(&out), 2);
    assert_eq!(stdout_of(&out), "not regularity 2\n");

    let out = bei(&["classify-reg2", "-"], STAR);
    assert_eq!(exit_code(&out), 2);
    assert_eq!(stdout_of(&out), "not PI\n");
}

#[test]
fn betti_star_shows_the_gap() {
    let out = bei(&["betti", "-"], STAR);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr_of(&out));
    let text = stdout_of(&out);
    assert!(text.contains("S/J_G over F_32003:"), "{text}");
    assert!(text.contains("S/ini(J_G) over F_32003:"), "{text}");
    assert!(text.contains("total:  1  3  4  2"), "{text}");
    assert!(text.contains("total:  1  6  8  3"), "{text}");
    let gap = text.split("gap (initial - binomial):").nth(1).unwrap();
    for line in ["(1,3): +3", "(2,3): +3", "(2,4): +1", "(3,4): +1"] {
        assert!(gap.contains(line), "missing {line} in {gap}");
    }
}

#[test]
fn betti_truncation_needs_an_opt_in() {
    let out = bei(&["betti", "-", "--max-j", "2"], STAR);
    assert_eq!(exit_code(&out), 3, "stdout: {}", stdout_of(&out));

    let out = bei(&["betti", "-", "--max-j", "2", "--allow-truncated"], STAR);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("(truncated"), "{text}");
    // everything above internal degree 2 is clipped, so no gap survives
    assert!(text.contains("all entries zero"), "{text}");
}

#[test]
fn betti_json_has_both_tables_and_gap() {
    let out = bei(&["betti", "-", "--format", "json"], P3);
    assert_eq!(exit_code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).expect("valid json");
    assert!(v.get("binomial").is_some());
    assert!(v.get("initial").is_some());
    // the path is proper interval in a closed labeling: tables agree
    assert_eq!(v["gap"].as_array().map(Vec::len), Some(0));
    assert_eq!(v["binomial"]["char"], 32003);

    let out = bei(&["betti", "-", "--format", "json", "--ideal", "binomial"], P3);
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).expect("valid json");
    assert_eq!(v["char"], 32003);
    assert!(v.get("entries").is_some());
}

#[test]
fn groebner_dump_parses_back() {
    let out = bei(&["ideal", "-", "--kind", "groebner"], STAR);
    assert_eq!(exit_code(&out), 0);
    let field = PrimeField::default_field();
    let mut degrees = Vec::new();
    for line in stdout_of(&out).lines() {
        let p = Poly::parse_xy(&field, 4, line).expect("dump line parses");
        degrees.push(p.degree().expect("nonzero"));
    }
    // three edge binomials plus the higher-degree completion the star needs
    assert_eq!(degrees.iter().filter(|&&d| d == 2).count(), 3);
    assert!(degrees.iter().any(|&d| d > 2));
}

#[test]
fn initial_ideal_dump_of_closed_graph_is_the_edge_monomials() {
    let out = bei(&["ideal", "-", "--kind", "initial"], P3);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_of(&out), "x1*y2\nx2*y3\n");
}

#[test]
fn enumerate_lists_closed_representatives() {
    let out = bei(&["enumerate", "--n", "2"], "");
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_of(&out), "n 2\n1 2\nlabeling 1 2\n\ncount 1\n");

    let out = bei(&["enumerate", "--n", "4"], "");
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.ends_with("count 5\n"), "{text}");
    // the disjoint pair of edges appears, in its block labeling
    assert!(text.contains("n 4\n1 2\n3 4\nlabeling"), "{text}");
    // the star and the 4-cycle admit no closed labeling and must be absent
    // (matched as whole blocks: K_4's edge list contains the star's as a prefix)
    assert!(!text.contains("n 4\n1 2\n1 3\n1 4\nlabeling"), "{text}");
    assert!(!text.contains("n 4\n1 2\n1 4\n2 3\n3 4\nlabeling"), "{text}");
}

#[test]
fn verify_suite_json_is_deterministic_and_clean() {
    let args = ["verify", "--suite", "exact-seq", "--max-n", "3", "--out", "-"];
    let first = bei(&args, "");
    assert_eq!(exit_code(&first), 0, "stderr: {}", stderr_of(&first));
    let second = bei(&args, "");
    assert_eq!(first.stdout, second.stdout, "verify JSON must be byte-stable");

    let v: serde_json::Value = serde_json::from_str(&stdout_of(&first)).expect("valid json");
    assert_eq!(v["scenario"], "exact-seq");
    assert_eq!(v["failed"], 0);
    // human summary goes to stderr when JSON goes to stdout
    assert!(stderr_of(&first).contains("suite exact-seq"), "{}", stderr_of(&first));
}

#[test]
fn verify_report_written_to_file() {
    let dir = std::env::temp_dir().join("bei-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let _ = std::fs::remove_file(&path);
    let out = bei(
        &[
            "verify",
            "--suite",
            "exact-seq",
            "--max-n",
            "3",
            "--out",
            path.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(exit_code(&out), 0);
    // summary on stdout in file mode
    assert!(stdout_of(&out).contains("suite exact-seq"));
    let written = std::fs::read_to_string(&path).expect("report file");
    let v: serde_json::Value = serde_json::from_str(&written).expect("valid json");
    assert_eq!(v["passed"], 1);
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn jobs_flag_is_accepted_globally() {
    let out = bei(&["--jobs", "1", "enumerate", "--n", "2"], "");
    assert_eq!(exit_code(&out), 0);
}

#[test]
fn alternative_characteristic_is_threaded_through() {
    let out = bei(&["betti", "-", "--char", "101", "--ideal", "binomial"], P3);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout_of(&out).contains("S/J_G over F_101:"));

    let out = bei(&["betti", "-", "--char", "4"], P3);
    assert_eq!(exit_code(&out), 1, "4 is not prime");
}
