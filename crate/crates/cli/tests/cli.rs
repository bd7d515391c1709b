use std::io::Write;
use std::process::{Command, Output, Stdio};

fn cantab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cantab"))
        .args(args)
        .env_remove("CANTAB_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut full = vec!["--format", "structured"];
    full.extend_from_slice(args);
    let o = cantab(&full);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn check_plain() {
    let o = cantab(&["check", "111/112/223"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "cantorian: yes, bi-cantorian: yes\n");

    let o = cantab(&["check", "11/12", "--witness"]);
    let text = stdout(&o);
    assert!(text.starts_with("cantorian: no, bi-cantorian: no\n"));
    assert!(text.contains("w=11"));
}

#[test]
fn check_structured_witness() {
    let v = json(&["check", "11/12", "--witness"]);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "check");
    assert_eq!(v["results"]["cantorian"], false);
    assert_eq!(v["results"]["witness"]["word"], serde_json::json!([1, 1]));
}

#[test]
fn census_matches_known_cell() {
    let o = cantab(&["census", "4", "2", "--bicantorian"]);
    let text = stdout(&o);
    assert!(text.contains("6/21, total 1744 = 109·2^4"), "{text}");
    assert!(text.contains("bi-cantorian: 182"), "{text}");

    let v = json(&["census", "3", "3"]);
    assert_eq!(v["results"]["classes"], 5);
    assert_eq!(v["results"]["tested"], 9);
    assert_eq!(v["results"]["total"], "5076");
}

#[test]
fn census_above_n_reuses_smaller_alphabet() {
    let v = json(&["census", "2", "5"]);
    assert_eq!(v["results"]["total"], "400");
}

#[test]
fn structured_output_is_deterministic() {
    let a = cantab(&["--format", "structured", "--workers", "1", "census", "4", "2", "--classes"]);
    let b = cantab(&["--format", "structured", "--workers", "3", "census", "4", "2", "--classes"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn reduce_round_trips_through_a_file() {
    let o = cantab(&["reduce", "231/112/113"]);
    assert!(o.status.success());
    let reduced = o.stdout.clone();

    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(&reduced).unwrap();
    let path = f.path().to_str().unwrap();
    let again = cantab(&["reduce", path]);
    assert_eq!(again.stdout, reduced);

    let mut child = Command::new(env!("CARGO_BIN_EXE_cantab"))
        .args(["reduce", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(&reduced).unwrap();
    let piped = child.wait_with_output().unwrap();
    assert_eq!(piped.stdout, reduced);
}

#[test]
fn classify_reports_cardinality() {
    let v = json(&["classify", "111/122/133"]);
    assert_eq!(v["results"]["cardinality"], "324");
    let o = cantab(&["classify", "11/22"]);
    assert!(stdout(&o).contains("cardinality: 4"));
}

#[test]
fn permanent_listing_and_membership() {
    let o = cantab(&["permanent", "12/21"]);
    assert_eq!(stdout(&o), "11\n22\n");
    let o = cantab(&["permanent", "12/21", "--word", "12"]);
    assert_eq!(stdout(&o), "12: not in permanent\n");
}

#[test]
fn bicantorian_commands() {
    let v = json(&["bicensus", "3", "3"]);
    assert_eq!(v["results"]["total_bicantorian"], "2202");
    let v = json(&["bclasses", "2", "4"]);
    assert_eq!(v["results"]["count"], 3);
}

#[test]
fn hypergraph_summary() {
    let v = json(&["hypergraph", "111/112/223"]);
    assert_eq!(v["results"]["n"], 3);
    let o = cantab(&["hypergraph", "11/12"]);
    assert!(stdout(&o).contains("intersecting: yes"));
}

#[test]
fn verify_quick_passes() {
    let o = cantab(&["verify"]);
    assert!(o.status.success());
    assert!(stdout(&o).ends_with("all checks passed\n"));
}

#[test]
fn exit_codes() {
    let o = cantab(&["check", "missing-file.txt"]);
    assert_eq!(o.status.code(), Some(2));
    let o = cantab(&["check", "12/3"]);
    assert_eq!(o.status.code(), Some(2));
    let o = cantab(&["census", "9", "2"]);
    assert_eq!(o.status.code(), Some(3));
    let o = cantab(&["--max-orbit", "10", "bclasses", "3", "3"]);
    assert_eq!(o.status.code(), Some(3), "{}", String::from_utf8_lossy(&o.stderr));
    let o = cantab(&["--time-budget", "1", "census", "6", "3"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("so far"));
}
