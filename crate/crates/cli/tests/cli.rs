use std::path::PathBuf;
use std::process::{Command, Output};

fn torvar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_torvar")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("torvar-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn analyze_reports_degrees() {
    let o = torvar(&["analyze", "5_2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v = json(&o);
    assert_eq!(v["divisor"]["degree"], 10);
    assert_eq!(v["genus_y"], 6);
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);

    let o = torvar(&["analyze", "trefoil"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("degree -2 (2g(Y) − 2 = -2)"));
}

#[test]
fn missing_record_exits_two() {
    let o = torvar(&["analyze", "nosuchknot"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("record not found"));
}

#[test]
fn puiseux_leading_terms() {
    let o = torvar(&["puiseux", "5_2", "ideal-1", "--order", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("x = t^-1 + O(t^6)"), "{out}");
    assert!(out.contains("y = 1 + t^2 + 2*t^4 + O(t^6)"), "{out}");
}

#[test]
fn puiseux_prints_number_field_vectors_once() {
    let o = torvar(&["puiseux", "6_1", "ideal-1", "--order", "3", "--format", "json"]);
    let v = json(&o);
    assert_eq!(v["minpoly"], "g^2 - 3*g + 1");
    assert_eq!(v["orbit"], 2);
    let y = v["y"]["terms"].as_array().unwrap();
    assert_eq!(y[0], serde_json::json!([0, ["2", "0"]]));
    assert_eq!(y[1], serde_json::json!([2, ["0", "1"]]));
    let text = stdout(&torvar(&["puiseux", "6_1", "ideal-1", "--order", "3"]));
    assert_eq!(text.matches("g^2 - 3*g + 1").count(), 1, "{text}");
}

#[test]
fn puiseux_rejects_bad_input() {
    let o = torvar(&["puiseux", "5_2", "ideal-1", "--order", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("order must be ≥ 1"));
    let o = torvar(&["puiseux", "5_2", "ideal-9"]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("available labels") && err.contains("ideal-3") && err.contains("Y:ideal-1a"), "{err}");
}

#[test]
fn torsion_divisor_is_deterministic() {
    let args = ["torsion-divisor", "figure-eight", "--format", "json", "--seed", "4", "--samples", "3"];
    let a = torvar(&args);
    let b = torvar(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["cayley"].as_array().unwrap().len(), 3);
    assert!(v["cayley"].as_array().unwrap().iter().all(|e| e["agrees_up_to_sign"] == true));
    let c = torvar(&["torsion-divisor", "figure-eight", "--format", "json", "--seed", "5", "--samples", "3"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn out_writes_a_file() {
    let path = scratch("out").join("alexander.json");
    let o = torvar(&["alexander", "figure-eight", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["alexander"], "t^2 - 3*t + 1");
    assert_eq!(v["fox_identity"], true);
    assert_eq!(v["at_one"], "-1");
}

#[test]
fn check_theorems_lists_both_theorems() {
    let o = torvar(&["check-theorems", "figure-eight"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("reducible-1") && out.contains("Holds, equality"), "{out}");
}

#[test]
fn goldens_filter_and_corrupted_database() {
    let o = torvar(&["goldens", "--only", "genus"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.contains("criterion 2 (genera and covers): PASS [16 rows]"));
    assert!(!out.contains("criterion 1"));

    let o = torvar(&["goldens", "--only", "nosuchgroup"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("available groups"));

    // Flip one coefficient of the pinned 5.2 polynomial.
    let dir = scratch("corrupt");
    let bundled = knot_model::Database::bundled();
    for name in bundled.names() {
        std::fs::copy(bundled.dir().join(format!("{name}.json")), dir.join(format!("{name}.json"))).unwrap();
    }
    let mut rec: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.join("5_2.json")).unwrap()).unwrap();
    rec["P"][0][2] = serde_json::json!(7);
    std::fs::write(dir.join("5_2.json"), rec.to_string()).unwrap();
    let o = torvar(&["goldens", "--only", "polynomials", "--data", dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("FAIL 5_2: database P against Tr ρ(r) = 2"), "{out}");
    assert!(out.contains("pinned polynomial mismatch"), "{out}");
}

#[test]
fn full_goldens_fail_only_on_the_known_row() {
    let o = torvar(&["goldens", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    let failing: Vec<&str> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["pass"] == false)
        .map(|r| r["name"].as_str().unwrap())
        .collect();
    assert_eq!(failing, vec!["5.2 ideal-2: y ∼ 2 + 3t"]);
}
