use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn twochar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twochar"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

#[test]
fn example_command_exits_zero() {
    let out = twochar(&["paper-example"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("non-equivalent: true"));
    assert!(text.contains("tables equal: true"));
    assert!(text.contains("chi(1,1)=8"));
}

#[test]
fn example_command_with_collision_search() {
    let out = twochar(&["--format", "json", "paper-example", "--collision-search", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let j = json_of(&out);
    assert_eq!(j["collision_search"]["contains_example"], true);
}

#[test]
fn written_files_match_data() {
    let dir = tempfile::tempdir().unwrap();
    let out = twochar(&["paper-example", "--write", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    for name in ["rho.json", "rho_prime.json"] {
        let fresh: Value = serde_json::from_slice(&std::fs::read(dir.path().join(name)).unwrap()).unwrap();
        let stored: Value = serde_json::from_slice(&std::fs::read(data(name)).unwrap()).unwrap();
        assert_eq!(fresh, stored, "{name}");
    }
}

#[test]
fn data_pair_is_inequivalent_with_equal_tables() {
    let rho = data("rho.json");
    let rho_p = data("rho_prime.json");
    let out = twochar(&["--format", "json", "equiv", rho.to_str().unwrap(), rho_p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["equivalent"], false);

    let a = twochar(&["--format", "json", "chartable", rho.to_str().unwrap()]);
    let b = twochar(&["--format", "json", "chartable", rho_p.to_str().unwrap()]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(json_of(&a), json_of(&b));
}

#[test]
fn equiv_with_itself_has_witness() {
    let rho = data("rho.json");
    let out = twochar(&["--format", "json", "equiv", rho.to_str().unwrap(), rho.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["equivalent"], true);
}

#[test]
fn klein_chartable_has_minus_one() {
    let out = twochar(&["--format", "json", "chartable", data("klein4_twisted.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let j = json_of(&out);
    let values: Vec<&Value> = j["classes"].as_array().unwrap().iter().map(|c| &c["value"]).collect();
    assert_eq!(values.len(), 16);
    assert_eq!(values.iter().filter(|v| v["int"] == -1).count(), 6);
}

#[test]
fn trivial_group_table() {
    let out = twochar(&["chartable", data("trivial1.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn non_cocycle_exit_code() {
    let out = twochar(&["chartable", data("klein4_bad.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8(out.stderr).unwrap().contains("not a cocycle"));
}

#[test]
fn validation_exit_codes() {
    assert_eq!(twochar(&["chartable", "/nonexistent/file.json"]).status.code(), Some(2));
    assert_eq!(twochar(&["group", "--named", "nosuchgroup:3"]).status.code(), Some(2));
    assert_eq!(twochar(&["bogus-command"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    assert_eq!(twochar(&["chartable", bad.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn resource_cap_exit_code() {
    let out = twochar(&["--cap", "100", "group", "--named", "symmetric:6"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn h2_klein_and_s3() {
    let out = twochar(&["--format", "json", "h2", "--named", "klein4", "--point"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["divisors"], serde_json::json!([2]));
    let out = twochar(&["--format", "json", "h2", "--named", "symmetric:3", "--point"]);
    assert_eq!(json_of(&out)["divisors"], serde_json::json!([]));
}

#[test]
fn shapiro_agrees() {
    let out = twochar(&["--format", "json", "shapiro", "--named", "dihedral:4", "--subgroup", "(02)(13);(13)"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn induce_then_decompose() {
    let dir = tempfile::tempdir().unwrap();
    let point = dir.path().join("point.json");
    std::fs::write(&point, r#"{"gset":{"size":1}}"#).unwrap();
    let out = twochar(&["induce", "--named", "symmetric:3", "--subgroup", "(01)", "--rep", point.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let induced = dir.path().join("induced.json");
    std::fs::write(&induced, &out.stdout).unwrap();
    let out = twochar(&["--format", "json", "decompose", induced.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let factors = json_of(&out)["factors"].as_array().unwrap().len();
    assert_eq!(factors, 1);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = twochar(&["--format", "json", "--out", path.to_str().unwrap(), "group", "--named", "dihedral:4"]);
    assert_eq!(out.status.code(), Some(0));
    let j: Value = serde_json::from_slice(&std::fs::read(path).unwrap()).unwrap();
    assert_eq!(j["order"], 8);
}

#[test]
fn collision_none_for_c2() {
    let out = twochar(&["--format", "json", "collision", "--named", "cyclic:2", "--dim", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(json_of(&out)["pairs"].as_array().unwrap().is_empty());
}
