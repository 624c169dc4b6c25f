use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn hochbv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hochbv")).args(args).env_remove("HOCHBV_MAX_LENGTH").output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stderr)))
}

#[test]
fn validate_fixture_and_broken() {
    let o = hochbv(&["validate", "x3d2"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout_json(&o)["passed"], true);
    let o = hochbv(&["validate", "broken_nonsymmetric"]);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout_json(&o)["passed"], false);
}

#[test]
fn homology_of_ground_field() {
    let o = hochbv(&["homology", "k", "--max-length", "4"]);
    assert_eq!(code(&o), 0);
    let v = stdout_json(&o);
    assert_eq!(v["label"], "exact");
    let nonzero: Vec<&Value> = v["entries"].as_array().unwrap().iter().filter(|e| e["dimension"] != 0).collect();
    assert_eq!(nonzero.len(), 1);
    assert_eq!(nonzero[0]["degree"], 0);
    assert_eq!(nonzero[0]["length"], 0);
    assert_eq!(nonzero[0]["dimension"], 1);
}

#[test]
fn full_catalog_on_x3d2() {
    let o = hochbv(&["check", "x3d2", "--max-length", "3"]);
    let v = stdout_json(&o);
    let reports = v["reports"].as_array().unwrap();
    let statuses: Vec<(&str, &str)> =
        reports.iter().map(|r| (r["identity"].as_str().unwrap(), r["status"].as_str().unwrap())).collect();
    assert!(statuses.iter().all(|(_, s)| *s == "pass"), "{statuses:?}");
    assert_eq!(code(&o), 0);
}

#[test]
fn exit_codes() {
    let o = hochbv(&["check", "broken_nonsymmetric", "--identities", "I2", "--max-length", "2"]);
    assert_eq!(code(&o), 1);
    let r = &stdout_json(&o)["reports"][0];
    assert_eq!(r["status"], "fail");
    assert!(r["counterexample"]["input"].is_string());

    let o = hochbv(&["check", "x3d2", "--identities", "R2", "--max-length", "2"]);
    assert_eq!(code(&o), 3);

    for args in [
        &["check", "trivext", "--identities", "R1"][..],
        &["check", "x3d2", "--identities", "I11"],
        &["homology", "x3d2", "--max-length", "7"],
        &["homology", "x3d2", "--field", "Fp:4"],
        &["homology", "no_such_algebra"],
        &["frobnicate"],
    ] {
        let o = hochbv(args);
        assert_eq!(code(&o), 2, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn length_cap_override() {
    let o = Command::new(env!("CARGO_BIN_EXE_hochbv"))
        .args(["homology", "k", "--max-length", "8"])
        .env("HOCHBV_MAX_LENGTH", "8")
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
}

#[test]
fn parse_errors_name_the_location() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.json");
    std::fs::write(&p, "{\n  \"m\": 2,\n  \"basis\": [}\n").unwrap();
    let o = hochbv(&["validate", p.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn prime_field_and_small_prime_warning() {
    let o = hochbv(&["homology", "x2d1", "--field", "Fp:2", "--max-length", "3"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout_json(&o)["field"], "Fp:2");
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
    let o = hochbv(&["homology", "x2d1", "--field", "Fp:65521", "--max-length", "3"]);
    assert!(!String::from_utf8_lossy(&o.stderr).contains("warning"));
}

#[test]
fn derived_coproduct_validates() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["x3d2", "ext"] {
        let out = dir.path().join(name);
        let o = hochbv(&["derive-coproduct", name, "--out", out.to_str().unwrap()]);
        assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
        let derived = out.join("derived.json");
        let o = hochbv(&["validate", derived.to_str().unwrap(), "--level", "symmetric_open"]);
        assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
    }
}

#[test]
fn export_writes_coordinate_files() {
    let dir = tempfile::tempdir().unwrap();
    let o = hochbv(&["export", "x2d1", "--max-length", "2", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let basis = std::fs::read_to_string(dir.path().join("basis.txt")).unwrap();
    // 2 · (1 + 1 + 1 + 1) words of length ≤ 3
    assert_eq!(basis.lines().count(), 8);
    for op in ["D", "B"] {
        let text = std::fs::read_to_string(dir.path().join(format!("{op}.txt"))).unwrap();
        assert!(text.starts_with(&format!("# {op} rows 8 cols 6 field Q")));
        for line in text.lines().skip(1) {
            assert_eq!(line.split(' ').count(), 3);
        }
    }
}

fn read_all(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut v: Vec<_> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let e = e.unwrap();
            (e.file_name().to_string_lossy().into_owned(), std::fs::read(e.path()).unwrap())
        })
        .collect();
    v.sort();
    v
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let dirs = [tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap()];
    for d in &dirs {
        let out = d.path().to_str().unwrap();
        for args in [
            &["check", "ext", "--max-length", "3", "--out", out][..],
            &["homology", "dga", "--max-length", "3", "--out", out],
            &["validate", "s1s2", "--out", out],
        ] {
            let o = hochbv(args);
            assert_eq!(code(&o), 0, "{args:?}");
        }
    }
    assert_eq!(read_all(dirs[0].path()), read_all(dirs[1].path()));
}
