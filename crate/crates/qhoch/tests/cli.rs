//! End-to-end runs of the `qhoch` binary.

use std::path::Path;
use std::process::{Command, Output};

use qhoch::formats::SimplicialFile;
use qhoch_core::simplicial::SimplicialSet;
use serde_json::Value;

fn qhoch(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qhoch")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

fn write(dir: &Path, name: &str, value: &impl serde::Serialize) -> String {
    let path = dir.join(name);
    std::fs::write(&path, serde_json::to_string(value).unwrap()).unwrap();
    path.display().to_string()
}

#[test]
fn homology_of_dual_numbers_at_minus_one() {
    let out = qhoch(&["homology", "--N", "2", "--space", "circle", "--algebra", "builtin:dual", "--T", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let dims: Vec<u64> = v["cells"].as_array().unwrap().iter().filter(|c| c["valid"] == true).map(|c| c["dim"].as_u64().unwrap()).collect();
    // HH_n(k[ε]) over Q: 2, then 1 in every positive degree
    assert_eq!(dims, vec![2, 1, 1, 1, 1, 1]);
    assert_eq!(v["levels"], serde_json::json!([2, 4, 8, 16, 32, 64, 128]));
}

#[test]
fn point_csv_table() {
    let out = qhoch(&["homology", "--N", "3", "--space", "point", "--algebra", "builtin:field", "--T", "4", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,i,dim,valid"));
    // b_n = [n+1]_q vanishes only at n = 2 below T; b_0 maps to zero
    let rows: Vec<&str> = lines.collect();
    for row in ["0,1,1,true", "1,1,0,true", "2,1,0,true", "1,2,1,true", "2,2,0,true", "3,2,0,true", "3,1,,false"] {
        assert!(rows.contains(&row), "{row}");
    }
}

#[test]
fn missing_file_is_a_validation_error() {
    let out = qhoch(&["homology", "--N", "2", "--T", "2", "--algebra", "file:/nonexistent/alg.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"]["code"], "io_error");
}

#[test]
fn invalid_q_exponent() {
    let out = qhoch(&["homology", "--N", "4", "--q-exp", "2", "--T", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"]["code"], "not_primitive_root");
}

#[test]
fn dimension_guard_exit_code() {
    let out = qhoch(&["homology", "--N", "2", "--T", "12", "--algebra", "builtin:truncpoly:3"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json(&out)["error"]["code"], "dimension_guard");
}

#[test]
fn default_bank_verifies() {
    for n in ["2", "3"] {
        for alg in ["builtin:dual", "builtin:truncpoly:3"] {
            let out = qhoch(&["verify", "--N", n, "--T", "4", "--algebra", alg]);
            assert_eq!(out.status.code(), Some(0), "N = {n}, {alg}");
            assert_eq!(json(&out)["passed"], true);
        }
    }
}

#[test]
fn corrupted_simplicial_file_fails_verification() {
    let dir = tempfile::tempdir().unwrap();
    let mut file = SimplicialFile::from_simplicial(&SimplicialSet::circle(4));
    file.faces.get_mut("2").unwrap().swap(0, 1);
    let path = format!("file:{}", write(dir.path(), "y.json", &file));
    // loading for homology validates the identities
    let out = qhoch(&["homology", "--N", "2", "--T", "4", "--space", &path]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"]["code"], "simplicial_identity");
    let out = qhoch(&["verify", "--N", "2", "--T", "4", "--space", &path]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    let failed: Vec<&str> =
        v["checks"].as_array().unwrap().iter().filter(|c| c["status"] == "fail").map(|c| c["name"].as_str().unwrap()).collect();
    assert!(failed.contains(&"simplicial_identities"));
    let nil = v["checks"].as_array().unwrap().iter().find(|c| c["name"] == "nilpotency(N = 2)").unwrap();
    assert_eq!(nil["status"], "fail");
    assert!(nil["witness"].as_str().unwrap().contains("window"));
}

#[test]
fn broken_hasse_schmidt_file_is_named() {
    let dir = tempfile::tempdir().unwrap();
    // D_1 = x d/dx with D_2 = 0 fails at order 2: D_2(x·x) must be D_1(x)·D_1(x) = x^2
    let higher = serde_json::json!({
        "order": 2,
        "maps": [
            [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
            [["0", "0", "0"], ["0", "1", "0"], ["0", "0", "2"]],
            [["0", "0", "0"], ["0", "0", "0"], ["0", "0", "0"]]
        ]
    });
    let path = write(dir.path(), "hs.json", &higher);
    let out = qhoch(&["verify", "--N", "2", "--T", "3", "--algebra", "builtin:truncpoly:3", "--higher", &path]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    let check = v["checks"].as_array().unwrap().iter().find(|c| c["name"] == format!("hasse_schmidt[{path}]")).unwrap();
    assert_eq!(check["status"], "fail");
    assert!(check["witness"].as_str().unwrap().starts_with("hasse_schmidt"));
}

#[test]
fn lie_euler_on_dual_numbers() {
    let out = qhoch(&["lie", "--N", "2", "--T", "4", "--algebra", "builtin:dual"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let cells = v["operators"][0]["cells"].as_array().unwrap();
    // on HH_0 = k[ε] the induced map is E itself
    assert_eq!(cells[0]["matrix"]["entries"], serde_json::json!([["0", "0"], ["0", "1"]]));
    assert_eq!(cells.len(), 4);
}

#[test]
fn higher_order_zero_is_identity() {
    let out = qhoch(&["lie", "--N", "3", "--T", "3", "--algebra", "builtin:truncpoly:3", "--k", "0"]);
    assert_eq!(out.status.code(), Some(0));
    for op in json(&out)["operators"].as_array().unwrap() {
        for cell in op["cells"].as_array().unwrap() {
            let entries = cell["matrix"]["entries"].as_array().unwrap();
            for (r, row) in entries.iter().enumerate() {
                for (c, x) in row.as_array().unwrap().iter().enumerate() {
                    assert_eq!(x, if r == c { "1" } else { "0" });
                }
            }
        }
    }
}

#[test]
fn bivariant_zero_derivation() {
    let dir = tempfile::tempdir().unwrap();
    let zero = serde_json::json!({ "matrix": [["0", "0"], ["0", "0"]] });
    let path = write(dir.path(), "d.json", &zero);
    let out = qhoch(&["bivariant", "--N", "2", "--T", "3", "--derivation", &path, "--n-min", "-1", "--n-max", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!(v["cells"].as_array().unwrap().iter().all(|c| c["approximate"] == true));
    let induced = v["induced"][0]["cells"].as_array().unwrap();
    assert!(!induced.is_empty());
    for cell in induced {
        for row in cell["matrix"]["entries"].as_array().unwrap() {
            assert!(row.as_array().unwrap().iter().all(|x| x == "0"));
        }
    }
}

#[test]
fn output_file_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let out = qhoch(&["lie", "--N", "3", "--T", "3", "--algebra", "builtin:truncpoly:3", "--out", p.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        assert!(out.stdout.is_empty());
    }
    assert_eq!(std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
}
