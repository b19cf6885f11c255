use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn locfin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_locfin")).args(args).env_remove("LOCFIN_TOL").output().expect("run locfin")
}

fn json(args: &[&str]) -> Value {
    let out = locfin(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json output")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn generate_then_embed_has_one_accumulation_point() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("ladder.json");
    let f = file.to_str().unwrap();
    assert!(locfin(&["generate", "ladder", "--depth", "3", "--out", f]).status.success());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(doc["format_version"], 1);
    assert_eq!(doc["levels"].as_array().unwrap().len(), 3);

    let a = json(&["embed", f, "--seed", "7", "--plan"]);
    assert_eq!(a["acc"], 1);
    assert!(a["plan"]["blocks"].is_array());
    assert_eq!(a, json(&["embed", f, "--seed", "7", "--plan"]));
}

#[test]
fn obstructed_generator_reports_a_witness() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("k.json");
    let f = f.to_str().unwrap();
    assert!(locfin(&["generate", "K2xT3", "--depth", "2", "--out", f]).status.success());
    let r = json(&["embeddable", f, "--witness"]);
    assert_eq!(r["embeddable"], false);
    assert_eq!(r["first_obstructed"], 0);
    assert!(!r["listing"].as_array().unwrap().is_empty());
    let out = locfin(&["embed", f]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("obstructed"));
}

#[test]
fn analyze_reads_all_graph_encodings() {
    let dir = tempfile::tempdir().unwrap();
    let g6 = write(dir.path(), "k5.g6", "D~{\n");
    let r = json(&["analyze", &g6, "--planarity", "--witness"]);
    assert_eq!(r["planar"], false);
    assert_eq!(r["witness"]["pattern"], "K5");

    let el = write(dir.path(), "c.txt", "# square with a chord\n1 2\n2 3\n3 4\n4 1\n1 3\n");
    let r = json(&["analyze", &el]);
    assert_eq!(r["planar"], true);
    assert_eq!(r["tutte"].as_array().unwrap().len(), 1);

    let js = write(dir.path(), "p.json", r#"{"vertices":[0,1,2],"edges":[[0,1],[1,2]]}"#);
    let r = json(&["analyze", &js, "--decompose"]);
    assert_eq!(r["block_cut_tree"]["cut_vertices"], serde_json::json!([1]));
    assert!(r.get("planar").is_none());
}

#[test]
fn pack_writes_coordinates_and_svg() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("z.json");
    let f = f.to_str().unwrap();
    assert!(locfin(&["generate", "path_Z", "--depth", "2", "--out", f]).status.success());
    let coords = dir.path().join("coords.json");
    let svg = dir.path().join("d.svg");
    let r = json(&["pack", f, "--geometry", "hyperbolic", "--coords", coords.to_str().unwrap(), "--allocations"]);
    assert!(r["angle_residual"].as_f64().unwrap() < 1e-10);
    let a = &r["allocations"];
    let area = a["covered_area"].as_f64().unwrap();
    assert!((a["barycentric_total"].as_f64().unwrap() - area).abs() < 1e-9);
    let c: Value = serde_json::from_str(&std::fs::read_to_string(&coords).unwrap()).unwrap();
    assert_eq!(c["model"], "poincare");
    assert_eq!(c["geometry"], "hyperbolic");
    assert!(c["vertices"][0]["radius"].as_f64().unwrap() > 0.0);

    let out = locfin(&["pack", f, "--format", "svg", "--out", svg.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(std::fs::read_to_string(&svg).unwrap().starts_with("<svg"));
}

#[test]
fn tolerance_comes_from_the_environment() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("z.json");
    let f = f.to_str().unwrap();
    assert!(locfin(&["generate", "path_Z", "--depth", "2", "--out", f]).status.success());
    let out = Command::new(env!("CARGO_BIN_EXE_locfin"))
        .args(["pack", f])
        .env("LOCFIN_TOL", "1e-3")
        .output()
        .unwrap();
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["tolerance"], 1e-3);
}

#[test]
fn triangulate_accepts_an_embed_output_as_rotation() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("t.json");
    let f = f.to_str().unwrap();
    assert!(locfin(&["generate", "tree_d", "--depth", "2", "--out", f]).status.success());
    let emb = dir.path().join("e.json");
    assert!(locfin(&["embed", f, "--seed", "1", "--out", emb.to_str().unwrap()]).status.success());
    let a = json(&["triangulate", f, "--rotation", emb.to_str().unwrap()]);
    let b = json(&["triangulate", f, "--seed", "1"]);
    assert_eq!(a, b);
    assert_eq!(a["marked"], 10);
    let g6 = locfin(&["triangulate", f, "--format", "graph6"]);
    assert!(g6.status.success());
}

#[test]
fn mtp_reports_every_payment() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "star.txt", "0 1\n0 2\n0 3\n");
    let r = json(&["mtp", &f, "--samples", "4000"]);
    let payments = r["payments"].as_array().unwrap();
    assert_eq!(payments.len(), 4);
    for p in payments {
        assert!(p["gap"].as_f64().unwrap() < 1e-12, "{p}");
    }
    assert!(r["involution"]["p_value"].as_f64().unwrap() > 0.01);
}

#[test]
fn bad_input_fails_cleanly() {
    assert!(!locfin(&["generate", "nope"]).status.success());
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "bad.json", r#"{"format_version":2,"edges":[]}"#);
    let out = locfin(&["analyze", &f]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("format_version"));
}
