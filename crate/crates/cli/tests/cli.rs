use std::process::{Command, Output};

use equilib::disk::{self, RenderOptions};
use equilib::rep::{self, DistElem};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_equilib"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o)
        .lines()
        .map(|l| serde_json::from_str(l).expect("each line is JSON"))
        .collect()
}

#[test]
fn descent_of_1_2_0() {
    let o = run(&["descent", "1", "2", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["word"], "ty r2");
    assert_eq!(v["image_of_x"], serde_json::json!([1, 2, 0]));
    assert_eq!(v["verified"], true);
    assert_eq!(v["class"], "real");
    assert_eq!(v["norm"], 2);
    assert_eq!(v["height"], 3);
    let tokens: Vec<&str> = v["replay"].as_array().unwrap().iter().map(|s| s["token"].as_str().unwrap()).collect();
    assert_eq!(tokens, ["r2", "ty"]);
}

#[test]
fn descent_accepts_negative_coordinates() {
    let o = run(&["descent", "-1", "-2", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["image_of_x"], serde_json::json!([-1, -2, 0]));
    assert_eq!(v["verified"], true);
}

#[test]
fn descent_rejects_non_roots() {
    let o = run(&["descent", "1", "1", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("norm"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    assert_eq!(run(&["roots"]).status.code(), Some(2));
    assert_eq!(run(&["roots", "--height", "2", "--frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["rep", "--dim", "2"]).status.code(), Some(2));
    assert_eq!(run(&["rep", "--dim", "2", "--elem", "w"]).status.code(), Some(2));
    assert_eq!(run(&["disk", "--labels", "loud"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--module", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn pythagorean_max_c_3() {
    let o = run(&["pythagorean", "--max-c", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let lines = json_lines(&o);
    let outs: Vec<&Value> = lines.iter().map(|l| &l["pythagorean"]).collect();
    assert!(outs.contains(&&serde_json::json!([12, 5, 13])));
    assert!(outs.contains(&&serde_json::json!([4, 3, 5])));
    for l in &lines {
        let p: Vec<i64> = l["pythagorean"].as_array().unwrap().iter().map(|v| v.as_i64().unwrap()).collect();
        let h = l["hypotenuse"].as_u64().unwrap() as usize;
        let legs: i64 = (0..3).filter(|&i| i != h).map(|i| p[i] * p[i]).sum();
        assert_eq!(legs, p[h] * p[h]);
        // element = -1/2 (a^2, b^2, c^2), serialized as exact strings
        let abc: Vec<i64> = l["abc"].as_array().unwrap().iter().map(|v| v.as_i64().unwrap()).collect();
        let want = |k: i64| if k == 0 { "0".to_string() } else if k % 2 == 0 { format!("-{}", k / 2) } else { format!("-{k}/2") };
        assert_eq!(l["element"]["alpha"], want(abc[0] * abc[0]));
        assert_eq!(l["element"]["gamma"], want(abc[2] * abc[2]));
    }
}

#[test]
fn roots_by_height_are_sorted_and_real() {
    let o = run(&["roots", "--height", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let lines = json_lines(&o);
    let vecs: Vec<Vec<i64>> = lines
        .iter()
        .map(|l| l["vector"].as_array().unwrap().iter().map(|v| v.as_i64().unwrap()).collect())
        .collect();
    let mut sorted = vecs.clone();
    sorted.sort();
    assert_eq!(vecs, sorted);
    for (l, v) in lines.iter().zip(&vecs) {
        let (a, b, c) = (v[0], v[1], v[2]);
        assert_eq!(a * a + b * b + c * c - 2 * (a * b + b * c + c * a), 1);
        assert!((a + b + c).abs() <= 7);
        assert_eq!(l["norm"], 2);
        assert!(l["word"].is_string());
    }
    assert_eq!(stdout(&o), stdout(&run(&["roots", "--height", "7"])));
}

#[test]
fn roots_in_box_match_scan() {
    let o = run(&["roots", "--box", "4"]);
    let count = json_lines(&o).len();
    let mut want = 0;
    for a in -4i64..=4 {
        for b in -4i64..=4 {
            for c in -4i64..=4 {
                if a * a + b * b + c * c - 2 * (a * b + b * c + c * a) == 1 {
                    want += 1;
                }
            }
        }
    }
    assert_eq!(count, want);
}

#[test]
fn isotropic_box() {
    let o = run(&["isotropic", "--box", "9"]);
    assert_eq!(o.status.code(), Some(0));
    for l in json_lines(&o) {
        let k = l["k"].as_i64().unwrap();
        let m = l["m"].as_i64().unwrap();
        let n = l["n"].as_i64().unwrap();
        let v: Vec<i64> = l["vector"].as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).collect();
        assert_eq!(v, [-k * (m - n) * (m - n), -k * m * m, -k * n * n]);
        assert!(v.iter().all(|c| c.abs() <= 9));
    }
}

#[test]
fn rep_matrix_matches_library() {
    let o = run(&["rep", "--dim", "3", "--elem", "y*"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v, rep::action(3, DistElem::YStar).to_json());
    let o = run(&["rep", "--dim", "3", "--exp", "z*"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v, rep::exp_action(3, DistElem::ZStar).unwrap().to_json());
    let o = run(&["rep", "--dim", "4", "--map", "tx"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 5);
    assert_eq!(rows[0][4], "1");
    assert_eq!(run(&["rep", "--dim", "2", "--exp", "h"]).status.code(), Some(2));
}

#[test]
fn rep_check_passes() {
    let o = run(&["rep", "--dim", "4", "--check"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let records = v.as_array().unwrap();
    assert!(!records.is_empty());
    assert!(records.iter().all(|r| r["status"] == "pass"));
}

#[test]
fn disk_writes_the_library_svg() {
    let path = std::env::temp_dir().join(format!("equilib-cli-disk-{}.svg", std::process::id()));
    let o = run(&["disk", "--depth", "2", "--size", "800", "--labels", "all", "-o", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(written, disk::render_svg(&disk::tessellate(2), &RenderOptions::default()));
    let summary: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(summary["chambers"], 10);

    let piped = run(&["disk", "--depth", "1", "--labels", "none"]);
    assert!(stdout(&piped).starts_with("<?xml"));
    assert!(!stdout(&piped).contains("<text"));
}

#[test]
fn verify_single_modules() {
    for m in ["equitable_core", "psl2_group", "isometry_weyl", "isotropic_pythagoras"] {
        let o = run(&["verify", "--module", m, "--full"]);
        assert_eq!(o.status.code(), Some(0), "{m}");
        let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["all_passed"], true);
        assert_eq!(v["modules"][0]["module"], m);
        assert_eq!(v["modules"][0]["failed"], 0);
        let records = v["modules"][0]["records"].as_array().unwrap();
        assert_eq!(records.len() as u64, v["modules"][0]["checks"].as_u64().unwrap());
    }
}

#[test]
fn verify_all_passes() {
    let o = run(&["verify", "--all"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["all_passed"], true);
    assert_eq!(v["modules"].as_array().unwrap().len(), equilib::verify::MODULES.len());
}
