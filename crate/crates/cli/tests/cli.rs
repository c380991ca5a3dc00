use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;
use vtcycle_core::graph::{petersen, truncate};
use vtcycle_core::{read_graph, write_graph};

fn vtcycle(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vtcycle"))
        .current_dir(dir)
        .args(args)
        .env_remove("VTCYCLE_CAP_CYCLES")
        .env_remove("VTCYCLE_QUIET")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn write(dir: &Path, name: &str, text: &str) {
    std::fs::write(dir.join(name), text).unwrap();
}

#[test]
fn generate_and_round_trip() {
    let tmp = TempDir::new().unwrap();
    let d = tmp.path();
    assert_eq!(code(&vtcycle(d, &["generate", "petersen", "-o", "p.g"])), 0);
    let p = read_graph(&std::fs::read_to_string(d.join("p.g")).unwrap()).unwrap();
    assert_eq!(p, petersen());

    assert_eq!(code(&vtcycle(d, &["generate", "circulant", "8", "1,4", "-o", "c.g"])), 0);
    let c = read_graph(&std::fs::read_to_string(d.join("c.g")).unwrap()).unwrap();
    assert_eq!((c.n(), c.m(), c.regular_degree()), (8, 12, Some(3)));

    assert_eq!(code(&vtcycle(d, &["generate", "truncate", "p.g", "-o", "tp.g"])), 0);
    let text = std::fs::read_to_string(d.join("tp.g")).unwrap();
    let tp = read_graph(&text).unwrap();
    assert_eq!(tp, truncate(&petersen()).unwrap());
    assert_eq!(write_graph(&tp), text);

    assert_eq!(code(&vtcycle(d, &["generate", "truncate", "c.g", "-o", "tc.g"])), 0);
    assert_eq!(code(&vtcycle(d, &["generate", "truncate", "tc.g", "-o", "x.g"])), 0);
    assert_eq!(code(&vtcycle(d, &["generate", "cycle", "6", "-o", "c6.g"])), 0);
    let bad = vtcycle(d, &["generate", "truncate", "c6.g", "-o", "y.g"]);
    assert_eq!(code(&bad), 2);
    assert!(String::from_utf8_lossy(&bad.stderr).contains("not 3-regular"));
}

#[test]
fn cayley_generation_with_sidecar() {
    let tmp = TempDir::new().unwrap();
    let d = tmp.path();
    // S3 generated by two transpositions
    write(d, "s3.grp", "3 2\n1 0 2\n0 2 1\n");
    let o = vtcycle(d, &["generate", "cayley", "s3.grp", "-o", "cay.g", "--with-group"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let g = read_graph(&std::fs::read_to_string(d.join("cay.g")).unwrap()).unwrap();
    assert_eq!((g.n(), g.m()), (6, 6));
    let o = vtcycle(d, &["analyze", "cay.g", "--group", "cay.grp"]);
    assert_eq!(code(&o), 0);
    let r: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r["transitive"], true);
    assert_eq!(r["group_order"], 6);
}

const SCHEMA_KEYS: &[&str] = &[
    "n",
    "m",
    "transitive",
    "group_order",
    "connectivity",
    "circumference",
    "longest_cycle_count",
    "k_min_intersection",
    "k_degenerate",
    "hitting_set",
    "hitting_set_size",
    "bounds",
    "satisfied",
    "ratio_t_over_n",
    "lemma2_checks",
    "caps_hit",
];

#[test]
fn analyze_report_schema_and_exit_codes() {
    let tmp = TempDir::new().unwrap();
    let d = tmp.path();
    vtcycle(d, &["generate", "petersen", "-o", "p.g", "--with-group"]);
    let o = vtcycle(d, &["analyze", "p.g", "--group", "p.grp"]);
    assert_eq!(code(&o), 0);
    let r: Value = serde_json::from_slice(&o.stdout).unwrap();
    for key in SCHEMA_KEYS {
        assert!(r.get(key).is_some(), "missing key {key}");
    }
    for key in ["babai_sq3n", "sqrt_kn", "n_over_k2_plus_k"] {
        assert!(r["bounds"].get(key).is_some(), "missing bounds.{key}");
    }
    assert_eq!(r["circumference"], 9);
    assert_eq!(r["ratio_t_over_n"], "9/10");
    assert_eq!(r["group_order"], 120);
    assert!(r["satisfied"].as_object().unwrap().values().all(|v| v == "pass"));
    assert!(String::from_utf8_lossy(&o.stderr).contains("circumference t: 9"));

    let capped = vtcycle(d, &["analyze", "p.g", "--cap-cycles", "1"]);
    assert_eq!(code(&capped), 3);
    let r: Value = serde_json::from_slice(&capped.stdout).unwrap();
    assert!(!r["caps_hit"].as_array().unwrap().is_empty());
    assert_eq!(r["k_min_intersection"], Value::Null);

    write(d, "path4.g", "4 3\n0 1\n1 2\n2 3\n");
    let o = vtcycle(d, &["analyze", "path4.g"]);
    assert_eq!(code(&o), 0);
    let r: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r["transitive"], false);
    assert_eq!(r["satisfied"]["babai"], "not_applicable");
    assert_eq!(r["satisfied"]["two_connected"], "not_applicable");

    write(d, "disc.g", "4 2\n0 1\n2 3\n");
    assert_eq!(code(&vtcycle(d, &["analyze", "disc.g"])), 2);
    write(d, "broken.g", "3 2\n0 1\n");
    assert_eq!(code(&vtcycle(d, &["analyze", "broken.g"])), 2);
    assert_eq!(code(&vtcycle(d, &["analyze", "missing.g"])), 2);
    write(d, "z3.grp", "3 1\n1 2 0\n");
    assert_eq!(code(&vtcycle(d, &["analyze", "p.g", "--group", "z3.grp"])), 2);
}

#[test]
fn json_flag_and_env_overrides() {
    let tmp = TempDir::new().unwrap();
    let d = tmp.path();
    vtcycle(d, &["generate", "petersen", "-o", "p.g"]);
    let o = vtcycle(d, &["analyze", "p.g", "--json", "r.json"]);
    assert_eq!(code(&o), 0);
    let r: Value = serde_json::from_str(&std::fs::read_to_string(d.join("r.json")).unwrap()).unwrap();
    assert_eq!(r["circumference"], 9);
    assert!(String::from_utf8_lossy(&o.stdout).contains("t/n: 9/10"));

    let o = Command::new(env!("CARGO_BIN_EXE_vtcycle"))
        .current_dir(d)
        .args(["analyze", "p.g"])
        .env("VTCYCLE_CAP_CYCLES", "1")
        .env("VTCYCLE_QUIET", "true")
        .output()
        .unwrap();
    assert_eq!(code(&o), 3);
    assert!(o.stderr.is_empty());

    assert_eq!(code(&vtcycle(d, &["analyze", "p.g", "--cap-cycles", "0"])), 2);
    assert_eq!(code(&vtcycle(d, &["analyze", "p.g", "--time-limit", "-1"])), 2);
}

#[test]
fn verify_counting_inequality() {
    let tmp = TempDir::new().unwrap();
    let d = tmp.path();
    write(d, "c4.g", "4 4\n0 1\n1 2\n2 3\n0 3\n");
    write(d, "z4.grp", "4 1\n1 2 3 0\n");
    let o = vtcycle(d, &["verify-lemma2", "c4.g", "z4.grp", "0,1,2", "0,1,2"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8_lossy(&o.stdout);
    assert!(text.contains("k_min = 2"));
    assert!(text.contains("|B||C| = 9"));
    assert!(text.contains("k n = 8"));
    assert!(text.contains("|S| = 9, |B||C||G_y| = 9"));
    assert!(text.trim_end().ends_with("pass"));

    let o = vtcycle(d, &["verify-lemma2", "c4.g", "z4.grp", "0,1,2,3", "0,1,2,3", "--json", "v.json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(d.join("v.json")).unwrap()).unwrap();
    assert_eq!((v["product_b_c"].as_u64(), v["k_times_n"].as_u64()), (Some(16), Some(16)));

    write(d, "bad.grp", "4 1\n1 1 3 0\n");
    assert_eq!(code(&vtcycle(d, &["verify-lemma2", "c4.g", "bad.grp", "0", "0"])), 2);
    write(d, "swap.grp", "4 1\n1 0 2 3\n");
    assert_eq!(code(&vtcycle(d, &["verify-lemma2", "c4.g", "swap.grp", "0", "0"])), 2);
    assert_eq!(code(&vtcycle(d, &["verify-lemma2", "c4.g", "z4.grp", "0,x", "0"])), 2);
    assert_eq!(code(&vtcycle(d, &["verify-lemma2", "c4.g", "z4.grp", "0", "0", "--cap-group", "2"])), 3);
}

#[test]
fn oracles() {
    let tmp = TempDir::new().unwrap();
    let d = tmp.path();
    vtcycle(d, &["generate", "petersen", "-o", "p.g"]);
    let run = |kind: &str, file: &str| {
        let o = vtcycle(d, &["oracle", kind, file]);
        (code(&o), String::from_utf8_lossy(&o.stdout).trim().to_string())
    };
    assert_eq!(run("circumference", "p.g"), (0, "9".into()));
    assert_eq!(run("girth", "p.g"), (0, "5".into()));
    assert_eq!(run("connectivity", "p.g"), (0, "3".into()));
    vtcycle(d, &["generate", "truncate", "p.g", "-o", "tp.g"]);
    assert_eq!(run("circumference", "tp.g").0, 2);
    assert_eq!(run("connectivity", "tp.g").0, 2);
    write(d, "tree.g", "3 2\n0 1\n1 2\n");
    assert_eq!(run("girth", "tree.g"), (0, "none".into()));
}

#[test]
fn batch_runs() {
    let tmp = TempDir::new().unwrap();
    let d = tmp.path();
    std::fs::create_dir(d.join("empty")).unwrap();
    let o = vtcycle(d, &["batch", "empty"]);
    assert_eq!(code(&o), 0);
    let r: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(r["graphs"].as_array().unwrap().is_empty());

    std::fs::create_dir(d.join("cycles")).unwrap();
    for n in 3..=12 {
        let name = format!("cycles/c{n:02}.g");
        assert_eq!(code(&vtcycle(d, &["generate", "cycle", &n.to_string(), "-o", &name])), 0);
    }
    let o = vtcycle(d, &["batch", "cycles", "--workers", "3"]);
    assert_eq!(code(&o), 0);
    let r: Value = serde_json::from_slice(&o.stdout).unwrap();
    let graphs = r["graphs"].as_array().unwrap();
    assert_eq!(graphs.len(), 10);
    assert_eq!(graphs[0]["file"], "c03.g");
    assert!(graphs.iter().all(|g| g["report"]["ratio_t_over_n"] == "1/1"));

    std::fs::create_dir(d.join("pair")).unwrap();
    vtcycle(d, &["generate", "petersen", "-o", "pair/petersen.g", "--with-group"]);
    vtcycle(d, &["generate", "truncate", "pair/petersen.g", "-o", "pair/tp.g", "--with-group"]);
    write(d, "pair/zz_broken.g", "2 5\n");
    let o = vtcycle(d, &["batch", "pair"]);
    assert_eq!(code(&o), 2);
    let r: Value = serde_json::from_slice(&o.stdout).unwrap();
    let graphs = r["graphs"].as_array().unwrap();
    assert_eq!(graphs[0]["report"]["ratio_t_over_n"], "9/10");
    assert_eq!(graphs[1]["report"]["ratio_t_over_n"], "9/10");
    assert_eq!(graphs[1]["group_file"], "tp.grp");
    assert_eq!(graphs[1]["report"]["group_order"], 120);
    assert!(graphs[2]["error"].is_string());
    assert_eq!(r["min_ratio_t_over_n"]["ratio"], "9/10");
    assert_eq!(r["min_ratio_t_over_n"]["file"], "petersen.g");
    let table = String::from_utf8_lossy(&o.stderr);
    assert!(table.contains("minimum t/n: 9/10 (petersen.g)"));
}
