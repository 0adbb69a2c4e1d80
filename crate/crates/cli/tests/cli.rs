use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use associahedron::ParkingFunction;
use serde_json::Value;

fn assoc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_assoc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("assoc-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn bundle(polytope: &str, n: &str) -> Value {
    let out = assoc(&["triangulate", "--polytope", polytope, "--n", n]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_str(&stdout(&out)).unwrap()
}

fn verify_value(name: &str, value: &Value) -> Output {
    let path = scratch(name);
    fs::write(&path, serde_json::to_string(value).unwrap()).unwrap();
    assoc(&["verify", "--check-file", path.to_str().unwrap()])
}

#[test]
fn trees_listing() {
    let out = assoc(&["trees", "--n", "2"]);
    assert_eq!(stdout(&out), "((..).)\t(1,2)\n(.(..))\t(2,1)\n");
    assert_eq!(stdout(&assoc(&["trees", "--n", "0"])), ".\t()\n");
    assert_eq!(
        stdout(&assoc(&["trees", "--n", "2", "--no-coords"])),
        "((..).)\n(.(..))\n"
    );
    assert_eq!(
        stdout(&assoc(&["trees", "--n", "4", "--count-only"])),
        "14\n"
    );
    let json: Value =
        serde_json::from_str(&stdout(&assoc(&["trees", "--n", "3", "--format", "json"]))).unwrap();
    assert_eq!(json.as_array().unwrap().len(), 5);
    assert_eq!(json[0]["tree"], "(((..).).)");
    assert_eq!(json[0]["coords"], serde_json::json!([1, 2, 3]));
}

#[test]
fn trees_usage_errors() {
    assert_eq!(code(&assoc(&["trees", "--n", "13"])), 2);
    assert_eq!(code(&assoc(&["trees", "--n", "21", "--no-coords"])), 2);
    assert_eq!(code(&assoc(&["trees"])), 2);
    assert_eq!(code(&assoc(&["trees", "--n", "x"])), 2);
}

#[test]
fn triangulate_associahedron_bundle() {
    let b = bundle("assoc", "3");
    assert_eq!(b["meta"]["kind"], "assoc");
    assert_eq!(b["meta"]["n"], 3);
    let simplices = b["simplices"].as_array().unwrap();
    assert_eq!(simplices.len(), 16);
    assert_eq!(b["vertices"].as_array().unwrap().len(), 14);
    for s in simplices {
        let label: ParkingFunction = serde_json::from_value(s["label"].clone()).unwrap();
        assert_eq!(label.len(), 3);
        assert_eq!(s["vertices"].as_array().unwrap().len(), 4);
    }
    assert_eq!(b["validation"]["sampling"]["pass"], true);
}

#[test]
fn triangulate_permutohedron_and_point() {
    let b = bundle("perm", "3");
    assert_eq!(b["simplices"].as_array().unwrap().len(), 34);
    assert_eq!(b["vertices"][0]["perm"], serde_json::json!([1, 2, 3, 4]));
    assert!(b["simplices"][0]["recipe"]["facet"].is_array());

    let b = bundle("assoc", "0");
    assert_eq!(b["vertices"].as_array().unwrap().len(), 1);
    assert_eq!(b["vertices"][0]["tree"], "(..)");
    assert_eq!(b["simplices"][0]["recipe"], Value::Null);
}

#[test]
fn triangulate_is_deterministic() {
    for args in [
        ["triangulate", "--polytope", "assoc", "--n", "3"],
        ["triangulate", "--polytope", "perm", "--n", "2"],
    ] {
        let a = assoc(&args);
        let b = assoc(&args);
        assert_eq!(a.stdout, b.stdout);
    }
    let a = assoc(&[
        "triangulate",
        "--polytope",
        "assoc",
        "--n",
        "3",
        "--format",
        "off",
    ]);
    let b = assoc(&[
        "triangulate",
        "--polytope",
        "assoc",
        "--n",
        "3",
        "--format",
        "off",
    ]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn triangulate_to_file() {
    let path = scratch("k2.json");
    let out = assoc(&[
        "triangulate",
        "--polytope",
        "assoc",
        "--n",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let written = fs::read(&path).unwrap();
    assert_eq!(
        written,
        assoc(&["triangulate", "--polytope", "assoc", "--n", "2"]).stdout
    );
}

#[test]
fn off_export() {
    let text = stdout(&assoc(&[
        "triangulate",
        "--polytope",
        "assoc",
        "--n",
        "2",
        "--format",
        "off",
    ]));
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "OFF");
    assert_eq!(lines[1], "5 3 0");
    assert!(lines[2]
        .split(' ')
        .all(|x| x.split('.').nth(1).is_some_and(|d| d.len() == 9)));
    assert_eq!(lines.len(), 2 + 5 + 3);
    assert!(lines[7..].iter().all(|l| l.starts_with("3 ")));

    let text = stdout(&assoc(&[
        "triangulate",
        "--polytope",
        "perm",
        "--n",
        "3",
        "--format",
        "off",
    ]));
    assert!(text.starts_with("OFF\n24 "));
}

#[test]
fn triangulate_usage_errors() {
    assert_eq!(
        code(&assoc(&["triangulate", "--polytope", "assoc", "--n", "7"])),
        2
    );
    assert_eq!(
        code(&assoc(&["triangulate", "--polytope", "perm", "--n", "4"])),
        2
    );
    assert_eq!(
        code(&assoc(&[
            "triangulate",
            "--polytope",
            "assoc",
            "--n",
            "4",
            "--format",
            "off"
        ])),
        2
    );
    assert_eq!(
        code(&assoc(&["triangulate", "--polytope", "cube", "--n", "2"])),
        2
    );
}

#[test]
fn verify_fresh_triangulations() {
    let out = assoc(&[
        "verify",
        "--polytope",
        "assoc",
        "--n",
        "4",
        "--samples",
        "50",
        "--seed",
        "42",
    ]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["sampling"]["interior_samples"], 50 * 125);

    let out = assoc(&["verify", "--polytope", "perm", "--n", "2"]);
    assert_eq!(code(&out), 0);
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["count"]["simplices"], 4);
}

#[test]
fn verify_usage_errors() {
    assert_eq!(code(&assoc(&["verify", "--polytope", "assoc"])), 2);
    assert_eq!(code(&assoc(&["verify"])), 2);
    assert_eq!(
        code(&assoc(&["verify", "--polytope", "perm", "--n", "5"])),
        2
    );
}

#[test]
fn exported_bundles_revalidate() {
    for (p, n) in [
        ("assoc", "0"),
        ("assoc", "2"),
        ("assoc", "3"),
        ("perm", "1"),
        ("perm", "3"),
    ] {
        let b = bundle(p, n);
        let out = verify_value(&format!("fresh-{p}-{n}.json"), &b);
        assert_eq!(code(&out), 0, "{p} {n}: {}", stdout(&out));
    }
}

#[test]
fn corrupted_bundles_are_rejected() {
    let good = bundle("assoc", "3");

    let mut swapped = good.clone();
    swapped["simplices"][0]["vertices"][0] = good["simplices"][1]["vertices"][1].clone();
    let out = verify_value("swapped.json", &swapped);
    assert_eq!(code(&out), 1);
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["facet_pairing"]["pass"], false);

    let mut relabelled = good.clone();
    relabelled["simplices"][0]["label"] = good["simplices"][1]["label"].clone();
    let out = verify_value("relabelled.json", &relabelled);
    assert_eq!(code(&out), 1);
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["labels"]["pass"], false);
    assert_eq!(report["sampling"]["pass"], true);

    let mut moved = good.clone();
    moved["vertices"][3]["coords"][0] = Value::from(9);
    assert_eq!(code(&verify_value("moved.json", &moved)), 1);

    let mut dropped = good.clone();
    dropped["simplices"].as_array_mut().unwrap().pop();
    assert_eq!(code(&verify_value("dropped.json", &dropped)), 1);

    let mut not_parking = good.clone();
    not_parking["simplices"][0]["label"] = serde_json::json!([3, 3, 3]);
    assert_eq!(code(&verify_value("not-parking.json", &not_parking)), 1);

    let mut dangling = good;
    dangling["simplices"][0]["vertices"][0] = Value::from(99);
    assert_eq!(code(&verify_value("dangling.json", &dangling)), 1);

    let path = scratch("garbage.json");
    fs::write(&path, "{").unwrap();
    assert_eq!(
        code(&assoc(&["verify", "--check-file", path.to_str().unwrap()])),
        1
    );
}

#[test]
fn parking_table_and_decomposition() {
    let out = assoc(&["parking", "--n", "3"]);
    assert_eq!(
        stdout(&out),
        " n  a  p  q  parking functions\n \
         3  1  2  0  (1,1,1) (1,1,2) (1,2,1)\n    \
         1  1  1  (1,1,3) (1,3,1)\n    \
         1  0  2  (1,2,2) (1,2,3) (1,3,2)\n    \
         2  2  0  (2,1,1) (2,1,2) (2,2,1)\n    \
         2  1  1  (2,1,3) (2,3,1)\n    \
         3  2  0  (3,1,1) (3,1,2) (3,2,1)\n"
    );
    let out = assoc(&["parking", "--decompose", "3,6,1,7,2,1,3,6"]);
    assert_eq!(
        stdout(&out),
        "a=3 p=4 q=3 f=(1,2,1,3) g=(1,2,1) θ=VUVUUUV\n"
    );
    assert_eq!(code(&assoc(&["parking", "--decompose", "2,2"])), 1);
    assert_eq!(code(&assoc(&["parking", "--decompose", "1,x"])), 1);
    assert_eq!(code(&assoc(&["parking"])), 2);
    assert_eq!(code(&assoc(&["parking", "--n", "9"])), 2);
}

#[test]
fn counts() {
    let last = |args: &[&str]| {
        let out = assoc(args);
        assert_eq!(code(&out), 0);
        stdout(&out).lines().last().unwrap().to_string()
    };
    assert_eq!(
        last(&["counts", "--what", "zp", "--n-max", "8"]),
        "sequence: 1,1,4,34,488,10512,316224,12649104,649094752"
    );
    assert_eq!(
        last(&["counts", "--what", "parking", "--n-max", "3"]),
        "sequence: 1,3,16"
    );
    assert_eq!(
        last(&["counts", "--what", "simplices", "--n-max", "6"]),
        "sequence: 1,3,16,125,1296,16807"
    );
    let out = stdout(&assoc(&["counts", "--what", "simplices", "--n-max", "30"]));
    assert!(!out.contains("MISMATCH"));
    let out = stdout(&assoc(&["counts", "--what", "parking", "--n-max", "12"]));
    assert!(out.contains("\n12\t1792160394037\t1792160394037\n"));
    assert_eq!(
        code(&assoc(&["counts", "--what", "zp", "--n-max", "31"])),
        2
    );
    assert_eq!(
        code(&assoc(&["counts", "--what", "cubes", "--n-max", "3"])),
        2
    );
}
