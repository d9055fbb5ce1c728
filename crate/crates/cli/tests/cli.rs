use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(format!("{name}.json"))
}

fn tropic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tropic"))
        .args(args)
        .env_remove("TROPIC_FIXTURES")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stdout));
    })
}

fn path(name: &str) -> String {
    fixture(name).display().to_string()
}

#[test]
fn check_reports_balancing() {
    let out = tropic(&["check", &path("tripod")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["balanced"], true);

    let out = tropic(&["check", &path("unbal")]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["balanced"], false);
    assert_eq!(v["defects"][0]["defect"], serde_json::json!([1, 1]));
}

#[test]
fn superabundant_speyer3() {
    let out = tropic(&["superabundant", &path("speyer3")]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(
        (v["dimension"].as_i64(), v["expected"].as_i64(), v["excess"].as_i64()),
        (Some(4), Some(3), Some(1))
    );

    let out = tropic(&["superabundant", &path("cycle3")]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn defcone_expect_ordinary() {
    assert_eq!(tropic(&["defcone", &path("speyer3")]).status.code(), Some(0));
    assert_eq!(
        tropic(&["defcone", &path("speyer3"), "--expect-ordinary"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        tropic(&["defcone", &path("tripod"), "--expect-ordinary"]).status.code(),
        Some(0)
    );
    let v = json(&tropic(&["defcone", &path("cycle3")]));
    assert_eq!(v["coordinates"].as_array().unwrap().len(), 9);
    assert_eq!(v["equations"].as_array().unwrap().len(), 6);
}

#[test]
fn wellspaced_exit_codes() {
    assert_eq!(tropic(&["wellspaced", &path("speyer3")]).status.code(), Some(1));
    assert_eq!(tropic(&["wellspaced", &path("speyer3_two")]).status.code(), Some(0));
    let out = tropic(&["wellspaced", &path("tripod")]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["kind"], "genus_not_one");
}

#[test]
fn certify_and_verify() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("cert.json");
    let out = tropic(&[
        "certify",
        &path("segfan"),
        "--fan",
        &path("p1xp1"),
        "--out",
        cert.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    assert_eq!(v["node_data"][0]["k"], 1);
    assert_eq!(v["node_data"][0]["rho"], 2);

    let out = tropic(&["verify-cert", cert.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["valid"], true);

    let mut bad = v.clone();
    bad["node_data"][0]["u_q"][0] = serde_json::json!(3);
    std::fs::write(&cert, bad.to_string()).unwrap();
    let out = tropic(&["verify-cert", cert.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(json(&out)["violations"][0].as_str().unwrap().contains("edge e"));
}

#[test]
fn certify_rejects_unsupported_recession() {
    let out = tropic(&["certify", &path("segfan"), "--fan", &path("p2")]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["kind"], "recession_not_supported");
}

#[test]
fn star_and_subdivide() {
    let v = json(&tropic(&["star", &path("speyer3"), "--vertex", "v0"]));
    assert_eq!(v["rays"].as_array().unwrap().len(), 4);
    let out = tropic(&["star", &path("speyer3"), "--vertex", "nope"]);
    assert_eq!(out.status.code(), Some(1));

    let v = json(&tropic(&[
        "subdivide",
        &path("diag"),
        "--fan",
        &path("p2"),
        "--trust-fan",
    ]));
    assert_eq!(v["new_vertices"][0]["id"], "e#1");
}

#[test]
fn dot_output() {
    let out = tropic(&["compactify", &path("tripod"), "--emit", "dot"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("digraph"));
    assert_eq!(text.matches("shape=point").count(), 3);
    assert_eq!(
        tropic(&["genus", &path("tripod"), "--emit", "dot"]).status.code(),
        Some(2)
    );
}

#[test]
fn malformed_inputs_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("empty", ""),
        ("syntax", "{\"ambient_dim\": 2,"),
        ("type", "{\"ambient_dim\": \"two\", \"vertices\": []}"),
        (
            "float",
            "{\"ambient_dim\": 1, \"vertices\": [{\"id\": \"v\", \"coords\": [0.5]}]}",
        ),
        (
            "nonprimitive",
            "{\"ambient_dim\": 1, \"vertices\": [{\"id\": \"v\", \"coords\": [0]}], \
             \"rays\": [{\"id\": \"r\", \"base\": \"v\", \"direction\": [2], \"weight\": 1}]}",
        ),
        ("array", "[1, 2, 3]"),
    ];
    for (name, text) in cases {
        let p = dir.path().join(format!("{name}.json"));
        std::fs::write(&p, text).unwrap();
        for cmd in ["check", "genus", "superabundant", "wellspaced", "verify-cert"] {
            let out = tropic(&[cmd, p.to_str().unwrap()]);
            assert_eq!(out.status.code(), Some(2), "{cmd} {name}");
            assert_eq!(json(&out)["kind"], "parse", "{cmd} {name}");
        }
    }
    let out = tropic(&["check", "/definitely/not/here.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(tropic(&["bogus"]).status.code(), Some(2));
    assert_eq!(tropic(&["star", &path("tripod")]).status.code(), Some(2));
}

#[test]
fn invalid_curves_do_not_panic() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("split.json");
    // two components, mismatched dimensions, unknown vertex
    std::fs::write(
        &p,
        r#"{"ambient_dim": 2,
            "vertices": [{"id": "a", "coords": [0, 0]}, {"id": "b", "coords": [1, 0, 0]}],
            "rays": [{"id": "r", "base": "c", "direction": [1, 0], "weight": 1}]}"#,
    )
    .unwrap();
    for cmd in [
        "check",
        "genus",
        "recession",
        "compactify",
        "rescale",
        "defcone",
        "superabundant",
        "wellspaced",
    ] {
        let out = tropic(&[cmd, p.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(1), "{cmd}");
    }
}

#[test]
fn every_command_on_every_fixture_is_fast_and_deterministic() {
    let curves = [
        "line",
        "tripod",
        "unbal",
        "segfan",
        "cycle3",
        "speyer3",
        "speyer3_two",
        "diag",
        "ratios",
    ];
    for c in curves {
        let fan = if c.starts_with("speyer3") { "p3_speyer" } else { "p2" };
        let runs: Vec<Vec<String>> = vec![
            vec!["check".into(), path(c)],
            vec!["genus".into(), path(c)],
            vec!["recession".into(), path(c)],
            vec!["compactify".into(), path(c)],
            vec!["subdivide".into(), path(c), "--fan".into(), path(fan)],
            vec!["rescale".into(), path(c)],
            vec!["defcone".into(), path(c)],
            vec!["superabundant".into(), path(c)],
            vec!["wellspaced".into(), path(c)],
            vec!["certify".into(), path(c), "--fan".into(), path(fan)],
        ];
        for args in runs {
            let args: Vec<&str> = args.iter().map(String::as_str).collect();
            let start = Instant::now();
            let a = tropic(&args);
            assert!(start.elapsed() < Duration::from_secs(5), "{args:?}");
            let code = a.status.code();
            assert!(matches!(code, Some(0) | Some(1)), "{args:?}: {code:?}");
            serde_json::from_slice::<Value>(&a.stdout).expect("JSON report");
            let b = tropic(&args);
            assert_eq!(a.stdout, b.stdout, "{args:?}");
        }
    }
}

#[test]
fn selftest_uses_fixture_directory() {
    let out = tropic(&["selftest"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["source"], "built-in");

    let dir = fixture("line").parent().unwrap().to_path_buf();
    let out = Command::new(env!("CARGO_BIN_EXE_tropic"))
        .arg("selftest")
        .env("TROPIC_FIXTURES", &dir)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));

    let tmp = tempfile::tempdir().unwrap();
    std::fs::copy(fixture("tripod"), tmp.path().join("tripod.json")).unwrap();
    std::fs::write(
        tmp.path().join("expectations.json"),
        r#"{"tripod": {"balanced": true, "genus": 0, "excess": 1}}"#,
    )
    .unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_tropic"))
        .arg("selftest")
        .env("TROPIC_FIXTURES", tmp.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["fixtures"][0]["passed"], false);
}

#[test]
fn help_exits_zero() {
    let out = tropic(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("superabundant"));
}
