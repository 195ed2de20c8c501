//! End-to-end runs of the binary: outputs, exit codes and determinism.

use std::process::{Command, Output};

use serde_json::Value;

fn klr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_klr")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn idem_words(level: &Value) -> Vec<Value> {
    level.as_array().unwrap().iter().map(|s| s["idem"]["parts"].clone()).collect()
}

#[test]
fn resolve_root_power() {
    let v = json(&klr(&["resolve", "--a", "1", "--b", "1", "--m", "2"]));
    let levels = v["levels"].as_array().unwrap();
    assert_eq!(levels.len(), 3);
    assert_eq!(v["length"], 2);
    let words: Vec<Vec<Value>> = levels.iter().map(idem_words).collect();
    let parse = |s: &str| serde_json::from_str::<Value>(s).unwrap();
    assert_eq!(words[0], vec![parse("[[1,2],[2,2]]")]);
    assert_eq!(words[1], vec![parse("[[1,1],[2,2],[1,1]]")]);
    assert_eq!(words[2], vec![parse("[[2,2],[1,2]]")]);
    let shifts: Vec<i64> = levels.iter().map(|l| l[0]["shift"].as_i64().unwrap()).collect();
    assert_eq!(shifts, vec![-2, 0, 0]);
}

#[test]
fn resolve_small_cases() {
    let v = json(&klr(&["resolve", "--a", "1", "--b", "1", "--m", "1"]));
    assert_eq!(v["levels"].as_array().unwrap().len(), 2);
    let v = json(&klr(&["resolve", "--pi", "[[2,2],1],[[1,1],1]"]));
    assert_eq!(v["levels"].as_array().unwrap().len(), 1);
    let v = json(&klr(&["resolve", "--pi", "[[[2,2],1],[[1,1],1]]"]));
    assert_eq!(v["levels"].as_array().unwrap().len(), 1);
    let v = json(&klr(&["resolve", "--a", "1", "--b", "1", "--m", "1", "--q"]));
    assert_eq!(v["levels"].as_array().unwrap().len(), 2);
}

#[test]
fn invalid_partitions_and_flags_are_usage_errors() {
    for args in [
        &["resolve", "--pi", "[[1,1],1],[[2,2],1]"][..],
        &["resolve", "--pi", "[[2,1],1]"],
        &["resolve", "--pi", "garbage"],
        &["resolve", "--a", "1", "--b", "1"],
        &["resolve", "--a", "1", "--b", "1", "--m", "0"],
        &["verify", "--bogus"],
        &["verify", "--a", "1", "--b", "1", "--m", "1", "--ring", "Z"],
        &["ext", "--pi", "[[1,2],1]", "--sigma", "[[1,1],1]"],
        &["ext", "--pi", "[[1,2],1]", "--sigma", "[[1,2],1]", "--ring", "Fp", "--p", "4"],
        &["char", "--a", "1", "--b", "1", "--m", "1", "--cutoff", "-1"],
        &["frobnicate"],
    ] {
        let out = klr(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn character_of_the_cuspidal_module() {
    let v = json(&klr(&["char", "--a", "1", "--b", "1", "--m", "1", "--cutoff", "8"]));
    let words = v["words"].as_array().unwrap();
    assert_eq!(words.len(), 1);
    assert_eq!(words[0]["word"], serde_json::json!([1, 2]));
    let coeffs = &words[0]["coeffs"];
    for d in 0..=8 {
        let got = coeffs.get(d.to_string()).and_then(Value::as_i64).unwrap_or(0);
        assert_eq!(got, if d % 2 == 0 { 1 } else { 0 }, "degree {d}");
    }
}

#[test]
fn ext_of_the_cuspidal_module() {
    let v = json(&klr(&["ext", "--pi", "[[1,2],1]", "--sigma", "[[1,2],1]", "--ring", "Z", "--cutoff", "8"]));
    let rows = v["rows"].as_array().unwrap();
    assert!(rows.iter().all(|r| r["n"] == 0 && r["rank"] == 1 && r["torsion"] == serde_json::json!([])));
    let degrees: Vec<i64> = rows.iter().map(|r| r["degree"].as_i64().unwrap()).collect();
    assert_eq!(degrees, vec![0, 2, 4, 6, 8]);
    for ring in [&["--ring", "Q"][..], &["--ring", "F2"], &["--ring", "Fp", "--p", "3"]] {
        let mut args = vec!["ext", "--pi", "[[1,2],1]", "--sigma", "[[1,2],1]", "--cutoff", "8"];
        args.extend_from_slice(ring);
        let w = json(&klr(&args));
        assert_eq!(w["rows"].as_array().unwrap().len(), 5, "{ring:?}");
    }
}

#[test]
fn verify_root_power() {
    let out = klr(&["verify", "--a", "1", "--b", "1", "--m", "2", "--cutoff", "12"]);
    let v = json(&out);
    assert_eq!(v["status"], "pass");
    let names: Vec<&str> = v["reports"].as_array().unwrap().iter().map(|r| r["check"].as_str().unwrap()).collect();
    for name in ["d_squared", "chain_maps", "splitting", "homology", "w0_y0_w0"] {
        assert!(names.contains(&name), "{name} missing from {names:?}");
    }
}

#[test]
fn verify_lemma_suite() {
    let out = klr(&["verify", "--suite", "lemmas", "--max-d", "5"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn verify_partition_product() {
    let v = json(&klr(&["verify", "--pi", "[[2,2],1],[[1,1],1]", "--suite", "homology", "--cutoff", "8"]));
    assert_eq!(v["status"], "pass");
}

#[test]
fn output_is_deterministic_and_written_to_file() {
    let args = ["resolve", "--a", "1", "--b", "2", "--m", "2"];
    let a = klr(&args);
    let b = klr(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let path = std::env::temp_dir().join(format!("klr-cli-test-{}.json", std::process::id()));
    let out = klr(&[&args[..], &["--out", path.to_str().unwrap()]].concat());
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), a.stdout);
    std::fs::remove_file(path).unwrap();
}
