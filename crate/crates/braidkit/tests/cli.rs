//! End-to-end behavior of the braidkit binary: file round-trips,
//! deterministic reports, exit-code contract.

use std::path::PathBuf;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_braidkit"))
}

fn tmp(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("braidkit-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn gen_round_trips_through_load() {
    let out = tmp("jordan.json");
    let status = bin()
        .args(["gen", "--symmetry", "jordan", "--a", "1", "--b", "0", "--out"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let text = std::fs::read_to_string(&out).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let sym = braidkit::symmetries::Symmetry::from_json(&v).unwrap();
    assert_eq!(sym.n(), 2);
    // byte-canonical round trip
    assert_eq!(
        serde_json::to_string_pretty(&sym.to_json()).unwrap(),
        text.trim_end()
    );
    // and the file is usable as a --symmetry argument
    let status = bin()
        .args(["verify", "--suite", "core", "--symmetry"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    std::fs::remove_file(&out).ok();
}

#[test]
fn reports_are_deterministic_modulo_timing() {
    let r1 = tmp("rep1.json");
    let r2 = tmp("rep2.json");
    for r in [&r1, &r2] {
        let status = bin()
            .args([
                "verify",
                "--suite",
                "qma",
                "--symmetry",
                "standard",
                "--n",
                "2",
                "--seed",
                "5",
                "--report",
            ])
            .arg(r)
            .status()
            .unwrap();
        assert!(status.success());
    }
    let mut v1: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&r1).unwrap()).unwrap();
    let mut v2: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&r2).unwrap()).unwrap();
    // timings are the only non-canonical part
    v1.as_object_mut().unwrap().remove("timings");
    v2.as_object_mut().unwrap().remove("timings");
    assert_eq!(v1, v2);
    std::fs::remove_file(&r1).ok();
    std::fs::remove_file(&r2).ok();
}

#[test]
fn expected_negative_checks_pass_for_non_scalar_n() {
    // non-centrality of the rtt determinant for a != b is an expected
    // negative: the suite passes and exits 0
    let output = bin()
        .args([
            "verify",
            "--suite",
            "rtt-yangian",
            "--symmetry",
            "jordan",
            "--a",
            "1",
            "--b",
            "0",
        ])
        .output()
        .unwrap();
    assert!(output.status.success(), "{}", String::from_utf8_lossy(&output.stdout));
    let text = String::from_utf8_lossy(&output.stdout);
    assert!(text.contains("[expected-negative]"));
    assert!(text.contains("0 failed"));
}

#[test]
fn unknown_suite_is_a_configuration_error() {
    let status = bin()
        .args(["verify", "--suite", "no-such-suite"])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(2));
}

#[test]
fn bad_symmetry_file_is_a_configuration_error() {
    let p = tmp("garbage.json");
    std::fs::write(&p, "{\"N\": 2}").unwrap();
    let status = bin()
        .args(["verify", "--suite", "core", "--symmetry"])
        .arg(&p)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(2));
    std::fs::remove_file(&p).ok();
}

#[test]
fn baxterize_subcommand_reports() {
    let r = tmp("bax.json");
    let status = bin()
        .args([
            "baxterize",
            "--symmetry",
            "flip",
            "--n",
            "2",
            "--samples",
            "7",
            "--seed",
            "3",
            "--report",
        ])
        .arg(&r)
        .status()
        .unwrap();
    assert!(status.success());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&r).unwrap()).unwrap();
    assert_eq!(v["suite"], "baxterize");
    assert_eq!(v["checks"][0]["status"], "pass");
    std::fs::remove_file(&r).ok();
}

#[test]
fn numeric_q_standard_symmetry() {
    let status = bin()
        .args([
            "verify", "--suite", "core", "--symmetry", "standard", "--n", "2", "--q", "3/2",
        ])
        .status()
        .unwrap();
    assert!(status.success());
    // q = 1 is a root of unity for the Hecke builder
    let status = bin()
        .args([
            "verify", "--suite", "core", "--symmetry", "standard", "--n", "2", "--q", "1",
        ])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(2));
}
