use std::process::{Command, Output};

fn kron_spectra(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kron-spectra"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn spectrum_both_on_complete_product_matches() {
    let out = kron_spectra(&["spectrum", "--family", "kron(K3,K3)", "--method", "both"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["match"], true);
    assert_eq!(v["closed_form"]["order"], 9);
}

#[test]
fn oracle_spectrum_of_five_cycle() {
    let out = kron_spectra(&[
        "spectrum", "--family", "C5", "--method", "oracle", "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows[0], "value,multiplicity");
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[1], "6,1");
    assert!(rows[2].starts_with("-0.381966011"));
    assert!(rows[3].starts_with("-2.61803398"));
}

#[test]
fn disconnected_product_is_an_error() {
    let out = kron_spectra(&["spectrum", "--family", "kron(C4,C4)"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("disconnected"), "{err}");
}

#[test]
fn parse_and_domain_errors_exit_one() {
    for family in ["J(3,2)", "kron(K3,", "Q5", "C2"] {
        let out = kron_spectra(&["gen", "--family", family]);
        assert_eq!(out.status.code(), Some(1), "{family}");
    }
}

#[test]
fn verify_reports_notes_and_mismatch_codes() {
    let out = kron_spectra(&["verify", "--family", "kron(K3,H(2,3))"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["match"], true);
    let notes = v["discrepancy_notes"].as_array().unwrap();
    assert!(notes[0].as_str().unwrap().contains("factor n"));

    // H(2,2) is triangle-free, which the product closed form does not allow for
    let out = kron_spectra(&["verify", "--family", "kron(K3,H(2,2))"]);
    assert_eq!(out.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["match"], false);
    assert_eq!(v["discrepancy_notes"].as_array().unwrap().len(), 2);
}

#[test]
fn verify_with_polynomial_check() {
    let out = kron_spectra(&["verify", "--family", "J(6,3)", "--check", "poly"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["poly"]["pass"], true);
}

#[test]
fn poly_command_prints_coefficients() {
    let out = kron_spectra(&["poly", "--family", "J(4,2)"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["coeffs"], serde_json::json!(["-2", "0", "0.5"]));
    let out = kron_spectra(&["poly", "--family", "C6"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn gen_round_trips_through_edge_list() {
    let out = kron_spectra(&["gen", "--family", "kron(K3,C4)"]);
    assert_eq!(out.status.code(), Some(0));
    let g = kron_spectra::graph::Graph::from_edge_list(&stdout(&out)).unwrap();
    assert_eq!(g.vertex_count(), 12);
    assert_eq!(g.edge_count(), 3 * 2 * 4 * 2 / 2);
}

#[test]
fn grid_streams_json_lines_and_is_deterministic() {
    let a = kron_spectra(&["grid", "--max-order", "12"]);
    let b = kron_spectra(&["grid", "--max-order", "12"]);
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let lines: Vec<serde_json::Value> = text
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    let summary = &lines.last().unwrap()["summary"];
    assert_eq!(summary["total"].as_u64().unwrap() as usize, lines.len() - 1);
    // K_3 ⊗ C_3 and K_3 ⊗ J(2,1) are in range and do not match their closed forms
    assert_eq!(a.status.code(), Some(2));
    assert!(lines
        .iter()
        .any(|l| l["family"] == "kron(K3,C3)" && l["match"] == false));
    assert!(lines
        .iter()
        .any(|l| l["family"] == "kron(K3,C4)" && l["match"] == true));
}

#[test]
fn dense_cap_override() {
    let out = Command::new(env!("CARGO_BIN_EXE_kron-spectra"))
        .args(["spectrum", "--family", "K20", "--method", "oracle"])
        .env("KRON_SPECTRA_MAX_ORDER", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap of 10"));
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("spectrum.json");
    let out = kron_spectra(&[
        "spectrum",
        "--family",
        "J(6,3)",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let s = kron_spectra::spectrum::Spectrum::from_json(&std::fs::read_to_string(path).unwrap())
        .unwrap();
    assert_eq!(s.to_string(), "{30:1, 0:14, -6:5}");
}
