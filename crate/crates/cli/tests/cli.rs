use std::path::PathBuf;
use std::process::{Command, Output};

fn symsep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symsep")).args(args).output().expect("binary runs")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("symsep-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn classify_two_qubit_spectra() {
    let o = symsep(&["classify", "0.5", "0.3", "0.2"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("0.009902") && text.contains("not SAS"), "{text}");

    let o = symsep(&["classify", "0.25", "0.25", "0.5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], "sas");
    assert_eq!(v["max_negativity"], 0.0);
}

#[test]
fn classify_three_qubit_spectrum() {
    let o = symsep(&["classify", "0.4", "0.3", "0.2", "0.1", "--qubits", "3", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], "not_sas");
    assert_eq!(v["dicke_mixture_test"], true);
}

#[test]
fn bad_input_is_a_usage_error() {
    assert_eq!(symsep(&["classify", "0.5", "0.6"]).status.code(), Some(2));
    assert_eq!(symsep(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(symsep(&["fig1", "--resolution", "1"]).status.code(), Some(2));
}

#[test]
fn figure_writes_grid_and_sibling_boundary() {
    let dir = scratch("fig");
    let out = dir.join("fig2.csv");
    let o = symsep(&["fig2", "--resolution", "21", "--output", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let grid = std::fs::read_to_string(&out).unwrap();
    assert!(grid.starts_with("tau3,r,value\n"));
    let boundary = std::fs::read_to_string(dir.join("fig2_boundary.csv")).unwrap();
    assert!(boundary.starts_with("tau3,r\n"));
    assert_eq!(boundary.lines().count(), 22);
}

#[test]
fn figures_are_deterministic_across_exec_modes() {
    let a = symsep(&["fig3", "--resolution", "30"]);
    let b = symsep(&["fig3", "--resolution", "30", "--sequential"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn json_figure_carries_metadata() {
    let o = symsep(&["fig1", "--resolution", "6", "--seed", "9", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["grid"]["metadata"]["resolution"], 6);
    assert_eq!(v["grid"]["metadata"]["seed"], 9);
}

#[test]
fn radii_reports_closed_forms() {
    let text = stdout(&symsep(&["radii"]));
    assert!(text.contains("r_SAS = 0.204124") && text.contains("R_SAS = 0.272166"), "{text}");
    let text = stdout(&symsep(&["radii", "--qubits", "3"]));
    assert!(text.contains("0.030151") && text.contains("0.173205"), "{text}");
}

#[test]
fn verify_reports_and_exits_zero_on_success() {
    let dir = scratch("verify");
    let out = dir.join("report.json");
    let o = symsep(&["verify", "obs1", "--seed", "3", "--output", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(v["passed"], true);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}
