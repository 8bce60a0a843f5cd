use std::process::{Command, Output};

use serde_json::Value;

fn duality(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_duality"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn order_of_xyz() {
    let o = duality(&["order", "XYZ"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "8\n");
}

#[test]
fn braid_relation() {
    let o = duality(&["eq", "XYX", "YXY"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "true\n"));
    let o = duality(&["eq", "XY", "YX"]);
    assert_eq!(stdout(&o), "false\n");
}

#[test]
fn act_and_pi() {
    let o = duality(&["act", "X"]);
    assert_eq!(stdout(&o), "−μ, −ν, α, −λ, −γ, −β, βμ + γν − ρ\n");
    let o = duality(&["pi", "(XYXZ)^2"]);
    assert_eq!(stdout(&o), "()\n");
}

#[test]
fn matrix_has_six_rows() {
    let o = duality(&["matrix", "Z"]);
    assert_eq!(stdout(&o).lines().count(), 6);
}

#[test]
fn parse_error_exits_two_with_offset() {
    let o = duality(&["parse", "XQ"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("offset 1"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(duality(&["order", "X", "--bogus"]).status.code(), Some(2));
    assert_eq!(duality(&["oracle", "--dims", "1,2"]).status.code(), Some(2));
    assert_eq!(
        duality(&["verify", "--check", "nonsense"]).status.code(),
        Some(2)
    );
    assert_eq!(duality(&["verify", "--table", "7"]).status.code(), Some(2));
}

#[test]
fn split_check() {
    let o = duality(&["verify", "--check", "split"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("not split: 64/64 sections fail"));
}

#[test]
fn generator_table_passes() {
    let o = duality(&["verify", "--table", "2"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn json_wraps_result() {
    let o = duality(&["--format", "json", "order", "XY"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["command"], "order");
    assert_eq!(v["result"], 3);
    let o = duality(&["enumerate", "--group", "dg2", "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["result"]["order"], 6);
}

#[test]
fn oracle_single_axis() {
    let o = duality(&[
        "oracle",
        "--dims",
        "1,2,1,2,1,1,2",
        "--dual",
        "Y",
        "--seed",
        "4",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("Y: oracle equals symbolic dual"));
}

#[test]
fn output_is_deterministic() {
    let a = duality(&["enumerate"]);
    let b = duality(&["enumerate"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("order 96"));
}
