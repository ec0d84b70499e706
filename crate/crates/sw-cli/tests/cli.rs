use std::process::{Command, Output};

fn sw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sw"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn fusion_table_entry() {
    let out = sw(&["fusion", "--m", "1", "--table"]);
    let v = stdout_json(&out);
    assert_eq!(v["schema_version"], "1");
    // (X2, X3) entry is P1
    assert_eq!(v["results"]["table"][1][2], "P1");
}

#[test]
fn fusion_single_product() {
    let out = sw(&["fusion", "--m", "1", "--left", "X2", "--right", "P1"]);
    let v = stdout_json(&out);
    assert_eq!(v["results"]["product"]["value"], "2*X3 + P2");
}

#[test]
fn ring_presentations() {
    let out = sw(&["ring", "--m", "2", "--kind", "K"]);
    let v = stdout_json(&out);
    assert_eq!(v["results"]["presentation"], "Z[X]/(U_5 - U_3 - 2)");
    assert_eq!(v["results"]["rank"], 5);
    let out = sw(&["ring", "--m", "1", "--kind", "P"]);
    let v = stdout_json(&out);
    assert_eq!(v["results"]["presentation"], "Z[X]/(U_5 - 2*U_2)");
    assert_eq!(v["results"]["rank"], 5);
}

#[test]
fn weights_central_charge() {
    let out = sw(&["weights", "--m", "1"]);
    let v = stdout_json(&out);
    assert_eq!(v["results"]["central_charge"]["num"], "-5");
    assert_eq!(v["results"]["central_charge"]["den"], "2");
    assert_eq!(v["results"]["zhu_dimension"], 7);
}

#[test]
fn deterministic_output() {
    let a = sw(&["weights", "--m", "2", "--n-max", "2"]);
    let b = sw(&["weights", "--m", "2", "--n-max", "2"]);
    assert_eq!(a.stdout, b.stdout);
    let a = sw(&["ode", "--m", "1"]);
    let b = sw(&["ode", "--m", "1"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn exit_codes() {
    // usage error -> 2
    let out = sw(&["nonsense"]);
    assert_eq!(out.status.code(), Some(2));
    let out = sw(&["fusion"]);
    assert_eq!(out.status.code(), Some(2));
    // passing check -> 0
    let out = sw(&["connection", "--m", "1"]);
    assert_eq!(out.status.code(), Some(0));
    // precision floor
    let out = sw(&["weights", "--m", "1", "--precision", "32"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn connection_passes() {
    let out = sw(&["connection", "--m", "1", "--terms", "100"]);
    let v = stdout_json(&out);
    assert_eq!(v["status"], "pass");
    assert_eq!(v["results"]["reference_matrix_involution"], true);
}

#[test]
fn df_forrester_and_locus() {
    let out = sw(&[
        "df",
        "--mode",
        "forrester",
        "--params",
        "a=-0.3,b=-0.45,rho=0.4",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["status"], "pass");

    let out = sw(&[
        "df",
        "--mode",
        "locus",
        "--params",
        "a1=0.5,a2=0.5,b1=-0.3,b2=-0.3,gamma=0.1",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["results"]["on_locus"], false);

    let out = sw(&[
        "df",
        "--mode",
        "locus",
        "--params",
        "a1=1.0,a2=0.5,b1=-0.3,b2=-0.3,gamma=0.1",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["results"]["on_locus"], true);
}

#[test]
fn markdown_format() {
    let out = sw(&["ring", "--m", "1", "--format", "md"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.starts_with("# report"));
    assert!(text.contains("**presentation**"));
}

#[test]
fn verify_quick_passes() {
    let out = sw(&["verify", "--m", "1", "--quick"]);
    let v = stdout_json(&out);
    assert_eq!(v["status"], "pass");
    assert_eq!(out.status.code(), Some(0));
}
