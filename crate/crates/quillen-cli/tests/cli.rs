//! End-to-end runs of the binary against the shipped fixtures.

use std::path::Path;
use std::process::{Command, Output};

fn quillen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quillen"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .to_str()
        .unwrap()
        .to_string()
}

fn stdout_of(args: &[&str]) -> String {
    let out = quillen(args);
    assert!(
        out.status.success(),
        "command {:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn lgenus_prints_cleared_polynomials() {
    assert_eq!(stdout_of(&["lgenus", "--k", "1"]), "L_1 = (p1)/3\n");
    assert_eq!(stdout_of(&["lgenus", "--k", "2"]), "L_2 = (7*p2 - p1^2)/45\n");
    assert_eq!(
        stdout_of(&["lgenus", "--k", "3"]),
        "L_3 = (62*p3 - 13*p2*p1 + 2*p1^3)/945\n"
    );
}

#[test]
fn signature_of_product_of_projective_planes() {
    let out = stdout_of(&["signature", "--input", &fixture("cp2_cp2.json")]);
    assert_eq!(out, "signature = 1\n");
}

#[test]
fn surface_analyze_table() {
    let out = stdout_of(&["surface-analyze", "--input", &fixture("universal.json")]);
    let expected = "\
surface type: rational elliptic surface (n = 1)

place     ord(g2)  ord(g3)  ord(Delta)  fiber
-1 + t          3        5           9  III*
infinity        0        0           1  I_1
t               1        1           2  II

sum of ord(Delta) * deg(place): 12
ledger currents:
  -1/12 [infinity]
  -1/6 [t]
  -3/4 [-1 + t]
continuous degree: 1
total degree: 0
holonomy order: 12
";
    assert_eq!(out, expected);
}

#[test]
fn surface_analyze_json_roundtrip() {
    let out = stdout_of(&["surface-analyze", "--input", &fixture("universal.json"), "--json"]);
    let report: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["surface_type"], "rational elliptic surface");
    assert_eq!(report["n"], 1);
    assert_eq!(report["fibers"].as_array().unwrap().len(), 3);
    assert_eq!(report["fibers"][0]["place"], "-1 + t");
    assert_eq!(report["fibers"][0]["fiber"], "III*");
    assert_eq!(report["ledger"]["holonomy_order"], 12);
    assert_eq!(report["ledger"]["continuous_degree"], 1);

    let rerun = stdout_of(&["surface-analyze", "--input", &fixture("universal.json"), "--json"]);
    assert_eq!(out, rerun, "reports must be byte-identical across runs");
}

#[test]
fn surface_analyze_nodal_fixtures() {
    for (name, n) in [("nodal12.json", 1u64), ("nodal24.json", 2)] {
        let out = stdout_of(&["surface-analyze", "--input", &fixture(name), "--json"]);
        let report: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(report["n"].as_u64().unwrap(), n);
        let fibers = report["fibers"].as_array().unwrap();
        for row in fibers {
            assert_eq!(row["fiber"], "I_1", "in {name}");
            assert_eq!(row["ord_delta"], 1, "in {name}");
        }
        assert_eq!(report["ledger"]["holonomy_order"], 12);
    }
}

#[test]
fn surface_twist_emits_model_json() {
    let out = stdout_of(&[
        "surface-twist",
        "--input",
        &fixture("universal.json"),
        "--q",
        "-5,1",
    ]);
    let twisted: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(twisted["n"], 2);
    assert_eq!(twisted["g2"].as_array().unwrap().len(), 7);
    assert_eq!(twisted["g3"].as_array().unwrap().len(), 10);
}

#[test]
fn torsion_at_square_lattice_point() {
    let out = stdout_of(&["torsion", "--tau", "i"]);
    assert_eq!(out, "torsion = 8.82256695068e-3\n");
    assert_eq!(stdout_of(&["torsion", "--tau", "0+1i"]), out);
}

#[test]
fn anomaly_cancellation_report() {
    let out = stdout_of(&[
        "anomaly",
        "--input",
        &fixture("nodal12.json"),
        "--rank",
        "2",
        "--degR",
        "2",
    ]);
    assert!(
        out.contains("continuous part: 0; local anomaly canceled"),
        "missing cancellation line:\n{out}"
    );
    assert_eq!(out.matches("-1/6 [").count(), 12);
    // rank-2 twisting doubles every phase, halving the holonomy order
    assert!(out.contains("holonomy order: 6"));
    assert!(out.contains("exp(2*pi*i*2*ord/12)"));
    assert!(out.contains("exp(-2*pi*i*2*ord/12)"));

    let out = stdout_of(&[
        "anomaly",
        "--input",
        &fixture("nodal24.json"),
        "--rank",
        "2",
        "--degR",
        "4",
    ]);
    assert!(out.contains("continuous part: 0; local anomaly canceled"));
}

#[test]
fn anomaly_json_schema() {
    let out = stdout_of(&[
        "anomaly",
        "--input",
        &fixture("universal.json"),
        "--rank",
        "1",
        "--degR",
        "0",
    ]);
    assert!(out.contains("continuous part: 1; local anomaly not canceled"));

    let out = stdout_of(&[
        "anomaly",
        "--input",
        &fixture("universal.json"),
        "--rank",
        "1",
        "--degR",
        "0",
        "--json",
    ]);
    let report: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["continuous_degree"], 1);
    assert_eq!(report["holonomy_order"], 12);
    let currents = report["currents"].as_array().unwrap();
    assert_eq!(currents.len(), 3);
    assert_eq!(currents[0]["place"], "-1 + t");
    assert_eq!(currents[0]["coeff"], "-3/4");
}

#[test]
fn spectral_reports() {
    let out = stdout_of(&[
        "spectral",
        "--input",
        &fixture("universal.json"),
        "--a0",
        "0",
        "--a2",
        "1",
        "--degR",
        "2",
    ]);
    let expected = "\
x = (0) / (1)
branch = 27*t - 135*t^2 + 270*t^3 - 270*t^4 + 135*t^5 - 27*t^6
branch degree: 6 (bound: 6)
";
    assert_eq!(out, expected);

    let out = stdout_of(&[
        "spectral",
        "--input",
        &fixture("universal.json"),
        "--a0",
        "1,0,1",
        "--a2",
        "5",
        "--degR",
        "2",
        "--json",
    ]);
    let report: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["branch_degree"], 6);
    assert_eq!(report["branch_degree_bound"], 6);
    assert_eq!(report["x_den"].as_array().unwrap().len(), 1);
}

#[test]
fn exit_codes() {
    // usage errors exit 2
    let out = quillen(&["no-such-verb"]);
    assert_eq!(out.status.code(), Some(2));
    let out = quillen(&["lgenus", "--unknown-flag", "3"]);
    assert_eq!(out.status.code(), Some(2));

    // domain errors exit 1 with a message on stderr
    let out = quillen(&["surface-analyze", "--input", "/no/such/file.json"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error: "));

    let out = quillen(&["torsion", "--tau", "1-2i"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("upper half plane") || err.contains("imaginary"), "stderr: {err}");

    let out = quillen(&["anomaly", "--input", &fixture("universal.json"), "--rank", "0", "--degR", "0"]);
    assert_eq!(out.status.code(), Some(1));
}
