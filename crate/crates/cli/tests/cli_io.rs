//! CLI behaviour tests: exit codes, schema errors, budget enforcement and
//! the shipped example library.

use std::path::PathBuf;
use std::process::Command;

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_l2cs")
}

fn data(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../..")
        .join("data")
        .join(rel)
}

#[test]
fn validate_2group_on_library_passes() {
    for name in ["trivial", "z2-id-z2", "z2-zero-z2", "z4-x2-z4", "inn-s3"] {
        let out = Command::new(bin())
            .arg("validate-2group")
            .arg("--group")
            .arg(data(&format!("groups/{name}.json")))
            .output()
            .unwrap();
        assert!(out.status.success(), "{name}: {:?}", out);
    }
}

#[test]
fn malformed_group_file_exits_2() {
    let dir = std::env::temp_dir().join("l2cs-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("broken.json");
    std::fs::write(&path, "{\"name\": \"broken\"").unwrap();
    let out = Command::new(bin())
        .arg("validate-2group")
        .arg("--group")
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn budget_exceeded_exits_3() {
    let out = Command::new(bin())
        .args(["enumerate-flat", "--budget", "10", "--lattice"])
        .arg(data("lattices/square.json"))
        .arg("--group")
        .arg(data("groups/inn-s3.json"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn enumerate_flat_fundamental_z2_id_reports_two_configs() {
    let out = Command::new(bin())
        .args(["enumerate-flat", "--lattice"])
        .arg(data("lattices/fundamental.json"))
        .arg("--group")
        .arg(data("groups/z2-id-z2.json"))
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(
        text.contains("\\\"configs\\\": 2") || text.contains("\"configs\": 2"),
        "{text}"
    );
}

#[test]
fn orbits_reports_partition_json() {
    let out = Command::new(bin())
        .args(["orbits", "--lattice"])
        .arg(data("lattices/fundamental.json"))
        .arg("--group")
        .arg(data("groups/z2-zero-z2.json"))
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("orbits"));
    assert!(text.contains("representatives"));
}

#[test]
fn failing_check_exits_1() {
    // A crossed module violating Peiffer: Z3 included in S3 with the
    // trivial action.
    let dir = std::env::temp_dir().join("l2cs-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("z3-incl-s3.json");
    let s3_mul = l2cs_core::algebra::FiniteGroup::symmetric3().mul;
    let file = serde_json::json!({
        "name": "z3-incl-s3",
        "g": {"name": "S3", "order": 6, "mul": s3_mul},
        "h": {"name": "Z3", "order": 3, "mul": [[0,1,2],[1,2,0],[2,0,1]]},
        "t": [0, 4, 5],
        "act": [[0,1,2],[0,1,2],[0,1,2],[0,1,2],[0,1,2],[0,1,2]],
    });
    std::fs::write(&path, serde_json::to_string(&file).unwrap()).unwrap();
    let out = Command::new(bin())
        .arg("validate-2group")
        .arg("--group")
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("fail"));
}

#[test]
fn csv_format_emits_one_line_per_check() {
    let out = Command::new(bin())
        .args([
            "--format",
            "csv",
            "hopf-check",
            "--suite",
            "equivariance",
            "--group",
        ])
        .arg(data("groups/z4-x2-z4.json"))
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(text.lines().count(), 2, "{text}");
    assert!(text.lines().nth(1).unwrap().contains("equivariance"));
}

#[test]
fn ybe_check_reads_rmatrix_files() {
    for name in ["uq-sl2-q1_1", "uq-sl2-q1_3", "uq-sl2-q2"] {
        let out = Command::new(bin())
            .args(["ybe-check", "--with-coproduct", "--rmatrix"])
            .arg(data(&format!("rmatrices/{name}.json")))
            .output()
            .unwrap();
        assert!(out.status.success(), "{name}");
    }
}

#[test]
fn fock_rosly_reads_library_files() {
    let out = Command::new(bin())
        .args(["fock-rosly", "--lie2"])
        .arg(data("rmatrices/inn-sl2.json"))
        .arg("--r")
        .arg(data("rmatrices/sl2-standard-r.json"))
        .output()
        .unwrap();
    assert!(out.status.success(), "{:?}", out);
}

#[test]
fn lattice2_suite_runs_from_files() {
    let out = Command::new(bin())
        .args(["lattice2", "--check", "all", "--group"])
        .arg(data("groups/z2-zero-z2.json"))
        .output()
        .unwrap();
    assert!(out.status.success());
}

#[test]
fn hopf_check_accepts_state_files() {
    let out = Command::new(bin())
        .args(["hopf-check", "--suite", "all", "--group"])
        .arg(data("groups/z4-x2-z4.json"))
        .arg("--state")
        .arg(data("state-example.json"))
        .output()
        .unwrap();
    assert!(out.status.success(), "{:?}", out);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("loaded-state"));
}
