//! Runs the built `cobound` binary.

use std::process::{Command, Output};

fn cobound(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cobound"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn torus_signatures() {
    let o = cobound(&["sig", "-p", "2", "-q", "7"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "6\n"));
    assert_eq!(stdout(&cobound(&["sig", "-p", "2", "-q", "3"])), "2\n");
}

#[test]
fn lt_signature_values_and_domain() {
    assert_eq!(stdout(&cobound(&["ltsig", "-p", "2", "-q", "3", "-t", "1/3"])), "2\n");
    assert_eq!(stdout(&cobound(&["ltsig", "-p", "2", "-q", "3", "-t", "1/12"])), "0\n");
    let jump = stdout(&cobound(&["ltsig", "-p", "2", "-q", "3", "-t", "1/6"]));
    assert_eq!(jump, "1 (jump: left 0, right 2)\n");
    for bad in [
        &["ltsig", "-p", "3", "-q", "4", "-t", "0/1"][..],
        &["ltsig", "-p", "3", "-q", "6", "-t", "1/3"],
    ] {
        let o = cobound(bad);
        assert_eq!(o.status.code(), Some(2));
        assert_eq!(String::from_utf8_lossy(&o.stderr).lines().count(), 1);
    }
}

#[test]
fn profile_csv() {
    let o = cobound(&["profile", "-p", "2", "-q", "3"]);
    assert_eq!(stdout(&o), "angle_num,angle_den,jump\n1,6,2\n5,6,-2\n");
}

#[test]
fn seifert_and_alexander() {
    assert_eq!(stdout(&cobound(&["seifert", "-w", "2: 1 1 1"])), "-1 1\n0 -1\n");
    assert_eq!(
        stdout(&cobound(&["alex", "-w", "3: 1 -2 1 -2"])),
        "1*t^-1 + -3*t^0 + 1*t^1\n"
    );
    assert_eq!(cobound(&["alex", "-w", "2: 1 x"]).status.code(), Some(2));
    assert_eq!(cobound(&["seifert", "-w", "2: 3"]).status.code(), Some(2));
}

#[test]
fn bound_reports() {
    let o = cobound(&["bound", "-m", "7", "-k", "2", "-N", "37"]);
    assert_eq!(o.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(
        (json["m"].as_u64(), json["N"].as_u64(), json["l"].as_u64()),
        (Some(7), Some(37), Some(3))
    );
    assert!(json["upper"].as_i64() >= json["lower"].as_i64());
    let ck = cobound(&["bound", "-m", "7", "-k", "2", "-N", "37", "--ck", "5"]);
    let ck: serde_json::Value = serde_json::from_slice(&ck.stdout).unwrap();
    assert!(ck["upper"].as_i64() > json["upper"].as_i64());
    // Threshold, gcd and k violations.
    for args in [
        ["-m", "7", "-k", "2", "-N", "35"],
        ["-m", "7", "-k", "2", "-N", "38"],
        ["-m", "7", "-k", "5", "-N", "37"],
    ] {
        let mut full = vec!["bound"];
        full.extend(args);
        assert_eq!(cobound(&full).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn sweep_to_file_and_stdout() {
    let dir = std::env::temp_dir().join(format!("cobound-sweep-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("k2.csv");
    let o = cobound(&["sweep", "-k", "2", "--m-range", "2..6", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let csv = std::fs::read_to_string(&path).unwrap();
    assert!(csv.starts_with("m,k,N,lower,upper,gap\n2,2,3,"));
    assert_eq!(csv.lines().count(), 6);
    assert!(stdout(&o).starts_with("a = "));
    let inline = stdout(&cobound(&["sweep", "-k", "2", "--m-range", "2..6"]));
    assert_eq!(inline, format!("{csv}{}", stdout(&o)));
    std::fs::remove_dir_all(&dir).unwrap();
    assert_eq!(
        cobound(&["sweep", "-k", "2", "--m-range", "6..2"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_single_criterion() {
    let o = cobound(&["verify", "--only", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS [2]"));
    assert_eq!(cobound(&["verify", "--only", "12"]).status.code(), Some(2));
}

#[test]
fn usage_errors() {
    assert_eq!(cobound(&[]).status.code(), Some(2));
    assert_eq!(cobound(&["sig", "-p", "2"]).status.code(), Some(2));
    assert_eq!(
        cobound(&["sig", "-p", "2", "-q", "3", "--bogus"]).status.code(),
        Some(2)
    );
    assert_eq!(cobound(&["--help"]).status.code(), Some(0));
}

#[test]
fn output_is_deterministic() {
    let args = ["bound", "-m", "9", "-k", "3", "-N", "34"];
    assert_eq!(cobound(&args).stdout, cobound(&args).stdout);
}
