//! The release gate. Runs the full eleven-criterion suite through the real
//! binary; the child's stdout is inherited, so each criterion's PASS/FAIL
//! line streams to the terminal as it completes.

use std::process::Command;
use std::time::{Duration, Instant};

#[test]
fn acceptance_suite_passes_end_to_end() {
    let t0 = Instant::now();
    let dir = tempfile::tempdir().unwrap();
    let status = Command::new(env!("CARGO_BIN_EXE_trigapprox"))
        .args(["suite", "--seed", "0"])
        .arg("--out")
        .arg(dir.path())
        .status()
        .unwrap();
    assert!(status.success(), "the suite reported at least one FAIL");
    assert!(
        t0.elapsed() < Duration::from_secs(300),
        "suite exceeded the five-minute budget"
    );
    // Ten criteria leave a CSV behind (the wall-clock check has no table).
    let artifacts = std::fs::read_dir(dir.path()).unwrap().count();
    assert_eq!(artifacts, 10, "expected one CSV per tabled criterion");
}
