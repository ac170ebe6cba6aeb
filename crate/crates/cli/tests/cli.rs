use std::process::{Command, Output};

use faulhaber_cli::format::CoeffsDocument;

fn faulhaber(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_faulhaber"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn usage_errors_exit_2_on_stderr() {
    for args in [
        &["eval", "3", "0"][..],
        &["coeffs", "-2"],
        &["coeffs", "two"],
        &["verify"],
        &["frobnicate"],
    ] {
        let o = faulhaber(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn json_round_trips_through_the_binary() {
    for p in ["0", "7", "21"] {
        let text = stdout(&faulhaber(&["coeffs", p, "--format", "json"]));
        let line = text.trim_end_matches('\n');
        let doc: CoeffsDocument = serde_json::from_str(line).unwrap();
        assert_eq!(serde_json::to_string(&doc).unwrap(), line);
    }
}

#[test]
fn eval_with_check() {
    let o = faulhaber(&["eval", "10", "1000", "--check"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "91409924241424243424241924242500\n");
}

#[test]
fn verify_zero_passes() {
    let o = faulhaber(&["verify", "0", "--jobs", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("result: PASS"));
}

#[test]
fn bench_columns_match() {
    let o = faulhaber(&["bench", "200"]);
    assert_eq!(o.status.code(), Some(0));
    for line in stdout(&o).lines().skip(1) {
        let cols: Vec<&str> = line.split_whitespace().collect();
        assert_eq!(cols[1], cols[2], "{line}");
        assert_eq!(cols[3], cols[4], "{line}");
    }
}
