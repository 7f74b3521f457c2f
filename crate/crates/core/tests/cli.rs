//! Runs the `dickson` binary end to end.

use std::process::{Command, Output};

fn dickson(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dickson"))
        .args(args)
        .env_remove("DICKSON_OUT_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = dickson(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn documented_examples() {
    assert!(stdout(&["sets", "--q", "29", "--set", "A2++"]).starts_with("3 7 11 18 22 26\n"));
    assert_eq!(stdout(&["sets", "--q", "16", "--set", "T1"]).split_whitespace().take_while(|t| *t != "size").count(), 8);
    assert!(stdout(&["sets", "--q", "3", "--set", "A2++"]).starts_with("\nsize 0"));
    assert_eq!(stdout(&["eval", "--q", "29", "--family", "D", "--k", "5", "--x", "10"]), "17\n");
    assert_eq!(stdout(&["poly", "--family", "D", "--k", "7"]), "1 0 -7 0 14 0 -7 0\n");
    assert_eq!(stdout(&["cycles", "--q", "29", "--k", "5", "--set", "A2--"]), "(0)(10 17 13 19 12 16)\n");
    assert_eq!(stdout(&["cycles", "--q", "29", "--k", "7", "--set", "A2--"]), "not a permutation; image={0}\n");
    assert_eq!(stdout(&["products", "--q", "29", "--set", "B2++", "--sigma", "2"]), "24\n");
    assert_eq!(stdout(&["products", "--q", "7", "--set", "T40--"]), "2\n");
}

#[test]
fn verify_exit_codes() {
    let empty = dickson(&["verify", "--q-min", "10", "--q-max", "10", "--format", "json"]);
    assert_eq!(empty.status.code(), Some(0));
    assert!(String::from_utf8(empty.stdout).unwrap().contains("\"verdicts\": []"));
    assert_eq!(dickson(&["verify", "--q-min", "20", "--q-max", "3"]).status.code(), Some(2));
    assert_eq!(dickson(&["verify", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(dickson(&["eval", "--q", "12", "--k", "2", "--x", "1"]).status.code(), Some(2));
    assert_eq!(dickson(&["identities", "--k-max", "16", "--closed-form-max", "40"]).status.code(), Some(0));
}

#[test]
fn golden_check_runs_at_29() {
    let out = stdout(&["verify", "--q-min", "29", "--q-max", "29", "--format", "csv"]);
    let row = out.lines().find(|l| l.starts_with("golden_f29,29,")).expect("golden row");
    assert!(row.starts_with("golden_f29,29,pass,"), "{row}");
}

#[test]
fn json_is_deterministic_and_seed_sensitive() {
    let args = ["verify", "--q-min", "67", "--q-max", "83", "--format", "json", "--k-samples", "8"];
    let a = stdout(&args);
    let b = stdout(&args);
    assert_eq!(a, b);
    let mut seeded = args.to_vec();
    seeded.extend(["--seed", "7"]);
    assert_ne!(a, stdout(&seeded));
}

#[test]
fn out_dir_env_sets_default_path() {
    let dir = std::env::temp_dir().join(format!("dickson-cli-{}", std::process::id()));
    let out = Command::new(env!("CARGO_BIN_EXE_dickson"))
        .args(["verify", "--q-min", "3", "--q-max", "7", "--format", "csv"])
        .env("DICKSON_OUT_DIR", &dir)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(dir.join("report.csv")).unwrap();
    assert!(written.starts_with("check,q,status"));
    std::fs::remove_dir_all(&dir).unwrap();
}
