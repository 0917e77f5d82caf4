use std::process::{Command, Output};

fn treecount(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_treecount"))
        .args(args)
        .env_remove("TREECOUNT_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn count_prints_the_number() {
    let o = treecount(&["count", "--tree", "dstar:2,2", "--scheme", "kscf:2", "-q", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "66");
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| treecount(args).status.code();
    assert_eq!(
        code(&["count", "--tree", "path:3", "--scheme", "nope", "-q", "2"]),
        Some(2)
    );
    assert_eq!(
        code(&["count", "--tree", "edges:3;0-1", "--scheme", "cf", "-q", "2"]),
        Some(2)
    );
    assert_eq!(
        code(&["--budget", "1000", "count", "--tree", "path:12", "--scheme", "odd", "-q", "3", "--method", "brute"]),
        Some(3)
    );
    assert_eq!(code(&["verify", "--theorem", "STARCOL", "-n", "6", "-q", "3"]), Some(1));
    assert_eq!(
        code(&["verify", "--theorem", "CF,ODD", "-n", "4..6", "-q", "2"]),
        Some(0)
    );
}

#[test]
fn repeated_runs_are_byte_identical() {
    let args = ["census", "-n", "7", "-q", "2..3", "--scheme", "odd", "--format", "csv"];
    let first = treecount(&args);
    let second = treecount(&[
        "--jobs", "1", "census", "-n", "7", "-q", "2..3", "--scheme", "odd", "--format", "csv",
    ]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(stdout(&first).lines().count(), 1 + 2 * 11);
}

#[test]
fn cache_directory_from_the_environment() {
    let dir = tempfile::tempdir().unwrap();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_treecount"))
            .args(["census", "-n", "6", "-q", "3", "--scheme", "cf", "--format", "json"])
            .env("TREECOUNT_CACHE_DIR", dir.path())
            .output()
            .unwrap()
    };
    let first = run();
    assert_eq!(first.status.code(), Some(0));
    let files: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(files.len(), 1);
    assert_eq!(run().stdout, first.stdout);
}
