use copeland::format::parse_document;
use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_copeland")).args(args).output().expect("spawn")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(name: &str) -> String {
    data(name).to_str().unwrap().to_string()
}

#[test]
fn odd_example_winner() {
    let o = run(&["winners", "--alpha", "1/2", &path("odd-example.el")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("# copeland winners alpha=1/2 model=nonunique\n"));
    assert!(out.contains("RESULT: YES\nWINNERS: c2\n"), "{out}");
}

#[test]
fn header_defaults() {
    let out = stdout(&run(&["winners", &path("odd-example.el")]));
    assert!(out.starts_with("# copeland winners alpha=1/2 model=nonunique\n"));
}

#[test]
fn llull_microbribery_one_flip() {
    let o = run(&["microbribery", "--alpha", "1", "--mode", "con", "--budget", "1", "--target", "c0", &path("even-example.el")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("RESULT: YES\nCOST: 1\n"), "{out}");
    assert_eq!(out.lines().filter(|l| l.starts_with("FLIP: ")).count(), 1);
}

#[test]
fn copeland_zero_even_example_needs_two() {
    let args = |k: &'static str| ["microbribery", "--alpha", "0", "--mode", "con", "--budget", k, "--target", "c0"];
    let f = path("even-example.el");
    let mut a1 = args("1").to_vec();
    a1.push(&f);
    assert_eq!(run(&a1).status.code(), Some(1));
    let mut a2 = args("2").to_vec();
    a2.push(&f);
    let o = run(&a2);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("COST: 2\n"));
}

#[test]
fn missing_file_exits_two() {
    let o = run(&["winners", "no-such-file.el"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert!(!o.stderr.is_empty());
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["winners"],
        vec!["frobnicate"],
        vec!["winners", "--alpha", "3/2", "x.el"],
        vec!["winners", "--threads", "0", "x.el"],
        vec!["control", "--type", "CCXX", "x.el"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn unsupported_exits_two() {
    let o = run(&["control", "--type", "CCAC", &path("spoilers.el")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("RESULT: UNSUPPORTED"));
    let o = run(&["microbribery", "--mode", "con", "--target", "c0", &path("even-example.el")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn no_exits_one_and_agrees_with_fpt() {
    let o = run(&["oracle", "--problem", "CCAC", &path("spoilers.el")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("RESULT: NO\n"));
    let o = run(&["fpt", "--problem", "CCAC", "--bound", "candidates", &path("spoilers.el")]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn cap_exceeded_exits_two() {
    let o = run(&["oracle", "--problem", "BRIBERY-CON", "--target", "c1", "--budget", "1", "--cap", "1", &path("odd-example.el")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("RESULT: CAP_EXCEEDED"));
}

#[test]
fn json_output() {
    let o = run(&["winners", "--format", "json", &path("odd-example.el")]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["result"], "YES");
    assert_eq!(v["alpha"], "1/2");
    assert_eq!(v["lines"][0], serde_json::json!(["WINNERS", "c2"]));
}

#[test]
fn build_output_is_an_election() {
    let o = run(&["build", "pad", "2"]);
    let e = parse_document(&stdout(&o)).unwrap().election;
    assert_eq!(e.m(), 5);
    assert_eq!(e.scores(copeland::Alpha::ONE), vec![2; 5]);
    let cot = path("cycle.cot");
    for extra in [None, Some("--compact-voters")] {
        let mut args = vec!["build", "mcgarvey"];
        args.extend(extra);
        args.push(&cot);
        let e = parse_document(&stdout(&run(&args))).unwrap().election;
        let (_, t) = copeland::format::parse_cot(&std::fs::read_to_string(data("cycle.cot")).unwrap()).unwrap();
        assert_eq!(e.outcome_table(), t);
    }
}

#[test]
fn reduce_is_deterministic_and_parses() {
    let args = ["reduce", "--from", "vc", "--to", "CCDC", "--alpha", "1/2", "--compact-voters", &path("path.vc")];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let out = stdout(&a);
    assert!(out.contains("# canned: false\n"));
    assert!(!out.contains("[FAILED]"));
    let doc = parse_document(&out).unwrap();
    assert!(doc.target.is_some() && doc.budget == Some(1));
}

#[test]
fn reduced_instance_replays_through_oracle() {
    let dir = std::env::temp_dir().join(format!("copeland-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("av.el");
    let o = run(&["reduce", "--from", "x3c", "--to", "CCAV", "--alpha", "1", &path("small.x3c")]);
    std::fs::write(&out, &o.stdout).unwrap();
    // small.x3c has an exact cover.
    let o = run(&["oracle", "--problem", "CCAV", "--alpha", "1", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    std::fs::remove_dir_all(&dir).unwrap();
}
