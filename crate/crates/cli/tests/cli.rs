use std::fs;
use std::process::{Command, Output};

fn pgdesign(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pgdesign"))
        .args(args)
        .env_remove("PGDESIGN_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn count_matrices(text: &str, n: usize) -> usize {
    text.split("\n\n").skip(1).filter(|block| block.trim().lines().count() == n).count()
}

#[test]
fn iso_all_iecs() {
    let o = pgdesign(&["check", "iso", "spreadn4t2a", "spreadn4t2b", "--all-iecs"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().next(), Some("true"));
    assert_eq!(count_matrices(&out, 4), 360);
    assert!(out.contains("0 1 0 0\n1 0 0 0\n1 1 1 1\n1 0 0 1"));
}

#[test]
fn iso_parallel_matches_serial() {
    let serial = pgdesign(&["check", "iso", "spreadn4t2a", "spreadn4t2b", "--all-iecs"]);
    let par = pgdesign(&["--threads", "2", "check", "iso", "spreadn4t2a", "spreadn4t2b", "--all-iecs", "--parallel"]);
    assert_eq!(stdout(&serial), stdout(&par));
}

#[test]
fn star_dimension_mismatch() {
    let o = pgdesign(&["check", "iso", "star_PA1", "star_PA2"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).trim(), "false");
    assert!(stderr(&o).contains("stars are not of same dimension"));
}

#[test]
fn star_iso_first() {
    let o = pgdesign(&["check", "iso", "starn5t3a", "starn5t3b"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(count_matrices(&stdout(&o), 5), 1);
}

#[test]
fn equivalence_exit_codes() {
    assert_eq!(pgdesign(&["check", "equiv", "spreadn4t2a", "spreadn4t2a"]).status.code(), Some(0));
    let o = pgdesign(&["check", "equiv", "spreadn6t3a", "spreadn6t3b"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).trim(), "false");
    assert_eq!(pgdesign(&["check", "equiv", "spreadn4t2a", "no_such"]).status.code(), Some(2));
    assert_eq!(pgdesign(&["check", "equiv", "spreadn4t2a"]).status.code(), Some(2));
}

#[test]
fn progress_lines() {
    let o = pgdesign(&["check", "iso", "spreadn4t2a", "spreadn4t2b", "--all-iecs", "--progress"]);
    let err = stderr(&o);
    let lines: Vec<&str> = err.lines().collect();
    assert_eq!(lines.len(), 10);
    assert!(lines.iter().all(|l| l.starts_with("percent done: ")));
    assert_eq!(*lines.last().unwrap(), "percent done: 100");
}

#[test]
fn json_output() {
    let o = pgdesign(&["check", "iso", "spreadn4t2a", "spreadn4t2b", "--all-iecs", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["result"], true);
    assert_eq!(v["iecs"].as_array().unwrap().len(), 360);
    assert_eq!(v["stats"]["candidates"], 720);
}

#[test]
fn fixtures_list_and_show() {
    let o = pgdesign(&["fixtures", "list"]);
    let names: Vec<String> = stdout(&o).lines().map(String::from).collect();
    for want in ["spreadn4t2a", "spread_IC2", "starn5t3b", "star_PA2"] {
        assert!(names.iter().any(|n| n == want));
    }
    let o = pgdesign(&["fixtures", "show", "spreadn4t2a"]);
    assert_eq!(
        stdout(&o),
        "spread n=4 t=2\nBC D BCD\nAC AD CD\nAB C ABC\nB ACD ABCD\nA BD ABD\n"
    );
    assert_eq!(pgdesign(&["fixtures", "show", "bogus"]).status.code(), Some(2));
}

#[test]
fn files_round_trip_through_commands() {
    let dir = tempfile::tempdir().unwrap();
    let spread = dir.path().join("s.txt");
    let o = pgdesign(&["construct", "spread", "--n", "4", "--t", "2", "--poly", "1,1,0,0,1", "-o", spread.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let s = spread.to_str().unwrap();
    assert_eq!(pgdesign(&["check", "equiv", s, "spreadn4t2a"]).status.code(), Some(0));

    let star = dir.path().join("star.txt");
    let o = pgdesign(&["construct", "star", "--spread", s, "--nucleus", "E", "-o", star.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = fs::read_to_string(&star).unwrap();
    assert!(text.starts_with("star n=5 t=3 t0=1\n"));
    assert_eq!(pgdesign(&["check", "iso", star.to_str().unwrap(), "starn5t3a"]).status.code(), Some(0));

    let o = pgdesign(&["star-to-spread", star.to_str().unwrap()]);
    let reduced = dir.path().join("reduced.txt");
    fs::write(&reduced, stdout(&o)).unwrap();
    assert_eq!(pgdesign(&["check", "iso", reduced.to_str().unwrap(), "spreadn4t2a"]).status.code(), Some(0));
}

#[test]
fn star_to_spread_collineation() {
    let o = pgdesign(&["star-to-spread", "starn5t3b"]);
    let out = stdout(&o);
    assert!(out.contains("# 0 0 0 0 1\n# 0 0 0 1 0\n# 0 1 1 0 0\n# 1 0 1 0 0\n# 0 0 1 0 0\n"));
    assert_eq!(pgdesign(&["star-to-spread", "star_PA1"]).status.code(), Some(2));
}

#[test]
fn bad_files() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "spread n=4 t=2\nD BC BCD\nE AB ABC\n").unwrap();
    let o = pgdesign(&["bitstrings", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3, column 1"));
    fs::write(&bad, "spread n=4 t=2\nD BC BCD\nD BC BCD\nB ACD ABCD\nA BD ABD\nCD AC AD\n").unwrap();
    let o = pgdesign(&["bitstrings", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not-disjoint"), "{}", stderr(&o));
}

#[test]
fn bitstrings_and_rank() {
    let o = pgdesign(&["bitstrings", "spreadn4t2a"]);
    assert_eq!(stdout(&o).lines().count(), 5);
    assert!(stdout(&o).lines().all(|l| l.len() == 15));
    let o = pgdesign(&["rank", "spreadn4t2a", "spreadn4t2c"]);
    let out = stdout(&o);
    assert!(out.contains("spreadn4t2a\t2/9\t0.22\t2/3 2/3 1/3 2/3 1"));
    assert!(out.contains("spreadn4t2c\t4/9\t0.44"));
}

#[test]
fn catalog_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.txt");
    let b = dir.path().join("b.txt");
    for (out, threads) in [(&a, "1"), (&b, "3")] {
        let o = pgdesign(&[
            "--threads", threads, "catalog", "--seed", "spreadn4t2a", "--budget", "30000", "--rng-seed", "5",
            "-o", out.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        assert!(stderr(&o).starts_with("classes: 1 "));
    }
    let text = fs::read_to_string(&a).unwrap();
    assert_eq!(text, fs::read_to_string(&b).unwrap());
    assert!(text.starts_with("# entry 1\n"));
    let body: String = text.lines().filter(|l| !l.starts_with('#')).map(|l| format!("{l}\n")).collect();
    let f = dir.path().join("entry.txt");
    fs::write(&f, body).unwrap();
    assert_eq!(pgdesign(&["check", "iso", f.to_str().unwrap(), "spreadn4t2b"]).status.code(), Some(0));
}
