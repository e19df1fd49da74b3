use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use seqrec::code::alist::parse_alist;
use seqrec::code::null_space;
use tempfile::TempDir;

fn seqrec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_seqrec"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn construct(dir: &Path, extra: &[&str]) -> Output {
    let mut args = vec!["construct", "--out", dir.to_str().unwrap()];
    args.extend_from_slice(extra);
    seqrec(&args)
}

#[test]
fn petersen_code_and_info() {
    let tmp = TempDir::new().unwrap();
    let dir = tmp.path().join("p");
    let o = construct(&dir, &["--r", "3", "--t", "2", "--base", "petersen"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("n=25 k=15 rate=3/5"));
    for f in ["graph.txt", "manifest.txt", "code.alist", "report.json", "provenance.txt"] {
        assert!(dir.join(f).is_file(), "missing {f}");
    }

    let o = seqrec(&["info", "--in", dir.to_str().unwrap()]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("n=25 k=15 rate=0.6 girth=5\n"), "{text}");
    assert!(text.contains("layers: U0=10 Dummy=10"));

    let report: serde_json::Value = serde_json::from_str(&fs::read_to_string(dir.join("report.json")).unwrap()).unwrap();
    assert_eq!(report["n"], 25);
    assert_eq!(report["k"], 15);
    assert_eq!(report["rate"], "3/5");
    assert_eq!(report["rate_is_optimal"], true);
    assert_eq!(report["verification"]["failures"], 0);
}

#[test]
fn verify_alist_exhaustively() {
    let tmp = TempDir::new().unwrap();
    let dir = tmp.path().join("p");
    assert!(construct(&dir, &["--r", "3", "--t", "2", "--base", "petersen"]).status.success());
    let alist = dir.join("code.alist");
    let o = seqrec(&["verify", "--in", alist.to_str().unwrap(), "--t", "2", "--budget", "1000000"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("exhaustive, 0 failures"));

    // the directory form also checks the graph against H
    let o = seqrec(&["verify", "--in", dir.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("layers: ok"));
}

#[test]
fn verify_flags_a_too_strong_contract() {
    let tmp = TempDir::new().unwrap();
    let dir = tmp.path().join("p");
    assert!(construct(&dir, &["--r", "3", "--t", "2", "--base", "petersen"]).status.success());
    let alist = dir.join("code.alist");
    let o = seqrec(&["verify", "--in", alist.to_str().unwrap(), "--t", "5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("girth: FAIL"));
}

#[test]
fn decode_two_erasures() {
    let tmp = TempDir::new().unwrap();
    let dir = tmp.path().join("k");
    let o = construct(&dir, &["--r", "3", "--t", "3", "--base", "k43"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("n=16 k=9 rate=9/16"));

    let alist = dir.join("code.alist");
    let o = seqrec(&["decode", "--in", alist.to_str().unwrap(), "--erase", "0,7"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("schedule: 2 steps"), "{text}");
    assert_eq!(text.lines().filter(|l| l.starts_with("step ")).count(), 2);
}

#[test]
fn decode_recovers_a_codeword() {
    let tmp = TempDir::new().unwrap();
    let dir = tmp.path().join("p");
    assert!(construct(&dir, &["--r", "3", "--t", "2", "--base", "petersen"]).status.success());
    let text = fs::read_to_string(dir.join("code.alist")).unwrap();
    let h = parse_alist(&text).unwrap();
    let basis = null_space(&h.to_dense());
    let codeword: Vec<u8> = (0..h.n).map(|i| basis.iter().fold(0, |acc, b| acc ^ b[i])).collect();
    let ones: Vec<usize> = (0..h.n).filter(|&i| codeword[i] == 1).collect();

    // erase one symbol through the word and one through --erase
    let mut word: Vec<char> = codeword.iter().map(|&b| if b == 1 { '1' } else { '0' }).collect();
    word[ones[0]] = '?';
    let o = seqrec(&[
        "decode",
        "--in",
        dir.to_str().unwrap(),
        "--word",
        &word.iter().collect::<String>(),
        "--erase",
        &ones[1].to_string(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let expected: String = codeword.iter().map(|b| b.to_string()).collect();
    assert!(stdout(&o).contains(&format!("recovered: {expected}\n")));
}

/// Column supports of an alist file (0-based check indices).
fn seqrec_parse(text: &str) -> Vec<Vec<usize>> {
    let lines: Vec<&str> = text.lines().collect();
    let n: usize = lines[0].split_whitespace().next().unwrap().parse().unwrap();
    lines[4..4 + n]
        .iter()
        .map(|l| {
            l.split_whitespace()
                .map(|x| x.parse::<usize>().unwrap())
                .filter(|&x| x > 0)
                .map(|x| x - 1)
                .collect()
        })
        .collect()
}

#[test]
fn decode_reports_stopping_sets() {
    let tmp = TempDir::new().unwrap();
    let dir = tmp.path().join("k");
    assert!(construct(&dir, &["--r", "3", "--t", "3", "--base", "k43"]).status.success());
    let all: Vec<String> = (0..16).map(|i| i.to_string()).collect();
    let o = seqrec(&["decode", "--in", dir.to_str().unwrap(), "--erase", &all.join(",")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error[invariant]:"));
}

#[test]
fn bootstrap_from_smaller_t() {
    let tmp = TempDir::new().unwrap();
    let dir = tmp.path().join("q");
    let o = construct(
        &dir,
        &[
            "--r", "3", "--t", "4", "--from-t", "2", "--base", "petersen", "--strategy", "stepwise", "--budget",
            "20000",
        ],
    );
    assert!(o.status.success(), "{}", stderr(&o));
    let manifest = fs::read_to_string(dir.join("manifest.txt")).unwrap();
    assert!(manifest.contains("rate: 9/17\n"));
    let girth: usize = manifest
        .lines()
        .find_map(|l| l.strip_prefix("girth: "))
        .unwrap()
        .parse()
        .unwrap();
    assert!(girth >= 5);
    assert!(manifest.contains("stage_1: double-cover x2"));
    assert!(manifest.contains("moore_floor_met: true"));
}

#[test]
fn identical_flags_give_identical_artifacts() {
    let tmp = TempDir::new().unwrap();
    let flags = ["--r", "3", "--t", "4", "--base", "random", "--seed", "7", "--budget", "5000"];
    let a = tmp.path().join("a");
    let b = tmp.path().join("b");
    assert!(construct(&a, &flags).status.success());
    assert!(construct(&b, &flags).status.success());
    for f in ["code.alist", "manifest.txt", "graph.txt", "report.json", "provenance.txt"] {
        assert_eq!(fs::read(a.join(f)).unwrap(), fs::read(b.join(f)).unwrap(), "{f} differs");
    }
}

#[test]
fn export_round_trips() {
    let tmp = TempDir::new().unwrap();
    let dir = tmp.path().join("k");
    assert!(construct(&dir, &["--r", "3", "--t", "3", "--base", "k43"]).status.success());
    let original = fs::read_to_string(dir.join("code.alist")).unwrap();

    let copy = tmp.path().join("copy.alist");
    let o = seqrec(&["export", "--in", dir.to_str().unwrap(), "--format", "alist", "--out", copy.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(fs::read_to_string(&copy).unwrap(), original);

    let o = seqrec(&["export", "--in", copy.to_str().unwrap(), "--format", "json", "--t", "3"]);
    assert!(o.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["n"], 16);
    assert_eq!(doc["optimal_rate"], "9/16");
    let rows: Vec<Vec<usize>> = serde_json::from_value(doc["rows"].clone()).unwrap();
    let mut cols = vec![Vec::new(); 16];
    for (i, row) in rows.iter().enumerate() {
        for &c in row {
            cols[c].push(i);
        }
    }
    assert_eq!(cols, seqrec_parse(&original));

    let o = seqrec(&["export", "--in", dir.to_str().unwrap(), "--format", "edges"]);
    assert_eq!(stdout(&o), fs::read_to_string(dir.join("graph.txt")).unwrap());
}

#[test]
fn exit_codes() {
    let tmp = TempDir::new().unwrap();
    let out = tmp.path().join("x");
    let out = out.to_str().unwrap();

    let o = seqrec(&["construct", "--r", "2", "--t", "3", "--out", out]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stderr(&o).starts_with("error[infeasible]:"));

    let o = seqrec(&["construct", "--r", "3", "--t", "4", "--from-t", "3", "--out", out]);
    assert_eq!(o.status.code(), Some(4));

    let o = seqrec(&["construct", "--r", "three", "--t", "3", "--out", out]);
    assert_eq!(o.status.code(), Some(3));

    let o = seqrec(&["construct", "--r", "3", "--t", "2", "--group", "dihedral", "--out", out]);
    assert_eq!(o.status.code(), Some(3));

    let bad = tmp.path().join("bad.alist");
    fs::write(&bad, "2 1\n1 2\n").unwrap();
    let o = seqrec(&["info", "--in", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).starts_with("error[parse]:"));

    let o = seqrec(&["info", "--in", tmp.path().join("missing.alist").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));

    assert_eq!(seqrec(&["--help"]).status.code(), Some(0));
}
