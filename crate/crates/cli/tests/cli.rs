use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn sdcirc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sdcirc")).args(args).output().expect("run sdcirc")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn jsonl(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).expect("one JSON object per line")).collect()
}

#[test]
fn verify_one_record() {
    let o = sdcirc(&["verify", "--id", "C_56,1"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("PASS C_56,1 [56,28,10] W56,2 alpha=-49 A10=112 A12=4382"), "{text}");
    assert!(text.contains("1/1 passed"));
}

#[test]
fn verify_jsonl_schema() {
    let o = sdcirc(&["--jsonl", "verify", "--length", "58"]);
    assert!(o.status.success());
    let v = jsonl(&o);
    assert_eq!(v.len(), 2);
    assert_eq!(v[0]["kind"], "record");
    assert_eq!(v[0]["id"], "C_58,1");
    assert_eq!(v[0]["d"], 10);
    assert_eq!(v[0]["method"], "full");
    assert_eq!(v[0]["fit"]["params"]["family"], "W58,2");
    assert_eq!(v[0]["fit"]["params"]["beta"], 1);
    assert_eq!(v[1]["kind"], "summary");
    assert_eq!(v[1]["passed"], 1);
}

#[test]
fn verify_structure_of_the_catalog() {
    let o = sdcirc(&["verify", "--all", "--structure"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("93/93 passed"));
}

#[test]
fn graymap_and_census() {
    let o = sdcirc(&["graymap", "--ring", "F4U", "--vector", "(1)"]);
    assert_eq!(stdout(&o).trim(), "0011");
    let o = sdcirc(&["--jsonl", "graymap", "--ring", "F4", "--vector", "23"]);
    let v = &jsonl(&o)[0];
    assert_eq!((v["image"].as_str(), v["lee_weight"].as_u64()), (Some("1001"), Some(2)));
    let o = sdcirc(&["--jsonl", "census", "--ring", "R16UV", "--n", "5"]);
    let v = &jsonl(&o)[0];
    assert_eq!((v["pairs"].as_u64(), v["distinct_matrices"].as_u64()), (Some(20480), Some(17760)));
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["verify", "--id", "C_99,9"][..],
        &["graymap", "--ring", "F9", "--vector", "1"],
        &["graymap", "--ring", "F2U", "--vector", "7"],
        &["census", "--ring", "R16UV", "--n", "9", "--budget", "1000"],
        &["mindist", "/nonexistent/file"],
        &["verify", "--id", "C_56,1", "--length", "56"],
    ] {
        let o = sdcirc(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

fn search_lines(dir: &Path, extra: &[&str]) -> String {
    let mut args = vec!["--jsonl", "search", "--ring", "F2U", "--n", "3", "--seed", "4", "--max-candidates", "500"];
    args.extend_from_slice(extra);
    let emit = dir.to_str().unwrap();
    args.extend_from_slice(&["--emit", emit]);
    let o = sdcirc(&args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

#[test]
fn search_emits_files_that_mindist_reads() {
    let dir = tempfile::tempdir().unwrap();
    let first = search_lines(dir.path(), &["--workers", "2"]);
    assert_eq!(first, search_lines(dir.path(), &["--workers", "2"]));
    let values: Vec<Value> = first.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let hits: Vec<&Value> = values.iter().filter(|v| v["kind"] == "hit").collect();
    assert!(!hits.is_empty());
    assert_eq!(values.last().unwrap()["kind"], "stats");
    for h in hits {
        let id = h["record"]["id"].as_str().unwrap();
        let path = dir.path().join(format!("{id}.txt"));
        let o = sdcirc(&["--jsonl", "mindist", path.to_str().unwrap(), "--full"]);
        let m = &jsonl(&o)[0];
        assert_eq!(m["self_dual"], true);
        assert_eq!(m["d"], h["d"]);
        assert_eq!(m["n"], h["n"]);
    }
}

#[test]
fn config_file_matches_flags() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("search.conf");
    std::fs::write(&cfg, "# search settings\nring = F2U\nn = 3\nseed = 4\nmax_candidates = 500\nworkers = 1\n")
        .unwrap();
    let via_file = sdcirc(&["--jsonl", "search", "--config", cfg.to_str().unwrap()]);
    let via_flags = sdcirc(&[
        "--jsonl",
        "search",
        "--ring",
        "F2U",
        "--n",
        "3",
        "--seed",
        "4",
        "--max-candidates",
        "500",
        "--workers",
        "1",
    ]);
    assert!(via_file.status.success());
    assert_eq!(stdout(&via_file), stdout(&via_flags));
    // flags after the file override it
    let overridden = sdcirc(&["--jsonl", "search", "--config", cfg.to_str().unwrap(), "--seed", "5"]);
    assert_ne!(stdout(&overridden), stdout(&via_flags));
}

#[test]
fn build_up_from_a_catalog_parent_and_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let o = sdcirc(&[
        "--jsonl",
        "build-up",
        "--parent",
        "C'_12,13",
        "--seed",
        "1",
        "--max-candidates",
        "20",
        "--workers",
        "1",
    ]);
    assert!(o.status.success());
    let v = jsonl(&o);
    assert!(v.iter().any(|x| x["kind"] == "hit" && x["n"] == 56));

    let parent = dir.path().join("rep.txt");
    std::fs::write(&parent, "1 2\n11\n").unwrap();
    let emit = dir.path().join("out");
    let o = sdcirc(&[
        "--jsonl",
        "build-up",
        "--parent",
        parent.to_str().unwrap(),
        "--max-candidates",
        "5",
        "--emit",
        emit.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let hits: Vec<Value> = jsonl(&o).into_iter().filter(|x| x["kind"] == "hit").collect();
    assert!(!hits.is_empty());
    for h in hits {
        assert_eq!((h["n"].as_u64(), h["d"].as_u64()), (Some(4), Some(2)));
    }
    assert!(std::fs::read_dir(&emit).unwrap().count() > 0);
}

#[test]
fn verify_emits_generator_files() {
    let dir = tempfile::tempdir().unwrap();
    let o = sdcirc(&["verify", "--id", "C'_12,1", "--emit", dir.path().to_str().unwrap()]);
    assert!(o.status.success());
    let path = dir.path().join("Cp_12_1.txt");
    let m = sdcirc(&["--jsonl", "mindist", path.to_str().unwrap(), "--lowweight", "4"]);
    let v = &jsonl(&m)[0];
    assert_eq!((v["n"].as_u64(), v["k"].as_u64(), v["self_dual"].as_bool()), (Some(48), Some(24), Some(true)));
}
