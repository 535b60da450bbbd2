use std::path::Path;
use std::process::{Command, Output};

fn dawg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dawg")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(path: &Path) -> serde_json::Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn dawg_stats_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("abba.txt");
    std::fs::write(&input, "abba\n").unwrap();
    let out = dawg(&["build", "--in", input.to_str().unwrap(), "--structs", "dawg", "--stats"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let s = &doc["structures"][0];
    assert_eq!((s["name"].as_str(), s["nodes"].as_u64(), s["edges"].as_u64()), (Some("dawg"), Some(7), Some(10)));
}

#[test]
fn suffix_tree_dot_of_one_symbol() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("st.dot");
    let out = dawg(&["build", "--str", "a", "--structs", "st", "--dot", dot.to_str().unwrap()]);
    assert!(out.status.success());
    let body = std::fs::read_to_string(&dot).unwrap();
    let nodes = body.lines().filter(|l| l.contains("[label=") && !l.contains("->")).count();
    assert_eq!(nodes, 3);
}

#[test]
fn absent_words_tsv() {
    let dir = tempfile::tempdir().unwrap();
    let tsv = dir.path().join("maw.tsv");
    let out = dawg(&["build", "--str", "abaab", "--structs", "maw", "--sigma", "3", "--tsv", tsv.to_str().unwrap(), "--decode"]);
    assert!(out.status.success());
    let body = std::fs::read_to_string(&tsv).unwrap();
    let mut words: Vec<&str> = body.lines().map(|l| l.rsplit('\t').next().unwrap()).collect();
    words.sort_unstable();
    assert_eq!(words, ["aaa", "aaba", "bab", "bb", "c"]);
}

#[test]
fn integer_input_and_every_structure() {
    let dir = tempfile::tempdir().unwrap();
    let stats = dir.path().join("stats.json");
    let out = dawg(&[
        "build", "--str", "3 1 4 1 5 9 2 6 5 3 5", "--format", "ints",
        "--structs", "st,dawg,rdawg,affix,cdawg,scdawg,lstrie,maw",
        "--json", stats.to_str().unwrap(), "--tsv", dir.path().join("m.tsv").to_str().unwrap(),
        "--dot", dir.path().join("g.dot").to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(json(&stats)["structures"].as_array().unwrap().len(), 8);
    for name in ["st", "dawg", "rdawg", "affix", "cdawg", "scdawg", "lstrie"] {
        let body = std::fs::read_to_string(dir.path().join(format!("g.{name}.dot"))).unwrap();
        assert!(body.starts_with("digraph") && body.ends_with("}\n"), "{name}");
    }
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let run = |tag: &str| {
        let dot = dir.path().join(format!("{tag}.dot"));
        let out = dawg(&["build", "--str", "mississippi", "--structs", "cdawg", "--dot", dot.to_str().unwrap()]);
        assert!(out.status.success());
        std::fs::read_to_string(dot).unwrap()
    };
    assert_eq!(run("a"), run("b"));
}

#[test]
fn exit_codes() {
    assert_eq!(dawg(&["build", "--structs", "st"]).status.code(), Some(1));
    assert_eq!(dawg(&["build", "--str", "x", "--structs", "tree"]).status.code(), Some(1));
    assert_eq!(dawg(&["build", "--str", "ab", "--sigma", "1"]).status.code(), Some(1));
    assert_eq!(dawg(&["build", "--in", "/nonexistent/input"]).status.code(), Some(1));
    assert_eq!(dawg(&["verify", "--only", "nothing"]).status.code(), Some(1));
    assert_eq!(dawg(&["--help"]).status.code(), Some(0));
}

#[test]
fn quick_verify_passes() {
    let out = dawg(&["verify", "--max-n", "6", "--scale", "0.02"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert_eq!(stdout(&out).lines().filter(|l| l.starts_with("[PASS]")).count(), 10);
}

#[test]
fn small_bench_reports_ratios() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("bench.json");
    let out = dawg(&["bench", "--sizes", "2e3,4e3", "--runs", "1", "--sweep", "2,n", "--json", report.to_str().unwrap()]);
    assert!(out.status.success());
    let doc = json(&report);
    assert_eq!(doc["rows"].as_array().unwrap().len(), 2);
    assert_eq!(doc["sweep"][1]["sigma"].as_u64(), Some(2000));
}
