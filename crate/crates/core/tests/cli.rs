//! End-to-end checks of the `ppc` binary: output formats, exit codes, the
//! sequence cache, and parallel determinism.

use std::process::{Command, Output};

fn ppc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ppc"))
        .args(args)
        .output()
        .expect("run ppc")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn count_fibonacci_class() {
    let out = ppc(&["count", "--n", "4..9", "--avoid", "13/2;123"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let counts: Vec<&str> = text
        .lines()
        .skip(1)
        .map(|l| l.split_whitespace().nth(1).unwrap())
        .collect();
    assert_eq!(counts, ["5", "8", "13", "21", "34", "55"]);
    assert!(text.lines().skip(1).all(|l| l.ends_with("ok")));
}

#[test]
fn count_barred_family_uses_recursion_as_closed_form() {
    let out = ppc(&["count", "--n", "5", "--avoid", "1,2|3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let row: Vec<&str> = text.lines().nth(1).unwrap().split_whitespace().collect();
    assert_eq!(row, ["5", "19", "19", "ok"]);
    // And the two-pattern family.
    let out = ppc(&["count", "--n", "5", "--avoid", "123;1,2|3"]);
    let text = stdout(&out);
    let row: Vec<&str> = text.lines().nth(1).unwrap().split_whitespace().collect();
    assert_eq!(row, ["5", "11", "11", "ok"]);
}

#[test]
fn count_parity_and_formats() {
    let out = ppc(&["count", "--n", "4", "--avoid", "13/2", "--parity"]);
    assert!(out.status.success());
    let row: Vec<String> = stdout(&out)
        .lines()
        .nth(1)
        .unwrap()
        .split_whitespace()
        .map(String::from)
        .collect();
    assert_eq!(row, ["4", "4", "4", "4", "4", "ok"]);

    let out = ppc(&["count", "--n", "4..5", "--avoid", "12/3", "--format", "csv"]);
    let text = stdout(&out);
    assert_eq!(text.lines().next().unwrap(), "n,count,closed,ok");
    assert_eq!(text.lines().nth(1).unwrap(), "4,7,7,ok");

    let out = ppc(&["count", "--n", "4", "--avoid", "12/3", "--format", "jsonl"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["count"], "7");
    assert_eq!(v["ok"], "ok");
}

#[test]
fn avoiders_listing() {
    let out = ppc(&["avoiders", "--n", "4", "--avoid", "1/2/3;123"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "12/34\n13/24\n14/23\n");
    let out = ppc(&["avoiders", "--n", "3", "--avoid", "", "--format", "jsonl"]);
    let lines: Vec<String> = stdout(&out).lines().map(String::from).collect();
    assert_eq!(lines.len(), 5);
    let first: serde_json::Value = serde_json::from_str(&lines[0]).unwrap();
    assert_eq!(first["n"], 3);
}

#[test]
fn stat_values_and_check() {
    let out = ppc(&[
        "stat",
        "--sigma",
        "137/26/45",
        "--stat",
        "inv,maj,rb,cr,ne,al,cr_3",
        "--check",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let get = |name: &str| {
        text.lines()
            .find(|l| l.starts_with(name))
            .unwrap_or_else(|| panic!("row {name}"))
            .split_whitespace()
            .nth(1)
            .unwrap()
            .to_string()
    };
    assert_eq!(get("inv"), "4");
    assert_eq!(get("maj"), "4");
    assert_eq!(get("rb"), "5");
    assert_eq!(get("cr"), "2");
    assert_eq!(get("ne"), "2");
    assert_eq!(get("al"), "2");
    assert_eq!(get("cr_3"), "0");
    assert!(text.lines().skip(1).all(|l| l.ends_with("ok")));
    // Default runs every statistic.
    let out = ppc(&["stat", "--sigma", "1/2/34"]);
    assert_eq!(stdout(&out).lines().count(), 16); // header + 15 statistics
}

#[test]
fn dist_formats() {
    let out = ppc(&["dist", "--n", "4", "--stat", "cr", "--format", "poly"]);
    assert_eq!(stdout(&out).trim(), "14 + q");
    let out = ppc(&["dist", "--n", "4", "--stat", "cr", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["0"], 14);
    assert_eq!(v["1"], 1);
    let out = ppc(&["dist", "--n", "3", "--stat", "cr"]);
    let text = stdout(&out);
    assert!(text.contains("0") && text.contains("5"));
    // Restricted to an avoidance class.
    let out = ppc(&[
        "dist", "--n", "5", "--stat", "inv", "--avoid", "13/2", "--format", "csv",
    ]);
    let total: u64 = stdout(&out)
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap().parse::<u64>().unwrap())
        .sum();
    assert_eq!(total, 16);
}

#[test]
fn seq_families_and_bfile() {
    let out = ppc(&["seq", "--family", "a", "--n", "0..5", "--oeis"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "0 1\n1 1\n2 2\n3 4\n4 8\n5 19\n");
    let out = ppc(&["seq", "--family", "eb", "--n", "0..5", "--format", "jsonl"]);
    let last: serde_json::Value =
        serde_json::from_str(stdout(&out).lines().last().unwrap()).unwrap();
    assert_eq!(last["family"], "eb");
    assert_eq!(last["source"], "recursion");
    // eb_5 + ob_5 = b_5 = 11.
    let out_ob = ppc(&["seq", "--family", "ob", "--n", "5", "--oeis"]);
    let out_eb = ppc(&["seq", "--family", "eb", "--n", "5", "--oeis"]);
    let ob: u64 = stdout(&out_ob)
        .split_whitespace()
        .nth(1)
        .unwrap()
        .parse()
        .unwrap();
    let eb: u64 = stdout(&out_eb)
        .split_whitespace()
        .nth(1)
        .unwrap()
        .parse()
        .unwrap();
    assert_eq!(ob + eb, 11);
    // Checked sequences agree with brute force.
    let out = ppc(&["seq", "--family", "b", "--n", "0..7", "--check"]);
    assert!(out.status.success());
    // Ad-hoc avoidance counts.
    let out = ppc(&["seq", "--avoid", "1/2/3", "--n", "1..5", "--oeis"]);
    assert_eq!(stdout(&out), "1 1\n2 2\n3 4\n4 8\n5 16\n");
    let out = ppc(&[
        "seq", "--avoid", "13/2", "--n", "4", "--parity", "--format", "jsonl",
    ]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["even"], "4");
    assert_eq!(v["odd"], "4");
    assert_eq!(v["source"], "brute");
    // b-files are scalar only.
    let out = ppc(&["seq", "--avoid", "13/2", "--n", "4", "--parity", "--oeis"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tables_reproduce() {
    let out = ppc(&["table", "--name", "3.3", "--n", "5", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let row = text
        .lines()
        .find(|l| l.contains("1/2/3;12/3;13/2"))
        .unwrap();
    let fields: Vec<&str> = row.split(',').collect();
    assert_eq!(fields[2], "2");
    assert_eq!(fields[5], "ok");
    assert!(row.contains("12345")); // the explicit class listing

    let out = ppc(&["table", "--name", "4.7", "--n", "6..7", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let row6 = text
        .lines()
        .find(|l| {
            l.starts_with("6,")
                && l.contains("12/3;13/2")
                && !l.contains("1/2/3")
                && !l.contains("123")
        })
        .unwrap();
    let fields: Vec<&str> = row6.split(',').collect();
    assert_eq!((fields[2], fields[3]), ("3", "3"));
    let row7 = text
        .lines()
        .find(|l| l.starts_with("7,") && l.contains("1/23;12/3;13/2") && !l.contains("123"))
        .unwrap();
    let fields: Vec<&str> = row7.split(',').collect();
    assert_eq!((fields[2], fields[3]), ("2", "0"));
    assert!(text.lines().skip(1).all(|l| l.ends_with(",ok")));

    let out = ppc(&["table", "--name", "9.9", "--n", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_report_and_exit_codes() {
    let out = ppc(&["verify", "--suite", "stats", "--max-n", "5"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(report["failed"], 0);
    assert_eq!(report["suite"], "stats");
    assert!(report["checks"].as_array().unwrap().len() >= 15);

    let out = ppc(&["verify", "--suite", "bogus", "--max-n", "5"]);
    assert_eq!(out.status.code(), Some(2));
    let out = ppc(&["verify", "--suite", "all", "--max-n", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn parse_failures_exit_2() {
    let out = ppc(&["count", "--n", "4", "--avoid", "1x/2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = ppc(&["count", "--n", "9..4", "--avoid", "13/2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = ppc(&["stat", "--sigma", "12/21"]);
    assert_eq!(out.status.code(), Some(2));
    let out = ppc(&["dist", "--n", "4", "--stat", "cr_1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = ppc(&["nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn parallel_output_is_identical() {
    let serial = ppc(&["count", "--n", "0..7", "--avoid", "1,2|3"]);
    let parallel = ppc(&["count", "--n", "0..7", "--avoid", "1,2|3", "--jobs", "3"]);
    assert_eq!(serial.stdout, parallel.stdout);
    assert!(serial.status.success());
}

#[test]
fn sequence_cache_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let run = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_ppc"))
            .args(args)
            .env("PPC_CACHE", dir.path())
            .output()
            .expect("run ppc")
    };
    let first = run(&["seq", "--family", "a", "--n", "0..6", "--oeis"]);
    assert!(first.status.success());
    let files: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(files.len(), 1, "one cache file per query key");
    let second = run(&["seq", "--family", "a", "--n", "0..6", "--oeis"]);
    assert_eq!(first.stdout, second.stdout);

    // Counts cache too, and a corrupt cache file is ignored.
    let c1 = run(&["count", "--n", "0..5", "--avoid", "13/2;123"]);
    let c2 = run(&["count", "--n", "0..5", "--avoid", "13/2;123"]);
    assert_eq!(c1.stdout, c2.stdout);
    for entry in std::fs::read_dir(dir.path()).unwrap() {
        std::fs::write(entry.unwrap().path(), "not numbers at all\n4 bogus\n").unwrap();
    }
    let c3 = run(&["count", "--n", "0..5", "--avoid", "13/2;123"]);
    assert_eq!(c1.stdout, c3.stdout);
}
