use std::path::Path;
use std::process::{Command, Output};

use chevalley_cli::format::parse_table_csv;
use chevalley_core::golden::{golden_row, table_types, TABLE_PRIMES};
use chevalley_core::parse_rational;
use chevalley_core::roots::RootSystem;
use serde_json::Value;

fn run_in(cache: Option<&Path>, args: &[&str]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_chevalley"));
    cmd.args(args);
    match cache {
        Some(d) => cmd.env("CHEVALLEY_CACHE_DIR", d),
        None => cmd.env_remove("CHEVALLEY_CACHE_DIR"),
    };
    cmd.output().expect("binary runs")
}

fn run(args: &[&str]) -> Output {
    run_in(None, args)
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn info_for_g2_in_characteristic_two() {
    let o = run(&["info", "--family", "G", "--rank", "2", "--p", "2"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v = json(&o);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["type"], "G2");
    assert_eq!(v["r"], 0);
    assert_eq!(v["h_dual"], 4);
    assert_eq!(v["v"], "1/3");
    assert_eq!(v["column6"], 8);
    assert_eq!(v["witness_dim"], 6);
    assert_eq!(v["reference"]["status"], "match");
}

#[test]
fn bound_for_a2_over_f5() {
    let o = run(&["bound", "--family", "A", "--rank", "2", "--p", "5", "--k", "3"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v = json(&o);
    assert_eq!(v["schema_version"], 1);
    let row = &v["rows"][0];
    assert_eq!(row["exponent"], "33/1");
    assert_eq!(row["regime"], "rank2_strong");

    let o = run(&["bound", "--family", "G", "--rank", "2", "--p", "2", "--k", "1-4", "--format", "csv"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 5);
    assert!(lines[0].starts_with("type,p,k,regime,exponent"));
    assert!(lines[1].starts_with("G2,2,1,general,14/1,"));
    assert!(lines[2].starts_with("G2,2,2,general,97/3,"));
}

#[test]
fn intolerable_primes_are_refused() {
    let o = run(&["verify", "--family", "B", "--rank", "3", "--p", "2"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("intolerable"), "{}", stderr(&o));
    assert!(o.stdout.is_empty());
    for args in [["info", "C", "3", "2"], ["bound", "F", "4", "2"], ["search", "G", "2", "3"]] {
        let o = run(&[args[0], "--family", args[1], "--rank", args[2], "--p", args[3]]);
        assert_eq!(code(&o), 2, "{args:?}");
        assert!(stderr(&o).contains("intolerable"));
    }
}

#[test]
fn usage_errors_exit_with_two() {
    let cases: &[&[&str]] = &[
        &[],
        &["frobnicate"],
        &["info", "--family", "G", "--rank", "2"],
        &["info", "--family", "Q", "--rank", "2", "--p", "5"],
        &["info", "--family", "A", "--rank", "2", "--p", "4"],
        &["info", "--family", "E", "--rank", "5", "--p", "5"],
        &["info", "--family", "A", "--rank", "1", "--p", "5"],
        &["info", "--family", "G", "--rank", "2", "--p", "5", "--format", "xml"],
        &["bound", "--family", "A", "--rank", "2", "--p", "5", "--k", "0"],
        &["bound", "--family", "A", "--rank", "2", "--p", "5", "--k", "4-2"],
        &["verify", "--family", "A", "--rank", "2", "--p", "5", "--trials", "0"],
        &["verify", "--family", "A", "--rank", "2", "--p", "5", "--policy", "sideways"],
        &["verify", "--family", "A", "--rank", "2", "--p", "5", "--suites", "nope"],
        &["verify", "--family", "A", "--rank", "3", "--p", "5", "--suites", "rank2_strong"],
        &["verify", "--family", "A", "--rank", "2", "--p", "3", "--suites", "catalogue"],
        &["search", "--family", "A", "--rank", "2", "--p", "5"],
        &["search", "--family", "A", "--rank", "3", "--p", "2"],
        &["table", "--max-rank", "1"],
        &["cache"],
    ];
    for args in cases {
        let o = run(args);
        assert_eq!(code(&o), 2, "{args:?}: {}", stderr(&o));
        assert!(!stderr(&o).is_empty());
    }
    assert_eq!(code(&run(&["--help"])), 0);
}

#[test]
fn verify_runs_named_suites_and_is_reproducible() {
    let args = [
        "verify", "--family", "C", "--rank", "2", "--p", "3", "--trials", "300", "--suites", "theorem2,rank2_strong,catalogue,lemx",
    ];
    let a = run(&args);
    assert_eq!(code(&a), 0, "{}", stderr(&a));
    let v = json(&a);
    let names: Vec<&str> = v["suites"].as_array().unwrap().iter().map(|s| s["suite"].as_str().unwrap()).collect();
    assert_eq!(names, ["theorem2", "rank2_strong", "lemx", "catalogue"]);
    assert_eq!(v["suites"][0]["trials_run"], 300);
    assert_eq!(v["suites"][0]["config"]["seed"], 20_240_611);
    assert_eq!(v["passed"], true);
    let mut serial = args.to_vec();
    serial.push("--serial");
    assert_eq!(a.stdout, run(&args).stdout);
    assert_eq!(a.stdout, run(&serial).stdout);
    let other_seed = [&args[..], &["--seed", "7"]].concat();
    assert_ne!(a.stdout, run(&other_seed).stdout);
}

#[test]
fn default_verify_covers_the_applicable_suites() {
    let o = run(&["verify", "--family", "A", "--rank", "3", "--p", "2", "--trials", "50", "--format", "csv"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let text = stdout(&o);
    assert!(!text.contains('\r'));
    let suites: Vec<&str> = text.lines().skip(1).map(|l| l.split(',').nth(2).unwrap()).collect();
    assert_eq!(suites, ["theorem2", "my_estimate", "dual_cox", "lemx", "graded"]);
    assert!(text.lines().skip(1).all(|l| l.ends_with(",true")));
}

#[test]
fn search_reports_and_exits_cleanly_without_witnesses() {
    let o = run(&["search", "--family", "A", "--rank", "3", "--p", "5", "--trials", "500", "--policy", "uniform"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v = json(&o);
    assert_eq!(v["check"], "conjecture");
    assert_eq!(v["config"]["policy"], "uniform");
    assert_eq!(v["violation_count"], 0);
}

#[test]
fn table_csv_reproduces_the_reference_rows() {
    let o = run(&["table", "--format", "csv"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.starts_with("type,p,r,h_dual,v,column6,witness,witness_dim,"));
    assert!(!text.contains('\r') && text.ends_with('\n'));
    let rows = parse_table_csv(&text).unwrap();
    let expected: usize = table_types(8)
        .iter()
        .map(|s| {
            let rs = RootSystem::new(*s);
            TABLE_PRIMES.iter().filter(|&&p| rs.classify_prime(p).is_tolerable()).count()
        })
        .sum();
    assert_eq!(rows.len(), expected);
    for row in &rows {
        let fam = row.family.parse().unwrap();
        let g = golden_row(fam, row.rank, row.p).unwrap_or_else(|| panic!("{} p={}", row.type_name, row.p));
        assert_eq!(row.type_name, format!("{}{}", row.family, row.rank));
        assert_eq!(row.r as i64, g.r);
        assert_eq!(row.h_dual, g.h_dual);
        assert_eq!(parse_rational(&row.v), Some(g.v));
        assert_eq!(row.column6, g.column6);
        assert_eq!(row.witness, format!("y{}", g.witness), "{} p={}", row.type_name, row.p);
        assert_eq!(row.witness_dim as i64, g.witness_dim);
        assert_eq!(row.reference, "match");
    }
}

#[test]
fn out_flag_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g2.csv");
    let o = run(&["info", "--family", "G", "--rank", "2", "--p", "5", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let rows = parse_table_csv(&text).unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!((rows[0].witness_dim, rows[0].column6), (4, 8));
    let bad = dir.path().join("missing").join("x.json");
    let o = run(&["info", "--family", "G", "--rank", "2", "--p", "5", "--out", bad.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
}

#[test]
fn cache_directory_comes_from_the_environment() {
    let dir = tempfile::tempdir().unwrap();
    let o = run_in(Some(dir.path()), &["cache", "--family", "F", "--rank", "4"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_eq!(json(&o)["entries"][0]["status"], "built");
    let file = dir.path().join("F4.json");
    assert!(file.exists());
    let again = run_in(Some(dir.path()), &["cache", "--family", "F", "--rank", "4"]);
    assert_eq!(json(&again)["entries"][0]["status"], "hit");

    let plain = run(&["info", "--family", "F", "--rank", "4", "--p", "5"]);
    let cached = run_in(Some(dir.path()), &["info", "--family", "F", "--rank", "4", "--p", "5"]);
    assert_eq!(plain.stdout, cached.stdout);

    std::fs::write(&file, "{\"schema_version\":1}").unwrap();
    let o = run_in(Some(dir.path()), &["cache", "--family", "F", "--rank", "4", "--format", "text"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("rebuilt"));
    let o = run_in(Some(dir.path()), &["info", "--family", "F", "--rank", "4", "--p", "5"]);
    assert_eq!(o.stdout, plain.stdout);

    let other = tempfile::tempdir().unwrap();
    let o = run(&["cache", "--max-rank", "2", "--dir", other.path().to_str().unwrap(), "--format", "csv"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().count(), 4);
}
