//! CSV and plain-text renderings of the report documents.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::dto::{BoundReportJson, CacheJson, InvariantsReportJson, SuiteJson, TableJson, VerifyRunJson, ViolationReportJson};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            _ => Err(format!("unknown format {s:?}; expected json, csv or text")),
        }
    }
}

/// One table row. The first eight columns follow the reference table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableCsvRow {
    #[serde(rename = "type")]
    pub type_name: String,
    pub p: u32,
    pub r: usize,
    pub h_dual: i64,
    pub v: String,
    pub column6: i64,
    pub witness: String,
    pub witness_dim: usize,
    pub family: String,
    pub rank: usize,
    pub m: usize,
    pub prime_class: String,
    pub s: usize,
    pub reference: String,
}

impl TableCsvRow {
    pub fn new(r: &InvariantsReportJson) -> Self {
        Self {
            type_name: r.type_name.clone(),
            p: r.p,
            r: r.r,
            h_dual: r.h_dual,
            v: r.v.clone(),
            column6: r.column6,
            witness: r.witness.clone(),
            witness_dim: r.witness_dim,
            family: r.family.clone(),
            rank: r.rank,
            m: r.m,
            prime_class: r.prime_class.clone(),
            s: r.s,
            reference: r.reference.status.clone(),
        }
    }
}

#[derive(Serialize)]
struct BoundCsvRow<'a> {
    #[serde(rename = "type")]
    type_name: &'a str,
    p: u32,
    k: i64,
    regime: &'a str,
    exponent: &'a str,
    quad_coeff: &'a str,
    lin_coeff: &'a str,
    ans_exponent: &'a str,
    difference: &'a str,
    dh_constant: i64,
    dh_slope: &'a str,
}

#[derive(Serialize)]
struct SuiteCsvRow<'a> {
    #[serde(rename = "type")]
    type_name: &'a str,
    p: u32,
    suite: &'a str,
    count: usize,
    failures: usize,
    min_slack: Option<&'a str>,
    passed: bool,
}

#[derive(Serialize)]
struct CacheCsvRow<'a> {
    #[serde(rename = "type")]
    type_name: &'a str,
    path: &'a str,
    status: &'a str,
    checksum: &'a str,
}

fn write_csv<T: Serialize>(rows: impl IntoIterator<Item = T>) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    for r in rows {
        w.serialize(r).expect("in-memory CSV writes cannot fail");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("CSV output is UTF-8")
}

pub fn table_csv<'a>(rows: impl IntoIterator<Item = &'a InvariantsReportJson>) -> String {
    write_csv(rows.into_iter().map(TableCsvRow::new))
}

pub fn parse_table_csv(text: &str) -> Result<Vec<TableCsvRow>, csv::Error> {
    csv::Reader::from_reader(text.as_bytes()).deserialize().collect()
}

pub fn bound_csv(b: &BoundReportJson) -> String {
    write_csv(b.rows.iter().map(|r| BoundCsvRow {
        type_name: &b.type_name,
        p: b.p,
        k: r.k,
        regime: &r.regime,
        exponent: &r.exponent,
        quad_coeff: &r.quad_coeff,
        lin_coeff: &r.lin_coeff,
        ans_exponent: &r.ans_exponent,
        difference: &r.difference,
        dh_constant: r.dh_constant,
        dh_slope: &r.dh_slope,
    }))
}

fn suite_row<'a>(type_name: &'a str, p: u32, s: &'a SuiteJson) -> SuiteCsvRow<'a> {
    let (count, failures) = s.counts();
    SuiteCsvRow {
        type_name,
        p,
        suite: s.name(),
        count,
        failures,
        min_slack: s.min_slack(),
        passed: s.passed(),
    }
}

pub fn verify_csv(v: &VerifyRunJson) -> String {
    write_csv(v.suites.iter().map(|s| suite_row(&v.type_name, v.p, s)))
}

pub fn search_csv(r: &ViolationReportJson) -> String {
    write_csv([SuiteCsvRow {
        type_name: &r.type_name,
        p: r.p,
        suite: &r.check,
        count: r.trials_run,
        failures: r.violation_count,
        min_slack: r.min_slack.as_deref(),
        passed: r.passed,
    }])
}

pub fn cache_csv(c: &CacheJson) -> String {
    write_csv(c.entries.iter().map(|e| CacheCsvRow {
        type_name: &e.type_name,
        path: &e.path,
        status: &e.status,
        checksum: &e.checksum,
    }))
}

pub fn info_text(r: &InvariantsReportJson) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{} over F_{} (m = {}, {})", r.type_name, r.p, r.m, r.prime_class.replace('_', " "));
    let _ = writeln!(s, "  r       {}", r.r);
    let _ = writeln!(s, "  h_dual  {}", r.h_dual);
    let _ = writeln!(s, "  s       {}", r.s);
    let _ = writeln!(s, "  v       {}", r.v);
    let _ = writeln!(s, "  column6 {}", r.column6);
    let _ = writeln!(s, "  witness {} (centralizer dim {})", r.witness, r.witness_dim);
    let _ = writeln!(s, "  coweight centralizers {:?}", r.coweight_centralizers);
    let _ = writeln!(s, "  centre dim {}, kernel = centre: {}", r.center_dim, r.kernel_equals_center);
    let _ = write!(s, "  reference: {}", r.reference.status);
    if let Some(c) = &r.reference.condition {
        let _ = write!(s, " ({c})");
    }
    s.push('\n');
    for n in &r.reference.notes {
        let _ = writeln!(s, "    {n}");
    }
    s
}

pub fn table_text(t: &TableJson) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:<5} {:>2} {:>2} {:>6} {:>7} {:>8} {:>8} {:>6}  reference",
        "type", "p", "r", "h_dual", "v", "column6", "witness", "dim"
    );
    for r in &t.rows {
        let _ = writeln!(
            s,
            "{:<5} {:>2} {:>2} {:>6} {:>7} {:>8} {:>8} {:>6}  {}",
            r.type_name, r.p, r.r, r.h_dual, r.v, r.column6, r.witness, r.witness_dim, r.reference.status
        );
    }
    for k in &t.skipped {
        let _ = writeln!(s, "{:<5} {:>2} skipped: {}", k.type_name, k.p, k.reason);
    }
    let _ = writeln!(s, "{} rows, all match: {}", t.rows.len(), t.all_match);
    s
}

pub fn bound_text(b: &BoundReportJson) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{} over F_{} (m = {}, v = {})", b.type_name, b.p, b.m, b.v);
    let _ = writeln!(s, "{:>3} {:>13} {:>10} {:>10} {:>10} {:>10}", "k", "regime", "exponent", "quad", "ans", "difference");
    for r in &b.rows {
        let _ = writeln!(
            s,
            "{:>3} {:>13} {:>10} {:>10} {:>10} {:>10}",
            r.k, r.regime, r.exponent, r.quad_coeff, r.ans_exponent, r.difference
        );
    }
    s
}

pub fn verify_text(v: &VerifyRunJson) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{} over F_{} (seed {}, {} dimensions)", v.type_name, v.p, v.seed, v.policy);
    for suite in &v.suites {
        let (count, failures) = suite.counts();
        let _ = write!(s, "  {:<13} {:>7} run, {} failed", suite.name(), count, failures);
        if let Some(m) = suite.min_slack() {
            let _ = write!(s, ", min slack {m}");
        }
        let _ = writeln!(s, "  {}", if suite.passed() { "ok" } else { "FAILED" });
    }
    let _ = writeln!(s, "{}", if v.passed { "all suites passed" } else { "some suites FAILED" });
    s
}

pub fn search_text(r: &ViolationReportJson) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{} over F_{}: {} trials (seed {}), {} witnesses",
        r.type_name, r.p, r.trials_run, r.config.seed, r.violation_count
    );
    if let Some(m) = &r.min_slack {
        let _ = writeln!(s, "  min slack {m} ({} trials)", r.min_slack_count);
    }
    for v in &r.violations {
        let _ = writeln!(
            s,
            "  trial {}: dim U = {}, dim V = {}, cod [U,V] = {} > {}",
            v.trial, v.dim_u, v.dim_v, v.lhs, v.bound
        );
    }
    s
}

pub fn cache_text(c: &CacheJson) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "cache directory {}", c.directory);
    for e in &c.entries {
        let _ = writeln!(s, "  {:<4} {:<18} {} {}", e.type_name, e.status, e.checksum, e.path);
    }
    s
}
