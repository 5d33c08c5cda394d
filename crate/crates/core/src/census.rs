//! Batch evaluation of polynomial lists and the non-integrality table.
//!
//! Two input formats are read:
//!
//! * CSV with columns `name,polynomial`, the polynomial in the usual text
//!   form (`1 - t + t^2`). A leading `name,polynomial` header is optional.
//! * JSON lines, one `{"name": .., "coeffs": [..], "minDegree": ..}` per
//!   line; `minDegree` defaults to 0.
//!
//! A malformed file aborts with the offending line number. A well-formed
//! record whose polynomial is not of L-space type is listed in
//! [`CensusReport::rejects`] and the batch goes on.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{coeffs_from_json, LaurentPoly, Rational};
use crate::upsilon::{report_unnormalized, InvariantReport};

/// Caps the number of worker threads used by [`run_census`].
pub const THREADS_ENV: &str = "UPSILON_LAB_THREADS";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CensusFormat {
    Csv,
    Jsonl,
}

impl FromStr for CensusFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(CensusFormat::Csv),
            "jsonl" | "json-lines" | "ndjson" => Ok(CensusFormat::Jsonl),
            other => Err(Error::InvalidParameter(format!("unknown census format {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableStyle {
    Csv,
    Markdown,
}

impl FromStr for TableStyle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(TableStyle::Csv),
            "markdown" | "md" => Ok(TableStyle::Markdown),
            other => Err(Error::InvalidParameter(format!("unknown table style {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRecord {
    pub name: String,
    pub delta: LaurentPoly,
    /// 1-based line in the input file.
    pub line: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusReject {
    pub name: String,
    pub line: u64,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub rows: Vec<InvariantReport>,
    pub rejects: Vec<CensusReject>,
    #[serde(rename = "nonIntegralCount")]
    pub non_integral_count: usize,
    #[serde(serialize_with = "ser_denoms")]
    pub denominators: BTreeSet<BigInt>,
}

fn ser_denoms<S: serde::Serializer>(d: &BTreeSet<BigInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(d.iter().map(|x| x.to_string()))
}

impl CensusReport {
    pub fn non_integral(&self) -> impl Iterator<Item = &InvariantReport> {
        self.rows.iter().filter(|r| !r.is_integral)
    }
}

#[derive(Deserialize)]
struct JsonRecord {
    name: String,
    coeffs: Vec<serde_json::Value>,
    #[serde(default, rename = "minDegree")]
    min_degree: i64,
}

pub fn parse_csv(text: &str) -> Result<Vec<CensusRecord>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let mut out = Vec::new();
    for (i, rec) in reader.records().enumerate() {
        let rec =
            rec.map_err(|e| Error::ParseAt { line: e.position().map_or(0, |p| p.line()), message: e.to_string() })?;
        let line = rec.position().map_or(0, |p| p.line());
        if rec.len() != 2 {
            return Err(Error::ParseAt { line, message: format!("expected 2 fields, found {}", rec.len()) });
        }
        if i == 0 && rec[0].eq_ignore_ascii_case("name") && rec[1].eq_ignore_ascii_case("polynomial") {
            continue;
        }
        let delta =
            rec[1].parse::<LaurentPoly>().map_err(|e| Error::ParseAt { line, message: format!("{}: {e}", &rec[0]) })?;
        out.push(CensusRecord { name: rec[0].to_string(), delta, line });
    }
    Ok(out)
}

pub fn parse_jsonl(text: &str) -> Result<Vec<CensusRecord>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i as u64 + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let rec: JsonRecord = serde_json::from_str(raw).map_err(|e| Error::ParseAt { line, message: e.to_string() })?;
        let coeffs = coeffs_from_json(&rec.coeffs).map_err(|message| Error::ParseAt { line, message })?;
        out.push(CensusRecord { name: rec.name, delta: LaurentPoly::from_coeffs(rec.min_degree, coeffs), line });
    }
    Ok(out)
}

fn thread_cap() -> Option<usize> {
    std::env::var(THREADS_ENV).ok()?.trim().parse().ok().filter(|&n: &usize| n > 0)
}

/// Evaluates every record, in parallel, keeping input order.
pub fn evaluate(records: &[CensusRecord]) -> CensusReport {
    let work = || records.par_iter().map(|r| report_unnormalized(&r.delta, &r.name)).collect::<Vec<_>>();
    let results = match thread_cap().and_then(|n| rayon::ThreadPoolBuilder::new().num_threads(n).build().ok()) {
        Some(pool) => pool.install(work),
        None => work(),
    };
    let mut rows = Vec::new();
    let mut rejects = Vec::new();
    for (rec, res) in records.iter().zip(results) {
        match res {
            Ok(r) => rows.push(r),
            Err(e) => rejects.push(CensusReject { name: rec.name.clone(), line: rec.line, reason: e.to_string() }),
        }
    }
    let non_integral_count = rows.iter().filter(|r| !r.is_integral).count();
    let denominators = rows.iter().filter(|r| !r.is_integral).map(|r| r.denominator()).collect();
    CensusReport { rows, rejects, non_integral_count, denominators }
}

pub fn run_census(path: impl AsRef<Path>, format: CensusFormat) -> Result<CensusReport> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| match e.kind() {
        std::io::ErrorKind::NotFound => Error::FileNotFound(path.display().to_string()),
        _ => Error::Io(format!("{}: {e}", path.display())),
    })?;
    let records = match format {
        CensusFormat::Csv => parse_csv(&text)?,
        CensusFormat::Jsonl => parse_jsonl(&text)?,
    };
    Ok(evaluate(&records))
}

fn summary(r: &CensusReport) -> String {
    let denoms: Vec<String> = r.denominators.iter().map(|d| d.to_string()).collect();
    format!(
        "non-integral: {} of {} (rejected {}); denominators: {{{}}}",
        r.non_integral_count,
        r.rows.len(),
        r.rejects.len(),
        denoms.join(",")
    )
}

/// Table of the rows with non-integral `-3∫Υ`, followed by a summary.
///
/// The CSV form has a `name,minus3I` header and the summary as a `#`
/// comment, so [`parse_table_csv`] reads it back.
pub fn emit_table(r: &CensusReport, style: TableStyle) -> String {
    let rows: Vec<&InvariantReport> = r.non_integral().collect();
    let mut out = String::new();
    match style {
        TableStyle::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["name", "minus3I"]).unwrap();
            for row in &rows {
                w.write_record([row.name.as_str(), &row.minus_three_integral.to_string()]).unwrap();
            }
            out.push_str(std::str::from_utf8(&w.into_inner().unwrap()).unwrap());
            writeln!(out, "# {}", summary(r)).unwrap();
        }
        TableStyle::Markdown => {
            const PAIRS: usize = 4;
            let width = rows.len().clamp(1, PAIRS);
            out.push('|');
            for _ in 0..width {
                out.push_str(" knot | -3∫Υ |");
            }
            out.push_str("\n|");
            for _ in 0..width {
                out.push_str("---|---|");
            }
            out.push('\n');
            for chunk in rows.chunks(PAIRS) {
                out.push('|');
                for row in chunk {
                    write!(out, " {} | {} |", row.name, row.minus_three_integral).unwrap();
                }
                for _ in chunk.len()..width {
                    out.push_str("  |  |");
                }
                out.push('\n');
            }
            writeln!(out, "\n{}", summary(r)).unwrap();
        }
    }
    out
}

/// Reads back the CSV produced by [`emit_table`].
pub fn parse_table_csv(text: &str) -> Result<Vec<(String, Rational)>> {
    let mut reader = csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(text.as_bytes());
    let mut out = Vec::new();
    for rec in reader.records() {
        let rec = rec.map_err(|e| Error::Parse(e.to_string()))?;
        let line = rec.position().map_or(0, |p| p.line());
        let value = rec
            .get(1)
            .and_then(|v| v.parse::<Rational>().ok())
            .ok_or_else(|| Error::ParseAt { line, message: "bad value column".into() })?;
        out.push((rec[0].to_string(), value));
    }
    Ok(out)
}

/// `true` when every non-integral row has denominator one of `allowed`.
pub fn denominators_within(r: &CensusReport, allowed: &[i64]) -> bool {
    r.denominators.iter().all(|d| !d.is_one() && allowed.iter().any(|a| &BigInt::from(*a) == d))
}
