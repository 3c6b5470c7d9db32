//! JSON Lines records and the CSV verdict report.

use std::fs::OpenOptions;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use loewy_core::{Analysis, BlockReport, Verdict};
use serde::{Deserialize, Serialize};

use crate::error::CliResult;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub claim: String,
    pub instance: String,
    pub status: String,
    pub ll: u64,
    pub lower: Option<u64>,
    pub lower_strict: bool,
    pub upper: Option<u64>,
    pub allowed: Vec<u64>,
    pub bound: String,
    pub tight: bool,
    pub note: String,
}

impl From<&Verdict> for VerdictRecord {
    fn from(v: &Verdict) -> Self {
        VerdictRecord {
            claim: v.claim.tag().to_string(),
            instance: v.instance.clone(),
            status: v.status.as_str().to_string(),
            ll: v.ll,
            lower: v.lower.map(|b| b.value),
            lower_strict: v.lower.is_some_and(|b| b.strict),
            upper: v.upper,
            allowed: v.allowed.clone(),
            bound: bound_column(v),
            tight: v.tight,
            note: v.note.clone(),
        }
    }
}

/// One block of one analysed group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub group: String,
    pub order: usize,
    pub p: u32,
    pub m: u32,
    pub block: usize,
    pub dim: usize,
    pub defect: u32,
    /// `2^2x2` style for abelian defect groups, `1` when trivial.
    pub shape: String,
    pub principal: bool,
    pub ll: usize,
    pub layers: Vec<usize>,
    pub e: usize,
    pub verdicts: Vec<VerdictRecord>,
    pub ms: u64,
}

pub fn shape_string(report: &BlockReport) -> String {
    match &report.block.shape {
        Some(s) => s.to_string(),
        None => format!("nonabelian({})", report.block.defect_group.order()),
    }
}

impl ResultRecord {
    pub fn new(group: &str, a: &Analysis, report: &BlockReport, verdicts: &[Verdict], ms: u64) -> Self {
        ResultRecord {
            group: group.to_string(),
            order: a.group().order(),
            p: a.p,
            m: a.field().degree(),
            block: report.block.index,
            dim: report.block.dim,
            defect: report.block.defect,
            shape: shape_string(report),
            principal: report.block.principal,
            ll: report.profile.ll,
            layers: report.profile.layers.clone(),
            e: report.profile.simple_count,
            verdicts: verdicts.iter().map(VerdictRecord::from).collect(),
            ms,
        }
    }
}

pub fn append_jsonl(path: &Path, records: &[ResultRecord]) -> CliResult<()> {
    let mut file = OpenOptions::new().create(true).append(true).open(path)?;
    let mut buf = Vec::new();
    for r in records {
        serde_json::to_writer(&mut buf, r)?;
        buf.push(b'\n');
    }
    file.write_all(&buf)?;
    Ok(())
}

pub fn read_jsonl(path: &Path) -> CliResult<Vec<ResultRecord>> {
    let reader = BufReader::new(std::fs::File::open(path)?);
    let mut out = Vec::new();
    for line in reader.lines() {
        let line = line?;
        if !line.trim().is_empty() {
            out.push(serde_json::from_str(&line)?);
        }
    }
    Ok(out)
}

/// The `bound` column: the inequality, or the note for checks without one.
fn bound_column(v: &Verdict) -> String {
    let b = v.bound_string();
    if b.is_empty() {
        v.note.clone()
    } else {
        b
    }
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ReportRow {
    pub claim: String,
    pub instance: String,
    pub p: u32,
    pub ll: u64,
    pub bound: String,
    pub lower_ok: Option<bool>,
    pub upper_ok: Option<bool>,
    pub tight: bool,
    pub status: String,
}

impl From<&Verdict> for ReportRow {
    fn from(v: &Verdict) -> Self {
        ReportRow {
            claim: v.claim.tag().to_string(),
            instance: v.instance.clone(),
            p: v.p,
            ll: v.ll,
            bound: bound_column(v),
            lower_ok: v.lower_ok(),
            upper_ok: v.upper_ok(),
            tight: v.tight,
            status: v.status.as_str().to_string(),
        }
    }
}

pub const REPORT_HEADER: [&str; 9] = ["claim", "instance", "p", "ll", "bound", "lower_ok", "upper_ok", "tight", "status"];

/// Writes the CSV report; the header is written even when there are no verdicts.
pub fn write_report(path: &Path, verdicts: &[Verdict]) -> CliResult<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_path(path)?;
    w.write_record(REPORT_HEADER)?;
    for v in verdicts {
        w.serialize(ReportRow::from(v))?;
    }
    w.flush()?;
    Ok(())
}
