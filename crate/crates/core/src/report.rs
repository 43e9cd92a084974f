//! Rendering of search results: text table, CSV, JSON and OEIS b-file.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::powersum::ZeroPowerConvention;
use crate::radix::{from_digits, Base, DigitVec};
use crate::search::{render_terms, verify, EngineKind, Hit};
use crate::Nat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub base: Base,
    pub convention: ZeroPowerConvention,
    /// Always `Linear` or `Multiset`.
    pub engine: EngineKind,
    pub bound: Nat,
    /// Strictly ascending.
    pub hits: Vec<Hit>,
    pub elapsed_ms: u64,
    pub candidates_examined: u64,
    pub notes: Vec<String>,
}

impl SearchReport {
    pub fn values(&self) -> Vec<Nat> {
        self.hits.iter().map(|h| h.value.clone()).collect()
    }

    /// `"1, 3435"`
    pub fn values_cell(&self) -> String {
        join(self.hits.iter().map(|h| h.value.to_string()))
    }

    /// `"[1]_10, [3,4,3,5]_10"`
    pub fn representations_cell(&self) -> String {
        join(self.hits.iter().map(|h| h.representation.to_string()))
    }
}

fn join(items: impl Iterator<Item = String>) -> String {
    items.collect::<Vec<_>>().join(", ")
}

const TABLE_HEADER: [&str; 3] = ["Base", "Munchausen Numbers", "Representation"];

/// Three-column table with one row per report.
pub fn render_table(reports: &[SearchReport]) -> String {
    let rows: Vec<[String; 3]> = reports
        .iter()
        .map(|r| {
            [
                r.base.to_string(),
                r.values_cell(),
                r.representations_cell(),
            ]
        })
        .collect();
    let mut widths = TABLE_HEADER.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let line = |out: &mut String, cells: [&str; 3]| {
        let text = format!(
            "{:<w0$} | {:<w1$} | {}",
            cells[0],
            cells[1],
            cells[2],
            w0 = widths[0],
            w1 = widths[1]
        );
        out.push_str(text.trim_end());
        out.push('\n');
    };
    line(&mut out, TABLE_HEADER);
    out.push_str(&format!(
        "{}-+-{}-+-{}\n",
        "-".repeat(widths[0]),
        "-".repeat(widths[1]),
        "-".repeat(widths[2])
    ));
    for row in &rows {
        line(&mut out, [&row[0], &row[1], &row[2]]);
    }
    out
}

/// Human-readable summary of one search.
pub fn render_text(report: &SearchReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "base:                {}", report.base);
    let _ = writeln!(out, "convention:          {}", report.convention.describe());
    let _ = writeln!(out, "engine:              {}", report.engine);
    let _ = writeln!(out, "search interval:     [1, {}]", report.bound);
    let _ = writeln!(out, "candidates examined: {}", report.candidates_examined);
    let _ = writeln!(out, "elapsed:             {} ms", report.elapsed_ms);
    let _ = writeln!(out, "hits:                {}", report.hits.len());
    for hit in &report.hits {
        let _ = writeln!(
            out,
            "  {} = {} = {}",
            hit.value,
            hit.representation,
            render_terms(&hit.terms)
        );
    }
    for note in &report.notes {
        let _ = writeln!(out, "note: {note}");
    }
    out
}

/// OEIS b-file lines `k a(k)`, indexed from 1.
pub fn render_bfile(report: &SearchReport) -> String {
    report
        .hits
        .iter()
        .enumerate()
        .map(|(i, h)| format!("{} {}\n", i + 1, h.value))
        .collect()
}

/// One row per hit: base, value, representation, convention.
pub fn render_csv(reports: &[SearchReport]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(["base", "value", "representation", "convention"])
        .expect("writing to memory");
    for report in reports {
        for hit in &report.hits {
            writer
                .write_record([
                    report.base.to_string(),
                    hit.value.to_string(),
                    hit.representation.to_string(),
                    report.convention.to_string(),
                ])
                .expect("writing to memory");
        }
    }
    String::from_utf8(writer.into_inner().expect("flushing to memory"))
        .expect("csv output is utf-8")
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonHit {
    value: String,
    digits: Vec<u8>,
    terms: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonReport {
    base: u32,
    convention: ZeroPowerConvention,
    engine: EngineKind,
    bound: String,
    hits: Vec<JsonHit>,
    elapsed_ms: u64,
    candidates_examined: u64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    notes: Vec<String>,
}

impl From<&SearchReport> for JsonReport {
    fn from(r: &SearchReport) -> Self {
        JsonReport {
            base: r.base.get(),
            convention: r.convention,
            engine: r.engine,
            bound: r.bound.to_string(),
            hits: r
                .hits
                .iter()
                .map(|h| JsonHit {
                    value: h.value.to_string(),
                    digits: h.representation.digits().to_vec(),
                    terms: h.terms.iter().map(|(_, t)| t.to_string()).collect(),
                })
                .collect(),
            elapsed_ms: r.elapsed_ms,
            candidates_examined: r.candidates_examined,
            notes: r.notes.clone(),
        }
    }
}

/// Big values (bound, hits, terms) are decimal strings.
pub fn render_json(report: &SearchReport) -> String {
    serde_json::to_string_pretty(&JsonReport::from(report)).expect("report serializes")
}

/// Array form for several reports.
pub fn render_json_many(reports: &[SearchReport]) -> String {
    let all: Vec<JsonReport> = reports.iter().map(JsonReport::from).collect();
    serde_json::to_string_pretty(&all).expect("reports serialize")
}

fn parse_nat(text: &str) -> Result<Nat> {
    text.parse()
        .map_err(|_| Error::Parse(format!("not a decimal integer: {text:?}")))
}

/// Parses [`render_json`] output, checking every hit against its digits and terms.
pub fn parse_json(text: &str) -> Result<SearchReport> {
    let raw: JsonReport = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let base = Base::new(raw.base)?;
    let hits = raw
        .hits
        .into_iter()
        .map(|h| {
            let value = parse_nat(&h.value)?;
            let representation = DigitVec::new(h.digits, base)?;
            if from_digits::<Nat>(&representation) != value {
                return Err(Error::Parse(format!("digits do not spell {value}")));
            }
            let terms = representation
                .digits()
                .iter()
                .zip(&h.terms)
                .map(|(&d, t)| Ok((d, parse_nat(t)?)))
                .collect::<Result<Vec<_>>>()?;
            if terms.len() != representation.len() {
                return Err(Error::Parse(format!("term count mismatch for {value}")));
            }
            Ok(Hit {
                value,
                representation,
                terms,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SearchReport {
        base,
        convention: raw.convention,
        engine: raw.engine,
        bound: parse_nat(&raw.bound)?,
        hits,
        elapsed_ms: raw.elapsed_ms,
        candidates_examined: raw.candidates_examined,
        notes: raw.notes,
    })
}

/// True when every hit is ascending and actually a Munchausen number.
pub fn reverify(report: &SearchReport) -> bool {
    report.hits.windows(2).all(|w| w[0].value < w[1].value)
        && report.hits.iter().all(|h| {
            let v = verify(&h.value, report.base, report.convention);
            v.is_munchausen() && v.terms == h.terms
        })
}
