// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! CSV, JSONL and text renderings. Output is byte-stable: fixed field order,
//! LF line endings, no timestamps.

use std::io::Write;

use anyhow::Result;
use petersen_core::epsilon::{ConjectureEntry, ConjectureReport};
use petersen_core::DiameterResult;
use serde::Serialize;

use crate::sweep::SweepRow;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Csv,
    Jsonl,
}

impl Format {
    pub fn extension(&self) -> &'static str {
        match self {
            Format::Text => "txt",
            Format::Csv => "csv",
            Format::Jsonl => "jsonl",
        }
    }
}

fn csv_writer<W: Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out)
}

fn write_csv<W: Write, T: Serialize>(out: W, items: &[T]) -> Result<()> {
    let mut w = csv_writer(out);
    for item in items {
        w.serialize(item)?;
    }
    w.flush()?;
    Ok(())
}

fn write_jsonl<W: Write, T: Serialize>(mut out: W, items: &[T]) -> Result<()> {
    for item in items {
        serde_json::to_writer(&mut out, item)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

pub fn sweep_csv<W: Write>(out: W, rows: &[SweepRow]) -> Result<()> {
    if rows.is_empty() {
        // serde-driven headers only appear with the first record
        let mut out = out;
        writeln!(out, "{}", crate::sweep::CSV_HEADER)?;
        return Ok(());
    }
    write_csv(out, rows)
}

pub fn sweep_jsonl<W: Write>(out: W, rows: &[SweepRow]) -> Result<()> {
    write_jsonl(out, rows)
}

pub fn sweep_text<W: Write>(mut out: W, rows: &[SweepRow]) -> Result<()> {
    for r in rows {
        writeln!(
            out,
            "GPG({}, {}): D = {} = {} + {} [{}] bound {}{}",
            r.n,
            r.s,
            r.d_gpg,
            r.d_circulant,
            r.epsilon,
            r.method,
            r.upper_bound,
            if r.verified { " verified" } else { "" }
        )?;
    }
    Ok(())
}

pub fn diameter_text<W: Write>(mut out: W, r: &DiameterResult) -> Result<()> {
    let d = &r.case.derived;
    writeln!(out, "n={}", r.n)?;
    writeln!(out, "s={}", r.s)?;
    writeln!(out, "lambda={}", d.lambda)?;
    writeln!(out, "gamma={}", d.gamma)?;
    if let (Some(a), Some(b)) = (d.a, d.b) {
        writeln!(out, "a={a}")?;
        writeln!(out, "b={b}")?;
    }
    writeln!(out, "d_circulant={}", r.d_circulant)?;
    writeln!(out, "d_gpg={}", r.d_gpg)?;
    writeln!(out, "epsilon={}", r.epsilon)?;
    writeln!(out, "epsilon_basis={:?}", r.epsilon_basis)?;
    writeln!(out, "method={}", r.method())?;
    match r.closed_form {
        Some(v) => writeln!(out, "closed_form={v}")?,
        None => writeln!(out, "closed_form=none")?,
    }
    let (a, b) = r.circulant_witness.endpoints;
    writeln!(out, "circulant_witness={a},{b}")?;
    writeln!(out, "upper_bound={}", r.upper_bound)?;
    Ok(())
}

#[derive(Serialize)]
struct ConjectureRow {
    section: &'static str,
    n: u64,
    s: u64,
    observed_epsilon: u8,
    predicted_epsilon: u8,
    matches_prediction: bool,
}

fn conjecture_rows(report: &ConjectureReport) -> Vec<ConjectureRow> {
    let sections: [(&'static str, &[ConjectureEntry]); 4] = [
        ("epsilon_one", &report.epsilon_one),
        ("known_exception", &report.known_exceptions),
        ("small_n_rule_violation", &report.small_n_rule_violations),
        ("discrepancy", &report.discrepancies),
    ];
    sections
        .into_iter()
        .flat_map(|(section, entries)| {
            entries.iter().map(move |e| ConjectureRow {
                section,
                n: e.n,
                s: e.s,
                observed_epsilon: e.observed.into(),
                predicted_epsilon: e.predicted.into(),
                matches_prediction: e.observed == e.predicted,
            })
        })
        .collect()
}

pub fn conjecture_csv<W: Write>(out: W, report: &ConjectureReport) -> Result<()> {
    write_csv(out, &conjecture_rows(report))
}

pub fn conjecture_jsonl<W: Write>(out: W, report: &ConjectureReport) -> Result<()> {
    write_jsonl(out, &conjecture_rows(report))
}

pub fn conjecture_text<W: Write>(mut out: W, report: &ConjectureReport) -> Result<()> {
    let status = |e: &ConjectureEntry| match (e.n <= 7, e.observed == e.predicted) {
        (true, _) => "small-ring exception",
        (false, true) => "match",
        (false, false) => "MISMATCH",
    };
    writeln!(
        out,
        "conjecture scan: 5 <= n <= {}, {} instances",
        report.n_max, report.instances
    )?;
    writeln!(out)?;
    writeln!(
        out,
        "instances with epsilon = 1 ({}):",
        report.epsilon_one.len()
    )?;
    writeln!(
        out,
        "  {:>5} {:>5} {:>9} {:>9}  status",
        "n", "s", "observed", "predicted"
    )?;
    for e in &report.epsilon_one {
        writeln!(
            out,
            "  {:>5} {:>5} {:>9} {:>9}  {}",
            e.n,
            e.s,
            e.observed.value(),
            e.predicted.value(),
            status(e)
        )?;
    }
    writeln!(out)?;
    writeln!(
        out,
        "small-ring exceptions, n in 5..=7 with epsilon = 1 ({}):",
        report.known_exceptions.len()
    )?;
    for e in &report.known_exceptions {
        writeln!(out, "  ({}, {})", e.n, e.s)?;
    }
    writeln!(
        out,
        "small rings with epsilon = 2 ({}):",
        report.small_n_rule_violations.len()
    )?;
    for e in &report.small_n_rule_violations {
        writeln!(out, "  ({}, {})", e.n, e.s)?;
    }
    writeln!(out)?;
    writeln!(
        out,
        "discrepancies for n >= 8 ({}):",
        report.discrepancies.len()
    )?;
    for e in &report.discrepancies {
        writeln!(
            out,
            "  ({}, {}) observed {} predicted {}",
            e.n, e.s, e.observed, e.predicted
        )?;
    }
    Ok(())
}
