//! Deterministic text, JSON and CSV serialization of results.
//!
//! Numbers are written as strings in the six-significant-digit
//! `<mantissa>e<exponent>` format. JSON object keys are sorted.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::{Map, Value};

use crate::decoherence::DecoherenceReport;
use crate::ledger::LedgerResult;
use crate::numerics::{fmt_real, XScalar};
use crate::sweep::SweepResult;

/// Exact CSV header for sweep output.
pub const SWEEP_CSV_HEADER: &str = "log10_no,lv_m,rho_kg_m3,dex_vs_observed,in_star_box";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq)]
pub enum FieldValue {
    Number(String),
    Bool(bool),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Field {
    pub key: &'static str,
    pub value: FieldValue,
    pub unit: &'static str,
}

impl Field {
    pub fn scalar(key: &'static str, value: XScalar, unit: &'static str) -> Self {
        Self {
            key,
            value: FieldValue::Number(value.to_string()),
            unit,
        }
    }

    pub fn real(key: &'static str, value: f64, unit: &'static str) -> Self {
        Self {
            key,
            value: FieldValue::Number(fmt_real(value)),
            unit,
        }
    }

    pub fn flag(key: &'static str, value: bool) -> Self {
        Self {
            key,
            value: FieldValue::Bool(value),
            unit: "",
        }
    }

    fn text(&self) -> String {
        match &self.value {
            FieldValue::Number(s) => s.clone(),
            FieldValue::Bool(b) => b.to_string(),
        }
    }

    fn json(&self) -> Value {
        match &self.value {
            FieldValue::Number(s) => Value::String(s.clone()),
            FieldValue::Bool(b) => Value::Bool(*b),
        }
    }
}

/// Anything the CLI prints: a single record or a table of records sharing
/// the same keys.
#[derive(Debug, Clone, PartialEq)]
pub enum Output {
    Record(Vec<Field>),
    Table(Vec<Vec<Field>>),
}

impl From<&SweepResult> for Output {
    fn from(result: &SweepResult) -> Self {
        Output::Table(
            result
                .rows
                .iter()
                .map(|row| {
                    vec![
                        Field::real("log10_no", row.log10_no, ""),
                        Field::real("lv_m", row.lv_m, "m"),
                        Field::scalar("rho_kg_m3", row.rho, "kg/m^3"),
                        Field::real("dex_vs_observed", row.dex_vs_observed, "dex"),
                        Field::flag("in_star_box", row.in_star_box),
                    ]
                })
                .collect(),
        )
    }
}

impl From<&DecoherenceReport> for Output {
    fn from(report: &DecoherenceReport) -> Self {
        Output::Record(vec![
            Field::scalar("scattering_l", report.scattering_l, "m^-2 s^-1"),
            Field::scalar("tau_s", report.tau, "s"),
            Field::real("scale_m", report.scale_x, "m"),
            Field::flag("decohered", report.decohered_within_age),
        ])
    }
}

impl From<&LedgerResult> for Output {
    fn from(result: &LedgerResult) -> Self {
        Output::Record(ledger_fields(result))
    }
}

pub fn ledger_fields(result: &LedgerResult) -> Vec<Field> {
    vec![
        Field::scalar("n_v", result.voxel_count_nv, "voxels"),
        Field::scalar("n_b", result.bit_budget_nb, "bits"),
        Field::scalar("e_b_joule", result.bit_energy_eb, "J"),
        Field::scalar("e_t_joule", result.total_energy_et, "J"),
        Field::scalar("rho_kg_m3", result.density_rho, "kg/m^3"),
    ]
}

pub fn emit(output: &Output, format: Format) -> String {
    match (output, format) {
        (Output::Record(fields), Format::Text) => text_record(fields),
        (Output::Table(rows), Format::Text) => text_table(rows),
        (Output::Record(fields), Format::Json) => json_string(&json_object(fields)),
        (Output::Table(rows), Format::Json) => {
            json_string(&Value::Array(rows.iter().map(|r| json_object(r)).collect()))
        }
        (Output::Record(fields), Format::Csv) => csv(std::slice::from_ref(fields)),
        (Output::Table(rows), Format::Csv) => csv(rows),
    }
}

fn text_record(fields: &[Field]) -> String {
    let mut out = String::new();
    for f in fields {
        let _ = match f.unit {
            "" => writeln!(out, "{}: {}", f.key, f.text()),
            unit => writeln!(out, "{}: {} {}", f.key, f.text(), unit),
        };
    }
    out
}

fn text_table(rows: &[Vec<Field>]) -> String {
    let Some(first) = rows.first() else {
        return String::new();
    };
    let headers: Vec<String> = first
        .iter()
        .map(|f| match f.unit {
            "" => f.key.to_string(),
            unit => format!("{} [{}]", f.key, unit),
        })
        .collect();
    let cells: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(Field::text).collect()).collect();
    let widths: Vec<usize> = (0..headers.len())
        .map(|i| {
            cells
                .iter()
                .map(|r| r[i].len())
                .chain([headers[i].len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |items: &[String]| {
        let padded: Vec<String> = items
            .iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s:>w$}"))
            .collect();
        padded.join("  ")
    };
    let mut out = line(&headers);
    out.push('\n');
    for r in &cells {
        out.push_str(&line(r));
        out.push('\n');
    }
    out
}

fn json_object(fields: &[Field]) -> Value {
    // serde_json's default map is ordered by key.
    Value::Object(fields.iter().map(|f| (f.key.to_string(), f.json())).collect::<Map<_, _>>())
}

fn json_string(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("in-memory JSON serialization");
    s.push('\n');
    s
}

fn csv(rows: &[Vec<Field>]) -> String {
    let Some(first) = rows.first() else {
        return String::new();
    };
    let mut out = first.iter().map(|f| f.key).collect::<Vec<_>>().join(",");
    out.push('\n');
    for r in rows {
        out.push_str(&r.iter().map(Field::text).collect::<Vec<_>>().join(","));
        out.push('\n');
    }
    out
}
