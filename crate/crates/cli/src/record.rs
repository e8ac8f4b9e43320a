//! Wire records and the three output formats.

use samelson_core::rational::fraction_string;
use samelson_core::OrderReport;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub m: u32,
    pub n: u32,
    /// Exact decimal; orders overflow 64 bits quickly.
    pub order: String,
    pub closed_form: String,
    #[serde(rename = "match")]
    pub matched: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<GeneratorRecord>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorRecord {
    pub k: u32,
    /// `"p/q"`, or `"0"`.
    pub chern_coeff: String,
    pub phi: String,
    pub sigma: u32,
    pub psi: String,
}

impl OutputRecord {
    pub fn from_report(report: &OrderReport, verbose: bool) -> Self {
        let generators = verbose.then(|| {
            report
                .generators
                .iter()
                .map(|g| GeneratorRecord {
                    k: g.k,
                    chern_coeff: fraction_string(&g.chern_coeff),
                    phi: g.phi_value.to_string(),
                    sigma: g.sigma,
                    psi: g.psi_value.to_string(),
                })
                .collect()
        });
        Self {
            m: report.params.m(),
            n: report.params.n(),
            order: report.computed_order.to_string(),
            closed_form: report.closed_form_order.to_string(),
            matched: report.is_match(),
            generators,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

/// Aligned table, with a per-generator block under each row that carries
/// generators.
pub fn render_text(records: &[OutputRecord]) -> String {
    let header = ["m", "n", "order", "closed_form", "match"];
    let rows: Vec<[String; 5]> = records
        .iter()
        .map(|r| {
            [
                r.m.to_string(),
                r.n.to_string(),
                r.order.clone(),
                r.closed_form.clone(),
                r.matched.to_string(),
            ]
        })
        .collect();
    let mut widths = header.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }

    let mut out = String::new();
    push_row(&mut out, &header.map(String::from), &widths);
    for (row, record) in rows.iter().zip(records) {
        push_row(&mut out, row, &widths);
        if let Some(generators) = &record.generators {
            out.push_str(&render_generators(generators));
        }
    }
    out
}

fn push_row(out: &mut String, cells: &[String; 5], widths: &[usize; 5]) {
    let line = cells
        .iter()
        .zip(widths)
        .map(|(c, w)| format!("{c:>w$}"))
        .collect::<Vec<_>>()
        .join("  ");
    out.push_str(&line);
    out.push('\n');
}

fn render_generators(generators: &[GeneratorRecord]) -> String {
    let header = ["k", "chern_coeff", "phi", "sigma", "psi"];
    let rows: Vec<[String; 5]> = generators
        .iter()
        .map(|g| {
            [
                g.k.to_string(),
                g.chern_coeff.clone(),
                g.phi.clone(),
                g.sigma.to_string(),
                g.psi.clone(),
            ]
        })
        .collect();
    let mut widths = header.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    for row in std::iter::once(header.map(String::from)).chain(rows) {
        out.push_str("    ");
        push_row(&mut out, &row, &widths);
    }
    out
}

/// Header `m,n,order,closed_form,match`; generator breakdowns are not
/// representable here and are omitted.
pub fn render_csv(records: &[OutputRecord]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(["m", "n", "order", "closed_form", "match"])
        .expect("writing to memory");
    for r in records {
        writer
            .write_record([
                r.m.to_string(),
                r.n.to_string(),
                r.order.clone(),
                r.closed_form.clone(),
                r.matched.to_string(),
            ])
            .expect("writing to memory");
    }
    String::from_utf8(writer.into_inner().expect("flush to memory")).expect("utf-8 csv")
}

pub fn render_json_array(records: &[OutputRecord]) -> String {
    let mut out = serde_json::to_string(records).expect("records serialize");
    out.push('\n');
    out
}

pub fn render_json_object(record: &OutputRecord) -> String {
    let mut out = serde_json::to_string(record).expect("record serializes");
    out.push('\n');
    out
}

pub fn render(records: &[OutputRecord], format: Format) -> String {
    match format {
        Format::Text => render_text(records),
        Format::Csv => render_csv(records),
        Format::Json => render_json_array(records),
    }
}
