use std::io::Write;

use anyhow::Result;
use serde::Serialize;
use serde_json::Value;
use zetalab_core::moments::MomentEstimate;

use crate::args::Format;

pub const ESTIMATE_COLUMNS: [&str; 8] = [
    "kind",
    "T",
    "theta",
    "value_re",
    "value_im",
    "main_term",
    "ratio",
    "quad_error",
];

/// A command's result in every output format.
pub struct Report {
    pub json: Value,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub text: String,
}

fn opt(x: Option<f64>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

pub fn estimate_row(e: &MomentEstimate) -> Vec<String> {
    vec![
        e.kind.to_string(),
        e.t.to_string(),
        opt(e.theta),
        e.value_re.to_string(),
        e.value_im.to_string(),
        opt(e.main_term),
        opt(e.ratio),
        e.quad_error.to_string(),
    ]
}

pub fn estimate_text(e: &MomentEstimate) -> String {
    let mut s = format!("{} T={}", e.kind, e.t);
    if let Some(th) = e.theta {
        s += &format!(" theta={th}");
    }
    s += &format!(" value={:.12e}", e.value_re);
    if e.value_im != 0.0 {
        s += &format!("{:+.12e}i", e.value_im);
    }
    if let Some(m) = e.main_term {
        s += &format!(" main_term={m:.12e}");
    }
    if let Some(r) = e.ratio {
        s += &format!(" ratio={r:.6}");
    }
    s += &format!(" quad_error={:.3e}", e.quad_error);
    if let Some(p) = e.proven {
        s += &format!(" proven={p}");
    }
    if let Some(d) = e.diagnostic {
        s += &format!(" diagnostic={d:.6e}");
    }
    s
}

impl Report {
    pub fn estimates(json: Value, estimates: &[MomentEstimate], extra_text: &str) -> Self {
        let mut text: String = estimates.iter().map(|e| estimate_text(e) + "\n").collect();
        text += extra_text;
        Report {
            json,
            header: ESTIMATE_COLUMNS.to_vec(),
            rows: estimates.iter().map(estimate_row).collect(),
            text,
        }
    }

    pub fn single(e: &MomentEstimate) -> Result<Self> {
        Ok(Self::estimates(
            serde_json::to_value(e)?,
            std::slice::from_ref(e),
            "",
        ))
    }

    /// A two-column `quantity,value` table.
    pub fn quantities(json: impl Serialize, pairs: Vec<(String, String)>) -> Result<Self> {
        let text = pairs.iter().map(|(k, v)| format!("{k}: {v}\n")).collect();
        Ok(Report {
            json: serde_json::to_value(json)?,
            header: vec!["quantity", "value"],
            rows: pairs.into_iter().map(|(k, v)| vec![k, v]).collect(),
            text,
        })
    }

    pub fn write<W: Write>(&self, format: Format, mut out: W) -> Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut out, &self.json)?;
                writeln!(out)?;
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.header)?;
                for row in &self.rows {
                    w.write_record(row)?;
                }
                w.flush()?;
            }
            Format::Text => out.write_all(self.text.as_bytes())?,
        }
        Ok(())
    }
}
