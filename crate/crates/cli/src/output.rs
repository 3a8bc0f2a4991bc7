//! One result rendered as text, CSV or JSON.

use clap::ValueEnum;
use serde_json::Value;

pub const CONVENTION: &str = "nonzero Ext(∇(λ), ∇(μ)) requires μ ≤ λ in the dominance order";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Default)]
pub struct Report {
    pub json: Value,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub text: Vec<String>,
    /// Prefix text and CSV output with the dominance convention.
    pub convention: bool,
    /// Some requested value could not be decided.
    pub undecided: bool,
}

impl Report {
    pub fn new(json: Value) -> Self {
        Self { json, ..Default::default() }
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::Json => {
                let mut json = self.json.clone();
                if self.convention {
                    if let Value::Object(map) = &mut json {
                        map.insert("convention".into(), CONVENTION.into());
                    }
                }
                out.push_str(&serde_json::to_string_pretty(&json).expect("values serialize"));
                out.push('\n');
            }
            Format::Csv => {
                if self.convention {
                    out.push_str(&format!("# {CONVENTION}\n"));
                }
                if !self.header.is_empty() {
                    out.push_str(&self.header.join(","));
                    out.push('\n');
                }
                for row in &self.rows {
                    let cells: Vec<String> = row.iter().map(|c| csv_cell(c)).collect();
                    out.push_str(&cells.join(","));
                    out.push('\n');
                }
            }
            Format::Text => {
                if self.convention {
                    out.push_str(&format!("# {CONVENTION}\n"));
                }
                for line in &self.text {
                    out.push_str(line);
                    out.push('\n');
                }
            }
        }
        out
    }
}

fn csv_cell(c: &str) -> String {
    if c.contains([',', '"', '\n']) {
        format!("\"{}\"", c.replace('"', "\"\""))
    } else {
        c.to_string()
    }
}

/// `"3,0"` for a weight or partition given as its entries.
pub fn entries<T: ToString>(v: &[T]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}
