//! JSON and plain-text renderings of certificate reports.

use serde_json::{json, Map, Value};

use quotsing_core::report::{CertificateReport, CheckRecord, Witness};

/// Schema version of the JSON report.
pub const REPORT_VERSION: u64 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
}

impl Format {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Json => "json",
            Self::Text => "text",
        }
    }
}

/// What produced a report; echoed into its `config` block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub n: usize,
    pub i_max: usize,
    pub checks: Vec<String>,
    pub out: Option<std::path::PathBuf>,
    pub format: Format,
    pub seed: u64,
}

pub fn witness_to_json(w: &Witness) -> Value {
    match w {
        Witness::Null => Value::Null,
        Witness::Bool(b) => Value::Bool(*b),
        Witness::Int(i) => json!(i),
        Witness::Text(s) => Value::String(s.clone()),
        Witness::List(v) => Value::Array(v.iter().map(witness_to_json).collect()),
        Witness::Record(fields) => {
            Value::Object(fields.iter().map(|(k, v)| (k.clone(), witness_to_json(v))).collect::<Map<_, _>>())
        }
    }
}

pub fn check_to_json(c: &CheckRecord) -> Value {
    json!({
        "name": c.name,
        "status": c.status.as_str(),
        "citation": c.citation,
        "witness": witness_to_json(&c.witness),
        "millis": c.millis,
    })
}

pub fn report_to_json(report: &CertificateReport, config: &RunConfig) -> Value {
    json!({
        "version": REPORT_VERSION,
        "config": {
            "n": config.n,
            "i_max": config.i_max,
            "checks": config.checks,
            "format": config.format.as_str(),
            "seed": config.seed,
        },
        "checks": report.checks.iter().map(check_to_json).collect::<Vec<_>>(),
    })
}

/// One line per check: status, name, timing, citation and compact witness.
pub fn report_to_text(report: &CertificateReport) -> String {
    let mut out = String::new();
    for c in &report.checks {
        out.push_str(&format!(
            "{:<8} {:<24} {:>6}ms  {}  {}\n",
            c.status.as_str(),
            c.name,
            c.millis,
            c.citation,
            witness_to_json(&c.witness)
        ));
    }
    out
}

pub fn render(report: &CertificateReport, config: &RunConfig) -> String {
    match config.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report_to_json(report, config)).expect("plain values");
            s.push('\n');
            s
        }
        Format::Text => report_to_text(report),
    }
}
