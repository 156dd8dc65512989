//! Output emission and CSV quoting (RFC 4180).

use crate::config::{Format, RunConfig};
use crate::Failure;

/// Quote a CSV field when it contains a comma, quote or newline.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Write the accumulated data stream in one shot (deterministic bytes).
pub fn emit(config: &RunConfig, body: &str) -> Result<(), Failure> {
    crate::write_stream(config.output.as_deref(), body)
}

/// Render a report set in the configured format.
pub fn render_report_set(set: &wittsig::report::ReportSet, format: Format) -> String {
    match format {
        Format::Json => format!("{:#}\n", serde_json::to_value(set).expect("serializable")),
        Format::Csv => {
            let mut out = String::from("claim,parameters,expected,computed,status\r\n");
            for c in &set.checks {
                out.push_str(&format!(
                    "{},{},{},{},{}\r\n",
                    csv_field(&c.claim),
                    csv_field(&c.parameters.to_string()),
                    csv_field(&c.expected.to_string()),
                    csv_field(&c.computed.to_string()),
                    if c.passed() { "ok" } else { "fail" },
                ));
            }
            out
        }
        Format::Text => {
            let mut out = format!(
                "claim {}: {}\n",
                set.claim,
                if set.passed() { "ok" } else { "FAIL" }
            );
            for c in &set.checks {
                out.push_str(&format!(
                    "  {} expected {} computed {} [{}]\n",
                    c.parameters,
                    c.expected,
                    c.computed,
                    if c.passed() { "ok" } else { "FAIL" }
                ));
            }
            out
        }
    }
}
