//! Run configuration: precision schedule, conductor guard, output
//! format. Defaults can come from a JSON file named by `WITTSIG_CONFIG`;
//! command-line flags override it.

use serde::Deserialize;
use wittsig::exact::Precision;

use crate::Failure;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Default, Deserialize)]
struct FileConfig {
    precision_start_bits: Option<u32>,
    precision_cap_bits: Option<u32>,
    conductor_guard: Option<u64>,
    format: Option<String>,
}

pub struct RunConfig {
    pub precision: Precision,
    pub conductor_guard: u64,
    pub format: Format,
    pub output: Option<std::path::PathBuf>,
}

fn parse_format(s: &str) -> Result<Format, Failure> {
    match s {
        "json" => Ok(Format::Json),
        "csv" => Ok(Format::Csv),
        "text" => Ok(Format::Text),
        other => Err(Failure::usage(format!("unknown format {other:?}"))),
    }
}

impl RunConfig {
    pub fn resolve(
        format: Option<&str>,
        output: Option<std::path::PathBuf>,
        precision_start: Option<u32>,
        precision_cap: Option<u32>,
        conductor_guard: Option<u64>,
    ) -> Result<RunConfig, Failure> {
        let file: FileConfig = match std::env::var_os("WITTSIG_CONFIG") {
            Some(path) => {
                let raw = std::fs::read_to_string(&path).map_err(|e| {
                    Failure::usage(format!("config {}: {e}", path.to_string_lossy()))
                })?;
                serde_json::from_str(&raw).map_err(|e| {
                    Failure::usage(format!("config {}: {e}", path.to_string_lossy()))
                })?
            }
            None => FileConfig::default(),
        };
        let start = precision_start.or(file.precision_start_bits).unwrap_or(128);
        let cap = precision_cap.or(file.precision_cap_bits).unwrap_or(16384);
        if start > cap {
            return Err(Failure::usage(format!(
                "precision start {start} exceeds cap {cap}"
            )));
        }
        let guard = conductor_guard
            .or(file.conductor_guard)
            .unwrap_or(1_000_000);
        if guard == 0 {
            return Err(Failure::usage("conductor guard must be positive"));
        }
        let format = match format {
            Some(s) => parse_format(s)?,
            None => match file.format.as_deref() {
                Some(s) => parse_format(s)?,
                None => Format::Text,
            },
        };
        Ok(RunConfig {
            precision: Precision::new(start, cap),
            conductor_guard: guard,
            format,
            output,
        })
    }

    /// Refuse work whose cyclotomic conductor exceeds the guard.
    pub fn check_conductor(&self, needed: u64) -> Result<(), Failure> {
        if needed > self.conductor_guard {
            return Err(Failure::usage(format!(
                "conductor guard exceeded: the request needs conductor {needed}, guard is {}",
                self.conductor_guard
            )));
        }
        Ok(())
    }
}
