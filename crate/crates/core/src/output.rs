//! Text renderings of a sequence prefix: plain, OEIS b-file, CSV and JSON.

use std::fmt::Write as _;
use std::str::FromStr;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::BigInt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    /// `index value` lines, OEIS b-file style.
    Bfile,
    Csv,
    /// Array of `{"n": index, "value": "decimal"}`.
    Json,
    /// All values on one space-separated line.
    Plain,
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    n: u64,
    value: String,
}

/// Renders `values`, whose first entry has index `offset`. `header` becomes
/// a `#` comment line in b-file output and is ignored by other formats.
pub fn render(values: &[BigInt], offset: u64, format: OutputFormat, header: &str) -> String {
    let indexed = values.iter().enumerate().map(|(i, v)| (offset + i as u64, v));
    let mut out = String::new();
    match format {
        OutputFormat::Plain => {
            let line: Vec<String> = values.iter().map(BigInt::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        OutputFormat::Bfile => {
            for line in header.lines() {
                writeln!(out, "# {line}").unwrap();
            }
            for (n, v) in indexed {
                writeln!(out, "{n} {v}").unwrap();
            }
        }
        OutputFormat::Csv => {
            for (n, v) in indexed {
                writeln!(out, "{n},{v}").unwrap();
            }
        }
        OutputFormat::Json => {
            let terms: Vec<JsonTerm> = indexed.map(|(n, v)| JsonTerm { n, value: v.to_string() }).collect();
            out.push_str(&serde_json::to_string(&terms).expect("plain data serializes"));
            out.push('\n');
        }
    }
    out
}

/// Parses b-file text: `#` comment lines and blank lines are skipped, every
/// other line must be `index SP value`.
pub fn parse_bfile(text: &str) -> Result<Vec<(u64, BigInt)>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        if line.starts_with('#') || line.trim().is_empty() {
            continue;
        }
        let bad = || Error::domain(format!("b-file line {}: malformed `{line}`", lineno + 1));
        let (idx, value) = line.split_once(' ').ok_or_else(bad)?;
        let idx = idx.parse::<u64>().map_err(|_| bad())?;
        let value = BigInt::from_str(value).map_err(|_| bad())?;
        out.push((idx, value));
    }
    Ok(out)
}

/// Parses the JSON rendering back to `(index, value)` pairs.
pub fn parse_json(text: &str) -> Result<Vec<(u64, BigInt)>> {
    let terms: Vec<JsonTerm> =
        serde_json::from_str(text).map_err(|e| Error::domain(format!("malformed JSON sequence: {e}")))?;
    terms
        .into_iter()
        .map(|t| {
            BigInt::from_str(&t.value)
                .map(|v| (t.n, v))
                .map_err(|_| Error::domain(format!("malformed value `{}`", t.value)))
        })
        .collect()
}
