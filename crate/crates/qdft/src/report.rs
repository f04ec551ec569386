//! Flat records shared by the CSV and JSON writers.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use qdft_core::Complex;
use serde::Serialize;

use crate::config::{Format, RunConfig};
use crate::error::CliError;

/// One output row. CSV needs a fixed header, so every record carries every
/// column and leaves the irrelevant ones empty.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Record {
    /// `candidate`, `vector`, `metric`, `identity`, `node`, `weight` or `gram`.
    pub kind: &'static str,
    pub family: String,
    pub phase: Option<&'static str>,
    #[serde(rename = "N")]
    pub size: Option<usize>,
    pub n: Option<usize>,
    pub r: Option<usize>,
    pub col: Option<usize>,
    pub j: Option<u32>,
    #[serde(rename = "M")]
    pub m: Option<u32>,
    pub q: Option<f64>,
    pub coprime: Option<bool>,
    pub re: Option<f64>,
    pub im: Option<f64>,
    pub eigenvalue_re: Option<f64>,
    pub eigenvalue_im: Option<f64>,
    pub residual: Option<f64>,
    pub threshold: Option<f64>,
    pub pass: Option<bool>,
    pub metric: Option<&'static str>,
    pub value: Option<f64>,
    pub note: Option<String>,
}

impl Record {
    pub fn new(kind: &'static str, family: impl Into<String>) -> Self {
        Record { kind, family: family.into(), ..Self::default() }
    }

    pub fn complex(mut self, z: Complex) -> Self {
        self.re = Some(z.re);
        self.im = Some(z.im);
        self
    }

    pub fn eigenvalue(mut self, z: Complex) -> Self {
        self.eigenvalue_re = Some(z.re);
        self.eigenvalue_im = Some(z.im);
        self
    }

    pub fn judged(mut self, residual: f64, threshold: f64) -> Self {
        self.residual = Some(residual);
        self.threshold = Some(threshold);
        self.pass = Some(residual < threshold);
        self
    }

    fn check(&self) -> Result<(), CliError> {
        let cells = [
            ("q", self.q),
            ("re", self.re),
            ("im", self.im),
            ("eigenvalue_re", self.eigenvalue_re),
            ("eigenvalue_im", self.eigenvalue_im),
            ("residual", self.residual),
            ("threshold", self.threshold),
            ("value", self.value),
        ];
        for (name, cell) in cells {
            if let Some(x) = cell {
                if !x.is_finite() {
                    return Err(CliError::Numerical(format!(
                        "non-finite {name} in {} record for {} (n = {:?}, r = {:?})",
                        self.kind, self.family, self.n, self.r
                    )));
                }
            }
        }
        match self.residual {
            Some(res) if res < 0.0 => Err(CliError::Numerical(format!("negative residual in {} record", self.kind))),
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub max_residual: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub config: RunConfig,
    pub results: Vec<Record>,
    pub summary: Summary,
}

impl Report {
    /// Summarises `results`; `pass` is the command's own verdict.
    pub fn new(config: RunConfig, results: Vec<Record>, pass: bool) -> Self {
        let max_residual = results.iter().filter_map(|r| r.residual).fold(0.0, f64::max);
        Report { config, results, summary: Summary { max_residual, pass } }
    }

    /// Refuses to write anything if a cell is non-finite.
    pub fn write(&self) -> Result<(), CliError> {
        for record in &self.results {
            record.check()?;
        }
        if !self.summary.max_residual.is_finite() {
            return Err(CliError::Numerical("non-finite maximum residual".into()));
        }
        match &self.config.output_path {
            Some(path) => self.write_to(BufWriter::new(File::create(path).map_err(|e| with_path(e, path))?)),
            None => self.write_to(io::stdout().lock()),
        }
    }

    fn write_to<W: Write>(&self, mut out: W) -> Result<(), CliError> {
        match self.config.format {
            Format::Csv => {
                let mut writer = csv::Writer::from_writer(out);
                for record in &self.results {
                    writer.serialize(record)?;
                }
                writer.flush()?;
            }
            Format::Json => {
                serde_json::to_writer_pretty(&mut out, self)?;
                writeln!(out)?;
                out.flush()?;
            }
        }
        Ok(())
    }
}

fn with_path(e: io::Error, path: &Path) -> io::Error {
    io::Error::new(e.kind(), format!("{}: {e}", path.display()))
}
