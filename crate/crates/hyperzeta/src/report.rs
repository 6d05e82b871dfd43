//! Output tables and their CSV / JSON encodings.

use std::io::Write;

use hyperzeta_core::ensemble::FamilyAverage;
use hyperzeta_core::rational::Rational;
use serde::{Deserialize, Serialize};

use crate::AppError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// A float rounded to 12 significant digits; `-0` becomes `0`.
pub fn round12(v: f64) -> f64 {
    if v == 0.0 || !v.is_finite() {
        return if v.is_finite() { 0.0 } else { v };
    }
    format!("{v:.11e}").parse().expect("formatted float parses")
}

/// One family average at one power.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub family: String,
    pub q: u32,
    pub g: usize,
    pub n: usize,
    pub avg_num: String,
    pub avg_den: String,
    pub avg_trace: f64,
    pub main_term: f64,
    pub rmt: i32,
    pub deviation: f64,
    pub branch: String,
}

impl ReportRow {
    pub fn from_average(avg: &FamilyAverage) -> Self {
        ReportRow {
            family: avg.spec.kind().label().to_string(),
            q: avg.spec.field().q(),
            g: avg.spec.genus(),
            n: avg.n,
            avg_num: avg.avg_scaled.numer().to_string(),
            avg_den: avg.avg_scaled.denom().to_string(),
            avg_trace: round12(avg.avg_trace()),
            main_term: round12(avg.main_term_trace()),
            rmt: avg.rmt,
            deviation: round12(avg.deviation()),
            branch: avg.main_term.branch.label().to_string(),
        }
    }

    /// The exact scaled average carried by the row.
    pub fn avg_scaled(&self) -> Result<Rational, AppError> {
        format!("{}/{}", self.avg_num, self.avg_den)
            .parse()
            .map_err(|_| AppError::Output(format!("bad rational {}/{}", self.avg_num, self.avg_den)))
    }
}

/// One cell of the `S(beta; n)` grid with its checks.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CharsumRow {
    pub q: u32,
    pub n: usize,
    pub beta: usize,
    pub s: i64,
    pub main_num: String,
    pub main_den: String,
    pub residual: f64,
    /// `pass`, `fail`, or `n/a` outside `beta < n`
    pub duality: String,
    /// closed value of `S(n-1; n)`, same encoding
    pub endpoint: String,
}

pub fn check_label(v: Option<bool>) -> String {
    match v {
        Some(true) => "pass",
        Some(false) => "fail",
        None => "n/a",
    }
    .to_string()
}

pub fn write_table<T: Serialize>(rows: &[T], format: Format, out: &mut dyn Write) -> Result<(), AppError> {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in rows {
                w.serialize(r)?;
            }
            w.flush()?;
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, rows)?;
            writeln!(out)?;
        }
    }
    Ok(())
}
