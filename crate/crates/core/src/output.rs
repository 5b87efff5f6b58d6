//! CSV serialization of run series, final metrics and sweep tables.
//!
//! Numbers are written with six significant digits in the style of C's `%g`,
//! so identical inputs always produce byte-identical files.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use crate::engine::RunResult;
use crate::error::OutputError;
use crate::metrics::{Metrics, METRIC_FIELDS};
use crate::sweep::SweepTable;

pub const SERIES_HEADER: &str = "step,bits_collected_per_coop,bits_delivered_per_coop,frac_collected,frac_delivered";
pub const SWEEP_HEADER: &str = "axis1,axis2,metric,mean,stddev";

/// Formats `value` with `digits` significant digits like C's `%g`: fixed
/// notation for decimal exponents in `-4..digits`, scientific otherwise, with
/// trailing zeros removed.
pub fn format_sig(value: f64, digits: usize) -> String {
    let digits = digits.max(1);
    if value == 0.0 {
        return "0".to_string();
    }
    if !value.is_finite() {
        return value.to_string();
    }
    // Round first so the exponent reflects carries such as 9.999995 -> 10.
    let scientific = format!("{:.*e}", digits - 1, value);
    let (mantissa, exponent) = scientific.split_once('e').expect("scientific format has an exponent");
    let exponent: i32 = exponent.parse().expect("exponent is an integer");
    if exponent < -4 || exponent >= digits as i32 {
        let mantissa = trim_fraction(mantissa);
        let sign = if exponent < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exponent.abs())
    } else {
        let decimals = (digits as i32 - 1 - exponent).max(0) as usize;
        trim_fraction(&format!("{value:.decimals$}")).to_string()
    }
}

fn trim_fraction(text: &str) -> &str {
    if text.contains('.') {
        text.trim_end_matches('0').trim_end_matches('.')
    } else {
        text
    }
}

fn num(value: f64) -> String {
    format_sig(value, 6)
}

/// `series.csv` contents: one row per sample, ordered by step.
pub fn series_csv(result: &RunResult) -> String {
    let mut points: Vec<_> = result.series.iter().collect();
    points.sort_by_key(|p| p.step);
    let mut out = String::from(SERIES_HEADER);
    out.push('\n');
    for point in points {
        let m = &point.metrics;
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            point.step,
            num(m.bits_collected_per_cooperator),
            num(m.bits_delivered_per_cooperator),
            num(m.frac_collected),
            num(m.frac_delivered),
        );
    }
    out
}

/// `final.csv` contents: a header of metric names and one row of values.
pub fn final_csv(metrics: &Metrics) -> String {
    let header: Vec<&str> = METRIC_FIELDS.iter().map(|(name, _)| *name).collect();
    let values: Vec<String> = metrics.values().into_iter().map(num).collect();
    format!("{}\n{}\n", header.join(","), values.join(","))
}

/// `sweep.csv` contents, sorted by axis1, axis2 and metric name.
pub fn sweep_csv(table: &SweepTable) -> String {
    let mut out = String::from(SWEEP_HEADER);
    out.push('\n');
    for (a, b, metric, mean, stddev) in table.rows() {
        let _ = writeln!(out, "{},{},{metric},{},{}", num(a), num(b), num(mean), num(stddev));
    }
    out
}

fn write_file(dir: &Path, name: &str, contents: &str) -> Result<PathBuf, OutputError> {
    std::fs::create_dir_all(dir).map_err(OutputError::at(dir))?;
    let path = dir.join(name);
    std::fs::write(&path, contents).map_err(OutputError::at(&path))?;
    Ok(path)
}

/// Writes `series.csv` and `final.csv` into `dir`, creating it if needed.
pub fn emit_run_csv(result: &RunResult, dir: &Path) -> Result<[PathBuf; 2], OutputError> {
    Ok([
        write_file(dir, "series.csv", &series_csv(result))?,
        write_file(dir, "final.csv", &final_csv(&result.final_metrics))?,
    ])
}

/// Writes `sweep.csv` into `dir`, creating it if needed.
pub fn emit_sweep_csv(table: &SweepTable, dir: &Path) -> Result<PathBuf, OutputError> {
    write_file(dir, "sweep.csv", &sweep_csv(table))
}
