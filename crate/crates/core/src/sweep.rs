//! Multi-seed parameter sweeps and the named spotlight configurations.
//!
//! A sweep varies two configuration fields over a grid of values, runs every
//! grid cell `runs_per_cell` times with seeds `seed_base + run index`, and
//! reports the mean and sample standard deviation of each metric.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::config::SimConfig;
use crate::engine;
use crate::error::SweepError;
use crate::metrics::{Metrics, METRIC_FIELDS};

/// Misleading-pheromone multipliers of the attack sweep.
pub const ATTACK_MULTIPLIERS: [f64; 8] = [0.0, 1.0, 2.0, 5.0, 10.0, 50.0, 100.0, 1000.0];
/// Detractor fractions of the attack sweep (powers of two over 1024).
pub const ATTACK_FRACTIONS: [f64; 8] = [0.0039, 0.0078, 0.0156, 0.0313, 0.0625, 0.125, 0.25, 0.5];
/// Maximum patience values of the defense sweep.
pub const DEFENSE_PATIENCE_MAX: [f64; 5] = [50.0, 100.0, 250.0, 500.0, 1000.0];
/// Patience refill times of the defense sweep.
pub const DEFENSE_REFILL_STEPS: [f64; 6] = [1.0, 2.0, 5.0, 10.0, 50.0, 100.0];

/// One swept configuration field, addressed by its JSON key.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Axis {
    pub key: String,
    pub values: Vec<f64>,
}

impl Axis {
    pub fn new(key: impl Into<String>, values: impl Into<Vec<f64>>) -> Self {
        Self {
            key: key.into(),
            values: values.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub axis1: Axis,
    pub axis2: Axis,
    pub base: SimConfig,
    pub runs_per_cell: usize,
    pub seed_base: u64,
}

impl SweepSpec {
    /// Detractor attack over misleading multiplier `m` × detractor fraction `f_d`.
    pub fn attack(base: SimConfig, runs_per_cell: usize, seed_base: u64) -> Self {
        Self {
            axis1: Axis::new("m", ATTACK_MULTIPLIERS),
            axis2: Axis::new("f_d", ATTACK_FRACTIONS),
            base,
            runs_per_cell,
            seed_base,
        }
    }

    /// Cautionary defense over `rho_max` × `t_p`, with the defense switched on.
    pub fn defense(base: SimConfig, runs_per_cell: usize, seed_base: u64) -> Self {
        Self {
            axis1: Axis::new("rho_max", DEFENSE_PATIENCE_MAX),
            axis2: Axis::new("t_p", DEFENSE_REFILL_STEPS),
            base: SimConfig {
                defense_enabled: true,
                ..base
            },
            runs_per_cell,
            seed_base,
        }
    }

    /// Checks the axes and builds every cell configuration, so invalid axis
    /// values surface before any simulation starts.
    fn cell_configs(&self) -> Result<Vec<(f64, f64, SimConfig)>, SweepError> {
        for axis in [&self.axis1, &self.axis2] {
            if axis.values.is_empty() {
                return Err(SweepError::EmptyAxis(axis.key.clone()));
            }
        }
        if self.runs_per_cell == 0 {
            return Err(SweepError::NoRuns);
        }
        let mut cells = Vec::with_capacity(self.axis1.values.len() * self.axis2.values.len());
        for &a in &self.axis1.values {
            let row = self.base.with_field(&self.axis1.key, axis_value(a))?;
            for &b in &self.axis2.values {
                cells.push((a, b, row.with_field(&self.axis2.key, axis_value(b))?));
            }
        }
        Ok(cells)
    }
}

/// Integral values become JSON integers so they also fit integer fields.
fn axis_value(value: f64) -> Value {
    if value.fract() == 0.0 && value.abs() < 9.0e15 {
        Value::from(value as i64)
    } else {
        Value::from(value)
    }
}

/// Mean and sample standard deviation of each metric over one cell's runs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CellStats {
    pub axis1: f64,
    pub axis2: f64,
    pub runs: usize,
    pub mean: Metrics,
    pub stddev: Metrics,
}

impl CellStats {
    fn from_runs(axis1: f64, axis2: f64, runs: &[Metrics]) -> Self {
        let n = runs.len() as f64;
        let mut mean = [0.0; 5];
        for metrics in runs {
            for (sum, value) in mean.iter_mut().zip(metrics.values()) {
                *sum += value;
            }
        }
        mean.iter_mut().for_each(|sum| *sum /= n);
        let mut stddev = [0.0; 5];
        if runs.len() > 1 {
            for metrics in runs {
                for ((acc, value), m) in stddev.iter_mut().zip(metrics.values()).zip(mean) {
                    *acc += (value - m) * (value - m);
                }
            }
            stddev.iter_mut().for_each(|acc| *acc = (*acc / (n - 1.0)).sqrt());
        }
        Self {
            axis1,
            axis2,
            runs: runs.len(),
            mean: metrics_from_values(mean),
            stddev: metrics_from_values(stddev),
        }
    }
}

fn metrics_from_values(v: [f64; 5]) -> Metrics {
    Metrics {
        bits_collected_per_cooperator: v[0],
        bits_delivered_per_cooperator: v[1],
        frac_collected: v[2],
        frac_delivered: v[3],
        second_find_fraction: v[4],
    }
}

/// Aggregated sweep results; cells are ordered by axis1 value index, then
/// axis2 value index, as listed in the [`SweepSpec`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepTable {
    pub axis1_key: String,
    pub axis2_key: String,
    pub cells: Vec<CellStats>,
}

impl SweepTable {
    pub fn cell(&self, axis1: f64, axis2: f64) -> Option<&CellStats> {
        self.cells.iter().find(|c| c.axis1 == axis1 && c.axis2 == axis2)
    }

    /// Long-format rows `(axis1, axis2, metric, mean, stddev)` sorted by
    /// axis1, axis2 and metric name.
    pub fn rows(&self) -> Vec<(f64, f64, &'static str, f64, f64)> {
        let mut rows: Vec<_> = self
            .cells
            .iter()
            .flat_map(|cell| {
                METRIC_FIELDS
                    .iter()
                    .map(move |(name, get)| (cell.axis1, cell.axis2, *name, get(&cell.mean), get(&cell.stddev)))
            })
            .collect();
        rows.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)).then(a.2.cmp(b.2)));
        rows
    }
}

/// Runs every cell of `spec` in parallel. The result does not depend on the
/// thread count or scheduling order.
pub fn run_sweep(spec: &SweepSpec) -> Result<SweepTable, SweepError> {
    run_sweep_with_progress(spec, |_, _| {})
}

/// Like [`run_sweep`], calling `progress(done, total)` after each finished
/// run. The callback may be invoked from several threads.
pub fn run_sweep_with_progress(
    spec: &SweepSpec,
    progress: impl Fn(usize, usize) + Sync,
) -> Result<SweepTable, SweepError> {
    let cells = spec.cell_configs()?;
    let runs = spec.runs_per_cell;
    let total = cells.len() * runs;
    let done = std::sync::atomic::AtomicUsize::new(0);
    let metrics = (0..total)
        .into_par_iter()
        .map(|job| {
            let (_, _, config) = &cells[job / runs];
            let seed = spec.seed_base.wrapping_add((job % runs) as u64);
            let result = engine::run(&SimConfig { seed, ..config.clone() })?;
            let finished = done.fetch_add(1, std::sync::atomic::Ordering::Relaxed) + 1;
            progress(finished, total);
            Ok(result.final_metrics)
        })
        .collect::<Result<Vec<Metrics>, SweepError>>()?;
    let cells = cells
        .iter()
        .zip(metrics.chunks(runs))
        .map(|((a, b, _), runs)| CellStats::from_runs(*a, *b, runs))
        .collect();
    Ok(SweepTable {
        axis1_key: spec.axis1.key.clone(),
        axis2_key: spec.axis2.key.clone(),
        cells,
    })
}

/// The four named attack configurations on top of the defaults.
pub fn spotlight_configs() -> [(&'static str, SimConfig); 4] {
    spotlight_configs_from(&SimConfig::default())
}

/// The four named attack configurations on top of `base`:
/// α (f_d 0.0313, m 1), β (f_d 0.5, m 0), γ (f_d 0.0039, m 1000) and
/// δ (f_d 0.125, m 5).
pub fn spotlight_configs_from(base: &SimConfig) -> [(&'static str, SimConfig); 4] {
    let with = |f_d: f64, m: f64| SimConfig {
        detractor_fraction: f_d,
        mislead_multiplier: m,
        ..base.clone()
    };
    [
        ("alpha", with(0.0313, 1.0)),
        ("beta", with(0.5, 0.0)),
        ("gamma", with(0.0039, 1000.0)),
        ("delta", with(0.125, 5.0)),
    ]
}
