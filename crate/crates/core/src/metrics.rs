//! Colony success metrics.

use serde::{Deserialize, Serialize};

use crate::engine::RunResult;
use crate::error::MetricsError;

/// Raw success counts for the cooperators of one run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tallies {
    pub collected: u64,
    pub delivered: u64,
    /// Cooperators with at least one pickup.
    pub collectors: u64,
    /// Cooperators with at least one delivery.
    pub deliverers: u64,
    /// Cooperators with at least two pickups.
    pub repeat_collectors: u64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct Metrics {
    pub bits_collected_per_cooperator: f64,
    pub bits_delivered_per_cooperator: f64,
    pub frac_collected: f64,
    pub frac_delivered: f64,
    pub second_find_fraction: f64,
}

/// Reads one metric out of [`Metrics`].
pub type MetricAccessor = fn(&Metrics) -> f64;

/// Field names in CSV order, paired with accessors.
pub const METRIC_FIELDS: [(&str, MetricAccessor); 5] = [
    ("bits_collected_per_coop", |m| m.bits_collected_per_cooperator),
    ("bits_delivered_per_coop", |m| m.bits_delivered_per_cooperator),
    ("frac_collected", |m| m.frac_collected),
    ("frac_delivered", |m| m.frac_delivered),
    ("second_find_fraction", |m| m.second_find_fraction),
];

impl Metrics {
    /// Normalizes tallies by `population`; an empty population yields zeros.
    pub fn from_tallies(tallies: &Tallies, population: usize) -> Self {
        if population == 0 {
            return Self::default();
        }
        let n = population as f64;
        Self {
            bits_collected_per_cooperator: tallies.collected as f64 / n,
            bits_delivered_per_cooperator: tallies.delivered as f64 / n,
            frac_collected: tallies.collectors as f64 / n,
            frac_delivered: tallies.deliverers as f64 / n,
            second_find_fraction: tallies.repeat_collectors as f64 / n,
        }
    }

    pub fn values(&self) -> [f64; 5] {
        METRIC_FIELDS.map(|(_, get)| get(self))
    }
}

/// Metrics of a finished run normalized by `population`: pass the cooperator
/// count for per-cooperator figures or the colony size for whole-colony ones.
pub fn compute_metrics(run: &RunResult, population: usize) -> Result<Metrics, MetricsError> {
    if population == 0 {
        return Err(MetricsError::NoCooperators);
    }
    Ok(Metrics::from_tallies(&run.tallies, population))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization() {
        let t = Tallies {
            collected: 30,
            delivered: 20,
            collectors: 8,
            deliverers: 6,
            repeat_collectors: 2,
        };
        let m = Metrics::from_tallies(&t, 10);
        assert_eq!(m.values(), [3.0, 2.0, 0.8, 0.6, 0.2]);
    }

    #[test]
    fn no_success_is_all_zero() {
        let m = Metrics::from_tallies(&Tallies::default(), 1024);
        assert_eq!(m.values(), [0.0; 5]);
        assert_eq!(Metrics::from_tallies(&Tallies::default(), 0), Metrics::default());
    }
}
