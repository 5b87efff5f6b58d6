//! Deterministic agent-based simulator of pheromone-mediated ant foraging.
//!
//! Cooperators forage between a nest and a food source by laying and
//! following home and food trails on a pheromone grid. Detractors lay
//! misleading food pheromone that traps cooperators near the nest; an
//! optional cautionary pheromone driven by per-ant patience lets cooperators
//! learn to ignore trails that do not lead anywhere.
//!
//! The crate covers the world grid ([`grid`]), ant behavior ([`agents`]),
//! the step loop ([`engine`]), success metrics and sweeps ([`metrics`],
//! [`sweep`]) and file output ([`output`], [`render`]).

pub mod agents;
pub mod config;
pub mod engine;
pub mod error;
pub mod grid;
pub mod metrics;
pub mod output;
pub mod render;
pub mod sweep;

pub use agents::{Ant, Mode, Role};
pub use config::{load_config, parse_override, SimConfig};
pub use engine::{run, run_observed, RunResult, SeriesPoint, Snapshot, World};
pub use error::{ConfigError, MetricsError, OutputError, SweepError};
pub use grid::{CellKind, Channel, PheromoneGrid};
pub use metrics::{compute_metrics, Metrics, Tallies};
pub use output::{emit_run_csv, emit_sweep_csv};
pub use render::render_frames;
pub use sweep::{run_sweep, spotlight_configs, Axis, CellStats, SweepSpec, SweepTable};
