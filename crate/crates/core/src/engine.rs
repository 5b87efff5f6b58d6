//! The simulation loop.
//!
//! One step runs, in order: evaporation; then for every ant in index order a
//! direction decision (on steps divisible by `tau_turn`), motion, contact
//! transitions and deposits; then the step counter advances and, every
//! `sample_every` steps, the metrics are sampled. A run owns a single
//! ChaCha8 generator seeded from the config, so `(config, seed)` fixes every
//! output.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::agents::{self, Ant, Role};
use crate::config::SimConfig;
use crate::error::ConfigError;
use crate::grid::PheromoneGrid;
use crate::metrics::{Metrics, Tallies};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesPoint {
    pub step: u64,
    pub metrics: Metrics,
}

/// Read-only view handed to snapshot observers.
#[derive(Debug, Clone, Copy)]
pub struct Snapshot<'a> {
    pub step: u64,
    pub grid: &'a PheromoneGrid,
    pub ants: &'a [Ant],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunResult {
    pub config: SimConfig,
    pub seed: u64,
    pub cooperators: usize,
    pub ant_count: usize,
    pub tallies: Tallies,
    /// Per-cooperator metrics at the last step.
    pub final_metrics: Metrics,
    /// Per-cooperator metrics at step 0 and every `sample_every` steps.
    pub series: Vec<SeriesPoint>,
    pub clamped_deposits: u64,
}

impl RunResult {
    /// Same tallies normalized by the whole colony, detractors included.
    pub fn colony_metrics(&self) -> Metrics {
        Metrics::from_tallies(&self.tallies, self.ant_count)
    }
}

#[derive(Debug, Clone)]
pub struct World {
    config: SimConfig,
    step: u64,
    grid: PheromoneGrid,
    ants: Vec<Ant>,
    food_remaining: Option<u64>,
    rng: ChaCha8Rng,
    tallies: Tallies,
    cooperators: usize,
    series: Vec<SeriesPoint>,
}

impl World {
    pub fn new(config: &SimConfig) -> Result<Self, ConfigError> {
        config.validate()?;
        let grid = PheromoneGrid::new(config)?;
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        let ants = agents::spawn_colony(config, &mut rng);
        let mut world = Self {
            config: config.clone(),
            step: 0,
            grid,
            ants,
            food_remaining: config.food_capacity,
            rng,
            tallies: Tallies::default(),
            cooperators: config.cooperator_count(),
            series: Vec::with_capacity((config.steps / config.sample_every) as usize + 1),
        };
        if world.food_remaining == Some(0) {
            world.grid.clear_food();
        }
        world.sample();
        Ok(world)
    }

    pub fn step_index(&self) -> u64 {
        self.step
    }

    pub fn grid(&self) -> &PheromoneGrid {
        &self.grid
    }

    pub fn ants(&self) -> &[Ant] {
        &self.ants
    }

    pub fn tallies(&self) -> Tallies {
        self.tallies
    }

    pub fn food_remaining(&self) -> Option<u64> {
        self.food_remaining
    }

    pub fn config(&self) -> &SimConfig {
        &self.config
    }

    pub fn is_finished(&self) -> bool {
        self.step >= self.config.steps
    }

    pub fn metrics(&self) -> Metrics {
        Metrics::from_tallies(&self.tallies, self.cooperators)
    }

    pub fn snapshot(&self) -> Snapshot<'_> {
        Snapshot {
            step: self.step,
            grid: &self.grid,
            ants: &self.ants,
        }
    }

    /// Advances one step. Does nothing once the run is finished.
    pub fn step(&mut self) {
        if self.is_finished() {
            return;
        }
        let config = &self.config;
        self.grid.evaporate_all();
        let decide = self.step.is_multiple_of(u64::from(config.turn_interval));

        for ant in &mut self.ants {
            if ant.is_dormant() && !ant.wake_if_due(self.step, config.attack_delay) {
                continue;
            }
            if decide {
                let decision = agents::select_direction(ant, &self.grid, config, &mut self.rng);
                ant.decision = decision.heading;
                ant.food_sensed = decision.food_sensed;
            }
            let contact = agents::step_motion(ant, &self.grid, config, &mut self.rng);
            match ant.role {
                Role::Cooperator => {
                    let available = self.food_remaining.is_none_or(|left| left > 0);
                    let events = agents::update_cooperator(ant, &mut self.grid, config, contact, available, self.step);
                    if events.picked_up {
                        self.tallies.collected += 1;
                        match ant.stats.collected {
                            1 => self.tallies.collectors += 1,
                            2 => self.tallies.repeat_collectors += 1,
                            _ => {}
                        }
                        if let Some(left) = self.food_remaining.as_mut() {
                            *left -= 1;
                            if *left == 0 {
                                self.grid.clear_food();
                            }
                        }
                    }
                    if events.delivered {
                        self.tallies.delivered += 1;
                        if ant.stats.delivered == 1 {
                            self.tallies.deliverers += 1;
                        }
                    }
                }
                Role::Detractor => {
                    agents::update_detractor(ant, &mut self.grid, config, contact);
                }
            }
        }

        self.step += 1;
        if self.step.is_multiple_of(self.config.sample_every) {
            self.sample();
        }
    }

    fn sample(&mut self) {
        let metrics = self.metrics();
        self.series.push(SeriesPoint {
            step: self.step,
            metrics,
        });
    }

    pub fn into_result(self) -> RunResult {
        RunResult {
            seed: self.config.seed,
            cooperators: self.cooperators,
            ant_count: self.ants.len(),
            tallies: self.tallies,
            final_metrics: Metrics::from_tallies(&self.tallies, self.cooperators),
            series: self.series,
            clamped_deposits: self.grid.clamped_deposits(),
            config: self.config,
        }
    }
}

/// Runs a full simulation.
pub fn run(config: &SimConfig) -> Result<RunResult, ConfigError> {
    run_observed(config, None, |_| {})
}

/// Runs a full simulation, showing `observer` the world at step 0 and every
/// `every` steps after that.
pub fn run_observed(
    config: &SimConfig,
    every: Option<u64>,
    mut observer: impl FnMut(Snapshot<'_>),
) -> Result<RunResult, ConfigError> {
    let mut world = World::new(config)?;
    let every = every.filter(|&e| e > 0);
    if every.is_some() {
        observer(world.snapshot());
    }
    while !world.is_finished() {
        world.step();
        if let Some(every) = every {
            if world.step_index() % every == 0 {
                observer(world.snapshot());
            }
        }
    }
    Ok(world.into_result())
}
