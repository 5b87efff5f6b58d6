//! The discretized world: cell classification and pheromone channels.
//!
//! Evaporation is linear with a floor at zero, so a channel that was last
//! written at clock `s` with level `L` reads `max(0, L - r·(now - s))` where
//! `r` is the channel's per-step decrement. Each channel stores the single
//! number `L + r·s`; a read subtracts `r·now` and floors at zero, so
//! advancing the world clock is O(1). This is observationally identical to
//! decrementing every cell once per step, up to floating-point rounding of
//! the offset.

use crate::config::SimConfig;
use crate::error::ConfigError;

/// Upper bound of every pheromone channel.
pub const MAX_INTENSITY: f64 = 1000.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Channel {
    /// Trail leading back to the nest.
    Home,
    /// Food trail laid by cooperators.
    FoodCoop,
    /// Food trail laid by detractors; senses identically to [`Channel::FoodCoop`].
    FoodMislead,
    Cautionary,
}

impl Channel {
    pub const ALL: [Channel; 4] = [
        Channel::Home,
        Channel::FoodCoop,
        Channel::FoodMislead,
        Channel::Cautionary,
    ];

    #[inline]
    fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Channel::Home => "home",
            Channel::FoodCoop => "food_coop",
            Channel::FoodMislead => "food_mislead",
            Channel::Cautionary => "cautionary",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CellKind {
    Empty,
    Nest,
    Food,
}

impl CellKind {
    /// Nest and food cells reflect ants and refuse deposits.
    #[inline]
    pub fn is_solid(self) -> bool {
        !matches!(self, CellKind::Empty)
    }
}

/// A circle in world coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Disc {
    pub center: [f64; 2],
    pub radius: f64,
}

impl Disc {
    pub fn contains(&self, x: f64, y: f64) -> bool {
        let dx = x - self.center[0];
        let dy = y - self.center[1];
        dx * dx + dy * dy <= self.radius * self.radius
    }
}

/// Probe relative to an ant's heading.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Probe {
    pub length: f64,
    pub angle: f64,
}

/// Dense pheromone grid of `columns × rows` square cells.
#[derive(Debug, Clone)]
pub struct PheromoneGrid {
    columns: usize,
    rows: usize,
    cell_size: f64,
    inverse_cell_size: f64,
    width: f64,
    height: f64,
    kinds: Vec<CellKind>,
    /// Per cell, `level + decrement·stamp` of the last write of the two food
    /// channels, which to-food ants read together.
    food_trails: Vec<[f64; 2]>,
    /// Same encoding for the home and cautionary channels.
    marks: Vec<[f64; 2]>,
    clock: u64,
    /// `decrement · clock`, per channel.
    drained: [f64; 4],
    decrement: [f64; 4],
    nest: Disc,
    food: Disc,
    clamped_deposits: u64,
}

impl PheromoneGrid {
    /// Builds an empty grid; nest and food cells are those whose centers lie
    /// inside the respective discs.
    pub fn new(config: &SimConfig) -> Result<Self, ConfigError> {
        config.validate()?;
        let columns = config.grid_columns();
        let rows = config.grid_rows();
        let nest = Disc {
            center: config.nest_center,
            radius: config.nest_radius,
        };
        let food = Disc {
            center: config.food_center,
            radius: config.food_radius,
        };
        let base = config.evaporation_rate * config.dt;
        let mut grid = Self {
            columns,
            rows,
            cell_size: config.cell_size,
            inverse_cell_size: 1.0 / config.cell_size,
            width: config.width,
            height: config.height,
            kinds: Vec::with_capacity(columns * rows),
            food_trails: vec![[0.0; 2]; columns * rows],
            marks: vec![[0.0; 2]; columns * rows],
            clock: 0,
            drained: [0.0; 4],
            decrement: [base, base, base * config.mislead_multiplier, base],
            nest,
            food,
            clamped_deposits: 0,
        };
        for row in 0..rows {
            for col in 0..columns {
                let [cx, cy] = grid.center_of(row * columns + col);
                let kind = if nest.contains(cx, cy) {
                    CellKind::Nest
                } else if food.contains(cx, cy) {
                    CellKind::Food
                } else {
                    CellKind::Empty
                };
                grid.kinds.push(kind);
            }
        }
        Ok(grid)
    }

    pub fn columns(&self) -> usize {
        self.columns
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cell_count(&self) -> usize {
        self.kinds.len()
    }

    pub fn cell_size(&self) -> f64 {
        self.cell_size
    }

    pub fn nest(&self) -> Disc {
        self.nest
    }

    pub fn food(&self) -> Disc {
        self.food
    }

    /// Number of evaporation steps applied so far.
    pub fn clock(&self) -> u64 {
        self.clock
    }

    /// Deposits whose intensity fell outside `[0, 1000]` and were clamped.
    pub fn clamped_deposits(&self) -> u64 {
        self.clamped_deposits
    }

    /// Index of the cell containing `(x, y)`, or `None` outside `[0,W]×[0,H]`.
    /// Points on the far edges belong to the last row or column.
    #[inline]
    pub fn cell_at(&self, x: f64, y: f64) -> Option<usize> {
        if !(x >= 0.0 && y >= 0.0 && x <= self.width && y <= self.height) {
            return None;
        }
        let col = ((x * self.inverse_cell_size) as usize).min(self.columns - 1);
        let row = ((y * self.inverse_cell_size) as usize).min(self.rows - 1);
        Some(row * self.columns + col)
    }

    /// `(column, row)` of a cell index.
    pub fn coords_of(&self, cell: usize) -> (usize, usize) {
        (cell % self.columns, cell / self.columns)
    }

    #[inline]
    pub fn center_of(&self, cell: usize) -> [f64; 2] {
        let (col, row) = (cell % self.columns, cell / self.columns);
        [(col as f64 + 0.5) * self.cell_size, (row as f64 + 0.5) * self.cell_size]
    }

    #[inline]
    pub fn kind(&self, cell: usize) -> CellKind {
        self.kinds[cell]
    }

    #[inline]
    fn stored(&self, cell: usize, channel: Channel) -> f64 {
        match channel {
            Channel::Home => self.marks[cell][0],
            Channel::FoodCoop => self.food_trails[cell][0],
            Channel::FoodMislead => self.food_trails[cell][1],
            Channel::Cautionary => self.marks[cell][1],
        }
    }

    #[inline]
    fn stored_mut(&mut self, cell: usize, channel: Channel) -> &mut f64 {
        match channel {
            Channel::Home => &mut self.marks[cell][0],
            Channel::FoodCoop => &mut self.food_trails[cell][0],
            Channel::FoodMislead => &mut self.food_trails[cell][1],
            Channel::Cautionary => &mut self.marks[cell][1],
        }
    }

    /// Current intensity of one channel.
    #[inline]
    pub fn level(&self, cell: usize, channel: Channel) -> f64 {
        let i = channel.index();
        (self.stored(cell, channel) - self.drained[i]).clamp(0.0, MAX_INTENSITY)
    }

    /// Current intensities of all channels, in [`Channel::ALL`] order.
    #[inline]
    pub fn levels(&self, cell: usize) -> [f64; 4] {
        Channel::ALL.map(|channel| self.level(cell, channel))
    }

    /// Food intensity as an ant perceives it: the two food channels are
    /// indistinguishable, so only their maximum is observable.
    #[inline]
    pub fn sensed_food(&self, cell: usize) -> f64 {
        let [coop, mislead] = self.food_trails[cell];
        (coop - self.drained[1])
            .max(mislead - self.drained[2])
            .clamp(0.0, MAX_INTENSITY)
    }

    /// Raises a channel to `max(current, intensity)`. Nest and food cells
    /// refuse deposits; returns whether the cell accepted it.
    pub fn deposit(&mut self, cell: usize, channel: Channel, intensity: f64) -> bool {
        if self.kinds[cell].is_solid() {
            return false;
        }
        let intensity = if (0.0..=MAX_INTENSITY).contains(&intensity) {
            intensity
        } else {
            self.clamped_deposits += 1;
            if intensity.is_nan() {
                0.0
            } else {
                intensity.clamp(0.0, MAX_INTENSITY)
            }
        };
        let i = channel.index();
        if intensity > self.level(cell, channel) {
            *self.stored_mut(cell, channel) = intensity + self.drained[i];
        }
        true
    }

    /// Applies one step of linear evaporation to every channel of every cell:
    /// `k·Δt` for home, cooperator food and cautionary, `m·k·Δt` for
    /// misleading food, floored at zero.
    pub fn evaporate_all(&mut self) {
        self.clock += 1;
        let clock = self.clock as f64;
        self.drained = self.decrement.map(|r| r * clock);
    }

    /// Cells hit by the endpoints of `probes` cast from `(x, y)` along
    /// `heading`. Endpoints outside the world are dropped; duplicates are kept.
    pub fn cells_in_probe(&self, x: f64, y: f64, heading: f64, probes: &[Probe]) -> Vec<usize> {
        probes
            .iter()
            .filter_map(|probe| {
                let (sin, cos) = (heading + probe.angle).sin_cos();
                self.cell_at(x + probe.length * cos, y + probe.length * sin)
            })
            .collect()
    }

    /// Turns every food cell back into an empty cell once food runs out.
    pub fn clear_food(&mut self) {
        for kind in &mut self.kinds {
            if *kind == CellKind::Food {
                *kind = CellKind::Empty;
            }
        }
    }

    pub fn food_cells(&self) -> usize {
        self.kinds.iter().filter(|&&k| k == CellKind::Food).count()
    }
}
