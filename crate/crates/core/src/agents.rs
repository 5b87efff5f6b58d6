//! Cooperator and detractor behavior.

use std::f64::consts::{PI, TAU};

use rand::Rng;

use crate::config::SimConfig;
use crate::grid::{CellKind, Channel, Disc, PheromoneGrid, Probe, MAX_INTENSITY};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    Cooperator,
    Detractor,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    ToFood,
    ToHome,
    Dormant,
}

/// Per-ant success record and deposit provenance.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct AntStats {
    pub collected: u32,
    pub delivered: u32,
    pub first_collect_step: Option<u64>,
    pub first_deliver_step: Option<u64>,
    /// Deposit attempts per channel, indexed like [`Channel::ALL`].
    pub deposits: [u64; 4],
}

#[derive(Debug, Clone, PartialEq)]
pub struct Ant {
    pub x: f64,
    pub y: f64,
    /// Current heading in `[0, 2π)`.
    pub heading: f64,
    pub role: Role,
    pub mode: Mode,
    /// Deposition clock in steps: since the last reset at nest or food for
    /// cooperators, since secretion (re)started for detractors. Trail
    /// intensity decays with the elapsed simulated time, `clock · dt`.
    pub clock: u64,
    /// Cooperators only; always in `[0, rho_max]`.
    pub patience: f64,
    pub carrying: bool,
    /// Committed direction, recomputed every `tau_turn` steps.
    pub decision: f64,
    /// Whether the last decision probed any cell with food pheromone.
    pub food_sensed: bool,
    pub stats: AntStats,
}

impl Ant {
    pub fn is_dormant(&self) -> bool {
        self.mode == Mode::Dormant
    }

    /// Detractors sleep until `attack_delay` steps have elapsed, then start
    /// secreting with a fresh clock. Returns true on the waking step.
    pub fn wake_if_due(&mut self, step: u64, attack_delay: u32) -> bool {
        if self.mode == Mode::Dormant && step >= u64::from(attack_delay) {
            self.mode = Mode::ToFood;
            self.clock = 0;
            true
        } else {
            false
        }
    }
}

/// `1000·exp(−λ·clock)`; the same law drives trail deposits and cautionary
/// deposits (clock = patience).
#[inline]
pub fn deposition_intensity(decay: f64, clock: f64) -> f64 {
    MAX_INTENSITY * (-decay * clock).exp()
}

/// Intensity of a home, food or misleading trail deposit made `clock` steps
/// after the depositor's last reset: the clock is read in simulated seconds.
#[inline]
pub fn trail_intensity(config: &SimConfig, clock: u64) -> f64 {
    deposition_intensity(config.intensity_decay, clock as f64 * config.dt)
}

/// Outcome of a direction decision.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Decision {
    pub heading: f64,
    /// Any probed cell carried positive (sensed) food pheromone.
    pub food_sensed: bool,
    /// Cell the new heading points at, if any.
    pub target: Option<usize>,
}

/// Picks a heading among probed cells.
///
/// To-food ants read sensed food, to-home ants read home pheromone. The
/// strictly highest positive cell wins, ties going to the earliest probe, and
/// the new heading points from the ant to that cell's center.
/// With the defense on, to-food ants skip any cell whose cautionary level
/// exceeds its food level. No eligible cell means keep going straight.
pub fn choose_among(
    ant: &Ant,
    grid: &PheromoneGrid,
    defense_enabled: bool,
    cells: impl IntoIterator<Item = usize>,
) -> Decision {
    let mut chooser = Chooser::new(ant, defense_enabled);
    for cell in cells {
        chooser.consider(cell, chooser.read(grid, cell));
    }
    chooser.finish(ant, grid)
}

/// Running state of a direction decision.
struct Chooser {
    to_food: bool,
    filter: bool,
    best: Option<(usize, f64)>,
    food_sensed: bool,
}

impl Chooser {
    fn new(ant: &Ant, defense_enabled: bool) -> Self {
        let to_food = ant.mode != Mode::ToHome;
        Self {
            to_food,
            filter: defense_enabled && to_food,
            best: None,
            food_sensed: false,
        }
    }

    /// The channel this ant follows and, when filtering, the cautionary level.
    #[inline]
    fn read(&self, grid: &PheromoneGrid, cell: usize) -> [f64; 2] {
        if !self.to_food {
            [grid.level(cell, Channel::Home), 0.0]
        } else if self.filter {
            [grid.sensed_food(cell), grid.level(cell, Channel::Cautionary)]
        } else {
            [grid.sensed_food(cell), 0.0]
        }
    }

    #[inline]
    fn consider(&mut self, cell: usize, [level, caution]: [f64; 2]) {
        let level = if self.to_food {
            let food = level;
            self.food_sensed |= food > 0.0;
            if self.filter && caution > food {
                return;
            }
            food
        } else {
            level
        };
        if level > 0.0 && self.best.is_none_or(|(_, top)| level > top) {
            self.best = Some((cell, level));
        }
    }

    fn finish(self, ant: &Ant, grid: &PheromoneGrid) -> Decision {
        match self.best {
            Some((cell, _)) => {
                let [cx, cy] = grid.center_of(cell);
                Decision {
                    heading: normalize_angle((cy - ant.y).atan2(cx - ant.x)),
                    food_sensed: self.food_sensed,
                    target: Some(cell),
                }
            }
            None => Decision {
                heading: ant.heading,
                food_sensed: self.food_sensed,
                target: None,
            },
        }
    }
}

/// Casts `probe_count` random probes (length uniform on `[0, ls_max]`, angle
/// uniform on `[−θs_max, θs_max]`) and chooses among the cells they hit.
///
/// Probes are handled in batches: all cell reads of a batch are issued
/// before any comparison, so the memory accesses overlap.
pub fn select_direction<R: Rng + ?Sized>(ant: &Ant, grid: &PheromoneGrid, config: &SimConfig, rng: &mut R) -> Decision {
    const BATCH: usize = 32;
    let mut chooser = Chooser::new(ant, config.defense_enabled);
    let mut hits = [0usize; BATCH];
    let mut levels = [[0.0f64; 2]; BATCH];
    let mut remaining = config.probe_count as usize;
    while remaining > 0 {
        let batch = remaining.min(BATCH);
        remaining -= batch;
        let mut count = 0;
        for _ in 0..batch {
            let probe = random_probe(config, rng);
            let (sin, cos) = sin_cos(ant.heading + probe.angle);
            if let Some(cell) = grid.cell_at(ant.x + probe.length * cos, ant.y + probe.length * sin) {
                hits[count] = cell;
                count += 1;
            }
        }
        for (slot, &cell) in levels.iter_mut().zip(&hits[..count]) {
            *slot = chooser.read(grid, cell);
        }
        for (&cell, &cell_levels) in hits[..count].iter().zip(&levels) {
            chooser.consider(cell, cell_levels);
        }
    }
    chooser.finish(ant, grid)
}

/// `(sin x, cos x)` accurate to about 1e-13 for any finite `x`.
///
/// Reduces to `|x| ≤ π`, evaluates Taylor series at the half angle and
/// applies the double-angle identities. Motion and probing call this on
/// every step for every ant, where libm's correctly rounded version is the
/// dominant cost.
#[inline]
pub fn sin_cos(x: f64) -> (f64, f64) {
    let x = if x > PI {
        if x - TAU <= PI {
            x - TAU
        } else {
            x - TAU * (x * (1.0 / TAU)).round()
        }
    } else if x < -PI {
        x - TAU * (x * (1.0 / TAU)).round()
    } else {
        x
    };
    let h = 0.5 * x;
    let h2 = h * h;
    let s = h
        * (1.0
            + h2 * (-1.0 / 6.0
                + h2 * (1.0 / 120.0
                    + h2 * (-1.0 / 5040.0
                        + h2 * (1.0 / 362_880.0
                            + h2 * (-1.0 / 39_916_800.0
                                + h2 * (1.0 / 6_227_020_800.0
                                    + h2 * (-1.0 / 1_307_674_368_000.0 + h2 * (1.0 / 355_687_428_096_000.0)))))))));
    let c = 1.0
        + h2 * (-0.5
            + h2 * (1.0 / 24.0
                + h2 * (-1.0 / 720.0
                    + h2 * (1.0 / 40_320.0
                        + h2 * (-1.0 / 3_628_800.0
                            + h2 * (1.0 / 479_001_600.0
                                + h2 * (-1.0 / 87_178_291_200.0
                                    + h2 * (1.0 / 20_922_789_888_000.0 + h2 * (-1.0 / 6_402_373_705_728_000.0)))))))));
    (2.0 * s * c, c * c - s * s)
}

/// One probe from a single 64-bit draw: the high half sets the length and
/// the low half the angle, each a uniform with 32-bit resolution.
pub fn random_probe<R: Rng + ?Sized>(config: &SimConfig, rng: &mut R) -> Probe {
    const SCALE: f64 = 1.0 / 4_294_967_296.0;
    let bits = rng.next_u64();
    let length = (bits >> 32) as f64 * SCALE * config.probe_max_length;
    let angle = (2.0 * (bits as u32) as f64 * SCALE - 1.0) * config.probe_half_angle;
    Probe { length, angle }
}

/// What the ant ran into during a motion step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Contact {
    /// Set when the ant tried to enter a nest or food cell from outside it.
    pub entered: Option<CellKind>,
    pub hit_wall: bool,
}

/// Moves the ant one step along its committed direction plus fresh noise
/// `w ~ U(−η, η)`.
///
/// Walls and solid (nest or food) cells reflect the ant: the heading is
/// mirrored about the surface normal and the step is retaken from the old
/// position. The committed direction is mirrored too so the ant does not
/// walk back into the obstacle before its next decision.
pub fn step_motion<R: Rng + ?Sized>(ant: &mut Ant, grid: &PheromoneGrid, config: &SimConfig, rng: &mut R) -> Contact {
    let noise = (2.0 * rng.gen::<f64>() - 1.0) * config.noise_half_width;
    let step = config.step_length();
    let mut direction = ant.decision + noise;
    let mut contact = Contact::default();

    let (mut nx, mut ny) = advance(ant.x, ant.y, direction, step);
    let flip_x = nx < 0.0 || nx > config.width;
    let flip_y = ny < 0.0 || ny > config.height;
    if flip_x || flip_y {
        contact.hit_wall = true;
        direction = mirror_axes(direction, flip_x, flip_y);
        ant.decision = mirror_axes(ant.decision, flip_x, flip_y);
        (nx, ny) = advance(ant.x, ant.y, direction, step);
        nx = nx.clamp(0.0, config.width);
        ny = ny.clamp(0.0, config.height);
    }

    let here = grid.cell_at(ant.x, ant.y).map_or(CellKind::Empty, |c| grid.kind(c));
    let there = grid.cell_at(nx, ny).map_or(CellKind::Empty, |c| grid.kind(c));
    if there.is_solid() && there != here {
        contact.entered = Some(there);
        let disc = if there == CellKind::Nest {
            grid.nest()
        } else {
            grid.food()
        };
        direction = mirror_about_disc(direction, ant.x, ant.y, disc);
        ant.decision = mirror_about_disc(ant.decision, ant.x, ant.y, disc);
        let (rx, ry) = advance(ant.x, ant.y, direction, step);
        let rx = rx.clamp(0.0, config.width);
        let ry = ry.clamp(0.0, config.height);
        let blocked = grid.cell_at(rx, ry).map_or(CellKind::Empty, |c| grid.kind(c));
        if blocked.is_solid() && blocked != here {
            (nx, ny) = (ant.x, ant.y);
        } else {
            (nx, ny) = (rx, ry);
        }
    }

    ant.x = nx;
    ant.y = ny;
    ant.heading = normalize_angle(direction);
    ant.decision = normalize_angle(ant.decision);
    contact
}

#[inline]
fn advance(x: f64, y: f64, direction: f64, step: f64) -> (f64, f64) {
    let (sin, cos) = sin_cos(direction);
    (x + step * cos, y + step * sin)
}

fn mirror_axes(angle: f64, flip_x: bool, flip_y: bool) -> f64 {
    let mut angle = angle;
    if flip_x {
        angle = PI - angle;
    }
    if flip_y {
        angle = -angle;
    }
    angle
}

/// Law of reflection against a disc, using the outward normal at the point
/// of approach.
fn mirror_about_disc(angle: f64, x: f64, y: f64, disc: Disc) -> f64 {
    let (nx, ny) = (x - disc.center[0], y - disc.center[1]);
    let norm = nx.hypot(ny);
    if norm == 0.0 {
        return angle + PI;
    }
    let (nx, ny) = (nx / norm, ny / norm);
    let (dy, dx) = angle.sin_cos();
    let dot = dx * nx + dy * ny;
    if dot >= 0.0 {
        // already moving away from the disc center
        return angle;
    }
    let (rx, ry) = (dx - 2.0 * dot * nx, dy - 2.0 * dot * ny);
    ry.atan2(rx)
}

/// Wraps an angle into `[0, 2π)`.
#[inline]
pub fn normalize_angle(angle: f64) -> f64 {
    // one-turn fast paths; both subtractions are exact, as `rem_euclid` is
    if (0.0..TAU).contains(&angle) {
        return angle;
    }
    let wrapped = if (TAU..2.0 * TAU).contains(&angle) {
        angle - TAU
    } else {
        angle.rem_euclid(TAU)
    };
    if wrapped >= TAU {
        0.0
    } else {
        wrapped
    }
}

/// Patience drains by one step while food pheromone is detectable and refills
/// from empty to `rho_max` in `t_p` steps otherwise.
pub fn patience_update(patience: f64, food_sensed: bool, refill_steps: u32, patience_max: f64) -> f64 {
    if food_sensed {
        (patience - 1.0).max(0.0)
    } else {
        (patience + patience_max / f64::from(refill_steps)).min(patience_max)
    }
}

/// Transition events reported by the per-role updates.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct UpdateEvents {
    pub picked_up: bool,
    pub delivered: bool,
    pub refilled: bool,
    /// Deposits attempted this step (a deposit into a solid cell is refused
    /// by the grid but still listed here).
    pub deposits: [Option<(Channel, f64)>; 2],
}

impl UpdateEvents {
    fn push_deposit(&mut self, channel: Channel, intensity: f64) {
        let slot = self
            .deposits
            .iter_mut()
            .find(|slot| slot.is_none())
            .expect("at most two deposits per step");
        *slot = Some((channel, intensity));
    }
}

fn deposit_here(ant: &mut Ant, grid: &mut PheromoneGrid, events: &mut UpdateEvents, channel: Channel, intensity: f64) {
    if let Some(cell) = grid.cell_at(ant.x, ant.y) {
        grid.deposit(cell, channel, intensity);
    }
    ant.stats.deposits[channel as usize] += 1;
    events.push_deposit(channel, intensity);
}

/// Applies a cooperator's transitions for this step's contact, then its
/// deposits, then advances its clock.
///
/// `food_available` gates pickups when capacity is finite.
pub fn update_cooperator(
    ant: &mut Ant,
    grid: &mut PheromoneGrid,
    config: &SimConfig,
    contact: Contact,
    food_available: bool,
    step: u64,
) -> UpdateEvents {
    debug_assert_eq!(ant.role, Role::Cooperator);
    let mut events = UpdateEvents::default();
    match (contact.entered, ant.mode) {
        (Some(CellKind::Food), Mode::ToFood) if food_available => {
            ant.carrying = true;
            ant.mode = Mode::ToHome;
            ant.clock = 0;
            ant.patience = config.patience_max;
            ant.stats.collected += 1;
            ant.stats.first_collect_step.get_or_insert(step);
            events.picked_up = true;
        }
        (Some(CellKind::Nest), Mode::ToHome) => {
            ant.carrying = false;
            ant.mode = Mode::ToFood;
            ant.clock = 0;
            ant.stats.delivered += 1;
            ant.stats.first_deliver_step.get_or_insert(step);
            events.delivered = true;
        }
        (Some(CellKind::Nest), Mode::ToFood) => {
            ant.clock = 0;
        }
        _ => {}
    }

    let trail = trail_intensity(config, ant.clock);
    match ant.mode {
        Mode::ToFood => {
            deposit_here(ant, grid, &mut events, Channel::Home, trail);
            if config.defense_enabled {
                let caution = deposition_intensity(config.intensity_decay, ant.patience);
                deposit_here(ant, grid, &mut events, Channel::Cautionary, caution);
                ant.patience = patience_update(
                    ant.patience,
                    ant.food_sensed,
                    config.patience_refill_steps,
                    config.patience_max,
                );
            }
        }
        Mode::ToHome => deposit_here(ant, grid, &mut events, Channel::FoodCoop, trail),
        Mode::Dormant => unreachable!("cooperators are never dormant"),
    }
    ant.clock += 1;
    events
}

/// Detractor update after waking: nest contact restarts the secretion clock,
/// then misleading food pheromone is laid at the clock's intensity.
pub fn update_detractor(ant: &mut Ant, grid: &mut PheromoneGrid, config: &SimConfig, contact: Contact) -> UpdateEvents {
    debug_assert_eq!(ant.role, Role::Detractor);
    let mut events = UpdateEvents::default();
    if ant.is_dormant() {
        return events;
    }
    if contact.entered == Some(CellKind::Nest) {
        ant.clock = 0;
        events.refilled = true;
    }
    let intensity = trail_intensity(config, ant.clock);
    deposit_here(ant, grid, &mut events, Channel::FoodMislead, intensity);
    ant.clock += 1;
    events
}

/// Places the colony: cooperators evenly spaced on the nest rim facing
/// outward, then detractors stacked at the nest center facing the food.
///
/// Placement is deterministic and draws nothing from `rng`; the parameter
/// keeps the shared generator's consumption order explicit.
pub fn spawn_colony<R: Rng + ?Sized>(config: &SimConfig, _rng: &mut R) -> Vec<Ant> {
    let detractors = config.detractor_count();
    let cooperators = config.ant_count - detractors;
    let [nx, ny] = config.nest_center;
    let [fx, fy] = config.food_center;
    let mut ants = Vec::with_capacity(config.ant_count);

    for i in 0..cooperators {
        let angle = TAU * i as f64 / cooperators as f64;
        let heading = normalize_angle(angle);
        ants.push(Ant {
            x: (nx + config.nest_radius * angle.cos()).clamp(0.0, config.width),
            y: (ny + config.nest_radius * angle.sin()).clamp(0.0, config.height),
            heading,
            role: Role::Cooperator,
            mode: Mode::ToFood,
            clock: 0,
            patience: config.patience_max,
            carrying: false,
            decision: heading,
            food_sensed: false,
            stats: AntStats::default(),
        });
    }

    let toward_food = normalize_angle((fy - ny).atan2(fx - nx));
    for _ in 0..detractors {
        ants.push(Ant {
            x: nx,
            y: ny,
            heading: toward_food,
            role: Role::Detractor,
            mode: Mode::Dormant,
            clock: 0,
            patience: 0.0,
            carrying: false,
            decision: toward_food,
            food_sensed: false,
            stats: AntStats::default(),
        });
    }
    ants
}
