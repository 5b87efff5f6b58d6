//! Headless frame renderer writing binary PPM (P6) images.
//!
//! Each pixel takes the color of the cell under its center. A cell is drawn
//! in the color of its strongest channel, blended linearly from the
//! background at intensity 0 to the full channel color at 1000. Nest and
//! food cells are flat markers; ants are single pixels drawn last.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use crate::agents::{Ant, Role};
use crate::config::SimConfig;
use crate::engine::{self, RunResult, Snapshot};
use crate::error::OutputError;
use crate::grid::{CellKind, Channel, PheromoneGrid, MAX_INTENSITY};

pub type Rgb = [u8; 3];

pub const BACKGROUND: Rgb = [0, 0, 0];
pub const HOME: Rgb = [40, 90, 255];
pub const FOOD_COOP: Rgb = [0, 220, 0];
pub const FOOD_MISLEAD: Rgb = [230, 0, 0];
pub const CAUTIONARY: Rgb = [255, 230, 0];
pub const NEST: Rgb = [150, 80, 30];
pub const FOOD: Rgb = [255, 140, 0];
pub const COOPERATOR: Rgb = [255, 255, 255];
pub const DETRACTOR: Rgb = [255, 0, 255];

pub fn channel_color(channel: Channel) -> Rgb {
    match channel {
        Channel::Home => HOME,
        Channel::FoodCoop => FOOD_COOP,
        Channel::FoodMislead => FOOD_MISLEAD,
        Channel::Cautionary => CAUTIONARY,
    }
}

/// An RGB image, rows top to bottom, world `y` growing downward.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frame {
    pub width: usize,
    pub height: usize,
    pub pixels: Vec<u8>,
}

impl Frame {
    pub fn pixel(&self, x: usize, y: usize) -> Rgb {
        let i = 3 * (y * self.width + x);
        [self.pixels[i], self.pixels[i + 1], self.pixels[i + 2]]
    }

    fn put(&mut self, x: usize, y: usize, color: Rgb) {
        let i = 3 * (y * self.width + x);
        self.pixels[i..i + 3].copy_from_slice(&color);
    }

    pub fn write_ppm(&self, mut out: impl Write) -> std::io::Result<()> {
        write!(out, "P6\n{} {}\n255\n", self.width, self.height)?;
        out.write_all(&self.pixels)
    }

    pub fn to_ppm(&self) -> Vec<u8> {
        let mut bytes = Vec::with_capacity(self.pixels.len() + 32);
        self.write_ppm(&mut bytes).expect("writing to a Vec cannot fail");
        bytes
    }
}

/// Color of one cell.
pub fn cell_color(grid: &PheromoneGrid, cell: usize) -> Rgb {
    match grid.kind(cell) {
        CellKind::Nest => return NEST,
        CellKind::Food => return FOOD,
        CellKind::Empty => {}
    }
    let mut winner = None;
    let mut top = 0.0;
    for channel in Channel::ALL {
        let level = grid.level(cell, channel);
        if level > top {
            top = level;
            winner = Some(channel);
        }
    }
    match winner {
        None => BACKGROUND,
        Some(channel) => blend(channel_color(channel), top / MAX_INTENSITY),
    }
}

fn blend(color: Rgb, weight: f64) -> Rgb {
    let weight = weight.clamp(0.0, 1.0);
    std::array::from_fn(|i| {
        let bg = f64::from(BACKGROUND[i]);
        (bg + (f64::from(color[i]) - bg) * weight).round() as u8
    })
}

/// Draws the grid and the ants into a `W × H` frame.
pub fn render_frame(grid: &PheromoneGrid, ants: &[Ant], config: &SimConfig) -> Frame {
    let width = config.width.round() as usize;
    let height = config.height.round() as usize;
    let mut frame = Frame {
        width,
        height,
        pixels: vec![0; width * height * 3],
    };
    let mut colors = vec![None; grid.cell_count()];
    for py in 0..height {
        for px in 0..width {
            let Some(cell) = grid.cell_at(px as f64 + 0.5, py as f64 + 0.5) else {
                continue;
            };
            let color = *colors[cell].get_or_insert_with(|| cell_color(grid, cell));
            frame.put(px, py, color);
        }
    }
    for ant in ants {
        let px = (ant.x as usize).min(width.saturating_sub(1));
        let py = (ant.y as usize).min(height.saturating_sub(1));
        if width > 0 && height > 0 {
            let color = match ant.role {
                Role::Cooperator => COOPERATOR,
                Role::Detractor => DETRACTOR,
            };
            frame.put(px, py, color);
        }
    }
    frame
}

pub fn render_snapshot(snapshot: &Snapshot<'_>, config: &SimConfig) -> Frame {
    render_frame(snapshot.grid, snapshot.ants, config)
}

/// Path of the frame for `step` inside `dir`.
pub fn frame_path(dir: &Path, step: u64) -> PathBuf {
    dir.join(format!("frame_{step:06}.ppm"))
}

pub fn write_frame(frame: &Frame, path: &Path) -> Result<(), OutputError> {
    let file = File::create(path).map_err(OutputError::at(path))?;
    let mut out = BufWriter::new(file);
    frame.write_ppm(&mut out).map_err(OutputError::at(path))?;
    out.flush().map_err(OutputError::at(path))
}

#[derive(Debug, thiserror::Error)]
pub enum RenderError {
    #[error(transparent)]
    Config(#[from] crate::error::ConfigError),
    #[error(transparent)]
    Output(#[from] OutputError),
}

/// Runs `config` and writes a frame at step 0 and every `interval` steps.
pub fn render_frames(config: &SimConfig, interval: u64, dir: &Path) -> Result<(RunResult, Vec<PathBuf>), RenderError> {
    std::fs::create_dir_all(dir).map_err(OutputError::at(dir))?;
    let mut written = Vec::new();
    let mut failure = None;
    let result = engine::run_observed(config, Some(interval.max(1)), |snapshot| {
        if failure.is_some() {
            return;
        }
        let path = frame_path(dir, snapshot.step);
        match write_frame(&render_snapshot(&snapshot, config), &path) {
            Ok(()) => written.push(path),
            Err(err) => failure = Some(err),
        }
    })?;
    if let Some(err) = failure {
        return Err(err.into());
    }
    Ok((result, written))
}
