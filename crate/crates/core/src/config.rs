//! Simulation parameters and their JSON form.
//!
//! Every parameter is addressed in JSON by its short symbol (`n`, `N`, `W`,
//! `c`, `f_d`, `rho_max`, ...). Missing keys take the colony defaults listed
//! in [`SimConfig::default`].

use std::f64::consts::PI;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::ConfigError;

/// Full parameter set for one simulation run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SimConfig {
    /// Colony size, cooperators and detractors together.
    #[serde(rename = "n")]
    pub ant_count: usize,
    /// Steps per run.
    #[serde(rename = "N")]
    pub steps: u64,
    #[serde(rename = "W")]
    pub width: f64,
    #[serde(rename = "H")]
    pub height: f64,
    /// Side length of a square pheromone cell.
    #[serde(rename = "c")]
    pub cell_size: f64,
    #[serde(rename = "L_food")]
    pub food_center: [f64; 2],
    #[serde(rename = "r_food")]
    pub food_radius: f64,
    #[serde(rename = "L_nest")]
    pub nest_center: [f64; 2],
    #[serde(rename = "r_nest")]
    pub nest_radius: f64,
    /// Units per second.
    #[serde(rename = "v")]
    pub speed: f64,
    /// Seconds per step.
    #[serde(rename = "dt")]
    pub dt: f64,
    /// Half-angle of the probe fan, radians.
    #[serde(rename = "theta_s_max")]
    pub probe_half_angle: f64,
    #[serde(rename = "ls_max")]
    pub probe_max_length: f64,
    /// Half-width of the uniform heading noise, radians.
    #[serde(rename = "eta")]
    pub noise_half_width: f64,
    /// Per-step decay coefficient of deposition intensity.
    #[serde(rename = "lambda")]
    pub intensity_decay: f64,
    #[serde(rename = "tau_turn")]
    pub turn_interval: u32,
    #[serde(rename = "tau_attack")]
    pub attack_delay: u32,
    /// Probes per direction decision.
    #[serde(rename = "chi")]
    pub probe_count: u32,
    /// Base evaporation rate, intensity units per second.
    #[serde(rename = "k")]
    pub evaporation_rate: f64,
    /// Evaporation multiplier for misleading pheromone.
    #[serde(rename = "m")]
    pub mislead_multiplier: f64,
    /// Fraction of the colony that are detractors.
    #[serde(rename = "f_d")]
    pub detractor_fraction: f64,
    pub defense_enabled: bool,
    /// Maximum patience, steps.
    #[serde(rename = "rho_max")]
    pub patience_max: f64,
    /// Steps for patience to refill from empty.
    #[serde(rename = "t_p")]
    pub patience_refill_steps: u32,
    /// Food bits available; `null` means unbounded.
    pub food_capacity: Option<u64>,
    pub seed: u64,
    pub sample_every: u64,
}

impl Default for SimConfig {
    fn default() -> Self {
        Self {
            ant_count: 1024,
            steps: 50_000,
            width: 1920.0,
            height: 1080.0,
            cell_size: 4.0,
            food_center: [372.0, 36.0],
            food_radius: 16.0,
            nest_center: [960.0, 540.0],
            nest_radius: 20.0,
            speed: 50.0,
            dt: 0.016,
            probe_half_angle: 0.8 * PI,
            probe_max_length: 40.0,
            noise_half_width: 0.1 * PI,
            intensity_decay: 0.01,
            turn_interval: 7,
            attack_delay: 100,
            probe_count: 32,
            evaporation_rate: 1.0,
            mislead_multiplier: 1.0,
            detractor_fraction: 0.0,
            defense_enabled: false,
            patience_max: 250.0,
            patience_refill_steps: 5,
            food_capacity: None,
            seed: 0,
            sample_every: 100,
        }
    }
}

/// JSON keys accepted by [`SimConfig`], in declaration order.
pub const CONFIG_KEYS: &[&str] = &[
    "n",
    "N",
    "W",
    "H",
    "c",
    "L_food",
    "r_food",
    "L_nest",
    "r_nest",
    "v",
    "dt",
    "theta_s_max",
    "ls_max",
    "eta",
    "lambda",
    "tau_turn",
    "tau_attack",
    "chi",
    "k",
    "m",
    "f_d",
    "defense_enabled",
    "rho_max",
    "t_p",
    "food_capacity",
    "seed",
    "sample_every",
];

impl SimConfig {
    /// Checks every structural invariant; returns the first violation.
    pub fn validate(&self) -> Result<(), ConfigError> {
        fn positive(key: &'static str, value: f64) -> Result<(), ConfigError> {
            if value.is_finite() && value > 0.0 {
                Ok(())
            } else {
                Err(ConfigError::invalid(
                    key,
                    format!("must be a finite positive number, got {value}"),
                ))
            }
        }

        positive("W", self.width)?;
        positive("H", self.height)?;
        positive("c", self.cell_size)?;
        positive("r_food", self.food_radius)?;
        positive("r_nest", self.nest_radius)?;
        positive("v", self.speed)?;
        positive("dt", self.dt)?;
        positive("ls_max", self.probe_max_length)?;
        positive("lambda", self.intensity_decay)?;
        positive("rho_max", self.patience_max)?;

        for (key, dim) in [("W", self.width), ("H", self.height)] {
            let cells = dim / self.cell_size;
            if (cells - cells.round()).abs() > 1e-9 {
                return Err(ConfigError::invalid(
                    key,
                    format!("{dim} is not divisible by cell size c = {}", self.cell_size),
                ));
            }
        }

        for (key, [x, y]) in [("L_food", self.food_center), ("L_nest", self.nest_center)] {
            if !(x.is_finite() && y.is_finite()) || x < 0.0 || y < 0.0 || x > self.width || y > self.height {
                return Err(ConfigError::invalid(key, format!("({x}, {y}) lies outside the world")));
            }
        }

        for (key, value) in [
            ("theta_s_max", self.probe_half_angle),
            ("eta", self.noise_half_width),
            ("k", self.evaporation_rate),
            ("m", self.mislead_multiplier),
        ] {
            if !value.is_finite() || value < 0.0 {
                return Err(ConfigError::invalid(
                    key,
                    format!("must be finite and non-negative, got {value}"),
                ));
            }
        }

        if !(0.0..=1.0).contains(&self.detractor_fraction) {
            return Err(ConfigError::invalid(
                "f_d",
                format!("must lie in [0, 1], got {}", self.detractor_fraction),
            ));
        }
        if self.turn_interval == 0 {
            return Err(ConfigError::invalid("tau_turn", "must be at least 1"));
        }
        if self.patience_refill_steps == 0 {
            return Err(ConfigError::invalid("t_p", "must be at least 1"));
        }
        if self.sample_every == 0 {
            return Err(ConfigError::invalid("sample_every", "must be at least 1"));
        }
        if self.detractor_count() > self.ant_count {
            return Err(ConfigError::invalid("f_d", "detractor count exceeds colony size"));
        }
        Ok(())
    }

    /// `round(f_d · n)`.
    pub fn detractor_count(&self) -> usize {
        (self.detractor_fraction * self.ant_count as f64).round() as usize
    }

    pub fn cooperator_count(&self) -> usize {
        self.ant_count.saturating_sub(self.detractor_count())
    }

    pub fn grid_columns(&self) -> usize {
        (self.width / self.cell_size).round() as usize
    }

    pub fn grid_rows(&self) -> usize {
        (self.height / self.cell_size).round() as usize
    }

    /// Distance covered in one step.
    pub fn step_length(&self) -> f64 {
        self.speed * self.dt
    }

    /// Parses a JSON object, applies `overrides` on top and validates.
    pub fn from_json_object(
        mut object: Map<String, Value>,
        overrides: &[(String, Value)],
    ) -> Result<Self, ConfigError> {
        for (key, value) in overrides {
            object.insert(key.clone(), value.clone());
        }
        for key in object.keys() {
            if !CONFIG_KEYS.contains(&key.as_str()) {
                return Err(ConfigError::UnknownKey(key.clone()));
            }
        }
        let config: SimConfig = match serde_json::from_value(Value::Object(object.clone())) {
            Ok(config) => config,
            Err(err) => return Err(blame_key(&object, err)),
        };
        config.validate()?;
        Ok(config)
    }

    /// Returns a copy with one field replaced, addressed by its JSON key.
    pub fn with_field(&self, key: &str, value: Value) -> Result<Self, ConfigError> {
        let Value::Object(object) = serde_json::to_value(self).expect("config serializes") else {
            unreachable!("config serializes to an object");
        };
        Self::from_json_object(object, &[(key.to_string(), value)])
    }
}

/// Finds the key whose value failed to deserialize so the error names it.
fn blame_key(object: &Map<String, Value>, err: serde_json::Error) -> ConfigError {
    for (key, value) in object {
        let mut single = Map::new();
        single.insert(key.clone(), value.clone());
        if let Err(single_err) = serde_json::from_value::<SimConfig>(Value::Object(single)) {
            return ConfigError::TypeMismatch {
                key: key.clone(),
                message: single_err.to_string(),
            };
        }
    }
    ConfigError::TypeMismatch {
        key: "<object>".to_string(),
        message: err.to_string(),
    }
}

/// Parses a `key=value` override. The value is read as JSON when it parses,
/// otherwise as a bare string.
pub fn parse_override(text: &str) -> Result<(String, Value), ConfigError> {
    let (key, raw) = text
        .split_once('=')
        .ok_or_else(|| ConfigError::MalformedOverride(text.to_string()))?;
    let key = key.trim();
    if key.is_empty() {
        return Err(ConfigError::MalformedOverride(text.to_string()));
    }
    let raw = raw.trim();
    let value = serde_json::from_str(raw).unwrap_or_else(|_| Value::String(raw.to_string()));
    Ok((key.to_string(), value))
}

/// Reads a flat JSON object from `path`, applies overrides and validates.
pub fn load_config(path: Option<&Path>, overrides: &[(String, Value)]) -> Result<SimConfig, ConfigError> {
    let object = match path {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
                path: path.to_path_buf(),
                source,
            })?;
            match serde_json::from_str::<Value>(&text) {
                Ok(Value::Object(object)) => object,
                Ok(_) => return Err(ConfigError::NotAnObject(path.to_path_buf())),
                Err(err) => {
                    return Err(ConfigError::Parse {
                        path: path.to_path_buf(),
                        message: err.to_string(),
                    })
                }
            }
        }
        None => Map::new(),
    };
    SimConfig::from_json_object(object, overrides)
}
