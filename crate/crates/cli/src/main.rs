use std::path::{Path, PathBuf};
use std::process::ExitCode;

use antsim::sweep::{run_sweep_with_progress, spotlight_configs_from};
use antsim::{emit_run_csv, emit_sweep_csv, load_config, parse_override, render_frames, SimConfig, SweepSpec};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "antsim", version, about = "Pheromone-foraging colony simulator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run one simulation and write series.csv and final.csv.
    Run(Common),
    /// Run a two-parameter sweep and write sweep.csv.
    Sweep {
        #[arg(value_enum)]
        kind: SweepKind,
        #[command(flatten)]
        common: Common,
        /// Runs per sweep cell; seeds are seed, seed+1, ...
        #[arg(long, default_value_t = 20)]
        runs: usize,
    },
    /// Run one simulation and write a PPM frame every `frames` steps.
    Render {
        #[command(flatten)]
        common: Common,
        /// Steps between frames.
        #[arg(long, default_value_t = 1000)]
        frames: u64,
    },
    /// Run the four named attack configurations, one subdirectory each.
    Spotlight(Common),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SweepKind {
    /// Misleading multiplier m × detractor fraction f_d.
    Attack,
    /// Maximum patience rho_max × refill time t_p, defense on.
    Defense,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Named {
    Alpha,
    Beta,
    Gamma,
    Delta,
}

#[derive(Debug, Args)]
struct Common {
    /// Flat JSON object of configuration fields; missing fields take defaults.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Output directory.
    #[arg(long, default_value = "out")]
    out: PathBuf,
    /// Seed (the first seed for sweeps).
    #[arg(long)]
    seed: Option<u64>,
    /// Start from a named attack configuration before applying overrides.
    #[arg(long, value_enum)]
    preset: Option<Named>,
    /// Configuration override `key=value`; repeatable.
    #[arg(long = "set", value_name = "KEY=VALUE")]
    overrides: Vec<String>,
}

impl Common {
    fn config(&self) -> Result<SimConfig, Box<dyn std::error::Error>> {
        let mut overrides = Vec::new();
        if let Some(named) = self.preset {
            let (_, preset) = &spotlight_configs_from(&SimConfig::default())[named as usize];
            overrides.push(("f_d".to_string(), preset.detractor_fraction.into()));
            overrides.push(("m".to_string(), preset.mislead_multiplier.into()));
        }
        for text in &self.overrides {
            overrides.push(parse_override(text)?);
        }
        if let Some(seed) = self.seed {
            overrides.push(("seed".to_string(), seed.into()));
        }
        Ok(load_config(self.config.as_deref(), &overrides)?)
    }
}

fn print_metrics(label: &str, metrics: &antsim::Metrics) {
    println!(
        "{label}: bits collected/coop {:.4}, delivered/coop {:.4}, frac collected {:.4}, frac delivered {:.4}, second find {:.4}",
        metrics.bits_collected_per_cooperator,
        metrics.bits_delivered_per_cooperator,
        metrics.frac_collected,
        metrics.frac_delivered,
        metrics.second_find_fraction,
    );
}

fn run_one(config: &SimConfig, dir: &Path, label: &str) -> Result<(), Box<dyn std::error::Error>> {
    let result = antsim::run(config)?;
    emit_run_csv(&result, dir)?;
    print_metrics(label, &result.final_metrics);
    Ok(())
}

fn execute(cli: Cli) -> Result<(), Box<dyn std::error::Error>> {
    match cli.command {
        Command::Run(common) => run_one(&common.config()?, &common.out, "run"),
        Command::Sweep { kind, common, runs } => {
            let base = common.config()?;
            let seed = base.seed;
            let spec = match kind {
                SweepKind::Attack => SweepSpec::attack(base, runs, seed),
                SweepKind::Defense => SweepSpec::defense(base, runs, seed),
            };
            let table = run_sweep_with_progress(&spec, |done, total| {
                eprint!("\r{done}/{total} runs");
                if done == total {
                    eprintln!();
                }
            })?;
            let path = emit_sweep_csv(&table, &common.out)?;
            println!("wrote {}", path.display());
            Ok(())
        }
        Command::Render { common, frames } => {
            if frames == 0 {
                return Err("--frames must be at least 1".into());
            }
            let (result, written) = render_frames(&common.config()?, frames, &common.out)?;
            println!("wrote {} frames to {}", written.len(), common.out.display());
            print_metrics("run", &result.final_metrics);
            Ok(())
        }
        Command::Spotlight(common) => {
            let base = common.config()?;
            for (name, config) in spotlight_configs_from(&base) {
                run_one(&config, &common.out.join(name), name)?;
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match execute(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::FAILURE
        }
    }
}
