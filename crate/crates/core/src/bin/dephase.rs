use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qubit_dephasing::mechanisms::{ChannelKind, PhononMode};
use qubit_dephasing::report::{
    self, audit_entries, channel_profile, channel_report, render_audit_csv, render_audit_text, run_montecarlo, run_sweep, ConfigFile, Grid,
    MonteCarloSpec, Regime, SweepSpec,
};
use qubit_dephasing::{Convention, Error, Result};

#[derive(Parser)]
#[command(name = "dephase", version, about = "Dephasing of 31P nuclear-spin qubits in silicon")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum PhononModeArg {
    Exact,
    Factorial,
}

impl From<PhononModeArg> for PhononMode {
    fn from(m: PhononModeArg) -> Self {
        match m {
            PhononModeArg::Exact => PhononMode::ExactIntegral,
            PhononModeArg::Factorial => PhononMode::FactorialApprox,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Dump constants, spin species and silicon parameters as JSON.
    Constants {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report one channel: JSON summary, or the Gamma(t) profile with --format csv.
    Channel {
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        kind: Option<ChannelKind>,
        #[arg(long, default_value = "1e-6:1e4:50:log")]
        grid: Grid,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long, value_enum, default_value = "exact")]
        phonon_mode: PhononModeArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep one parameter of a channel and emit CSV.
    Sweep {
        #[arg(long)]
        kind: ChannelKind,
        #[arg(long)]
        param: String,
        #[arg(long)]
        grid: Grid,
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long, default_value = "static")]
        convention: Convention,
        #[arg(long, value_enum, default_value = "exact")]
        phonon_mode: PhononModeArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Ornstein-Uhlenbeck Monte Carlo against the analytic envelope.
    Montecarlo {
        #[arg(long, default_value = "static")]
        regime: Regime,
        #[arg(long)]
        variance: Option<f64>,
        #[arg(long)]
        tau_c: Option<f64>,
        #[arg(long)]
        t_max: Option<f64>,
        #[arg(long)]
        steps: Option<usize>,
        #[arg(long)]
        trajectories: Option<usize>,
        #[arg(long)]
        grid_points: Option<usize>,
        #[arg(long, env = "SEED", default_value_t = 1)]
        seed: u64,
        /// Compare against an analytic envelope with tau_c multiplied by this factor.
        #[arg(long, default_value_t = 1.0)]
        tau_mismatch: f64,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Where to write the summary JSON (stderr when omitted).
        #[arg(long)]
        summary: Option<PathBuf>,
    },
    /// Recompute the published estimates and grade the agreement.
    Audit {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn load_config(path: &Option<PathBuf>) -> Result<ConfigFile> {
    match path {
        Some(p) => ConfigFile::load(p),
        None => Ok(ConfigFile::default()),
    }
}

fn json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Constants { out } => {
            let mut s = report::constants_json();
            s.push('\n');
            report::write_output(out.as_deref(), &s)
        }
        Command::Channel {
            config,
            kind,
            grid,
            format,
            phonon_mode,
            out,
        } => {
            let cfg = load_config(&config)?;
            let kind = match (&config, kind) {
                (None, None) => Some(ChannelKind::Hyperfine),
                (_, k) => k,
            };
            let ch = cfg.select(kind)?.build()?;
            let mode = phonon_mode.into();
            let text = match format {
                Format::Csv => channel_profile(&ch, mode, &grid.points())?.to_csv(),
                Format::Json => json(&channel_report(&ch, mode)?),
                Format::Text => return Err(Error::Config("channel supports --format json or csv".into())),
            };
            report::write_output(out.as_deref(), &text)
        }
        Command::Sweep {
            kind,
            param,
            grid,
            config,
            convention,
            phonon_mode,
            out,
        } => {
            let spec = SweepSpec {
                base: load_config(&config)?.select(Some(kind))?,
                parameter: param,
                grid,
                convention,
                phonon_mode: phonon_mode.into(),
            };
            report::write_output(out.as_deref(), &run_sweep(&spec)?)
        }
        Command::Montecarlo {
            regime,
            variance,
            tau_c,
            t_max,
            steps,
            trajectories,
            grid_points,
            seed,
            tau_mismatch,
            format,
            out,
            summary,
        } => {
            let mut spec = MonteCarloSpec::preset(regime, seed);
            spec.variance = variance.unwrap_or(spec.variance);
            spec.tau_c = tau_c.unwrap_or(spec.tau_c);
            spec.t_max = t_max.unwrap_or(spec.t_max);
            spec.n_steps = steps;
            spec.n_trajectories = trajectories.unwrap_or(spec.n_trajectories);
            spec.grid_points = grid_points.unwrap_or(spec.grid_points);
            spec.tau_mismatch = tau_mismatch;
            let outcome = run_montecarlo(&spec)?;
            match format {
                Format::Csv => {
                    report::write_output(out.as_deref(), &outcome.csv())?;
                    let s = outcome.summary_json() + "\n";
                    match summary {
                        Some(p) => report::write_output(Some(&p), &s),
                        None => {
                            eprint!("{s}");
                            Ok(())
                        }
                    }
                }
                Format::Json => report::write_output(out.as_deref(), &json(&outcome)),
                Format::Text => Err(Error::Config("montecarlo supports --format csv or json".into())),
            }
        }
        Command::Audit { format, out } => {
            let entries = audit_entries();
            let text = match format {
                Format::Text => render_audit_text(&entries),
                Format::Csv => render_audit_csv(&entries),
                Format::Json => json(&entries),
            };
            report::write_output(out.as_deref(), &text)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::PlanRejected { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}
