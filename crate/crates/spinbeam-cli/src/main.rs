//! `spinbeam` command line: run parameter sweeps of the reservoir-coupled
//! beam splitter, dump figure presets, and sanity-check configurations.
//!
//! Exit codes: 0 success, 2 configuration error, 3 numeric domain error.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use spinbeam::{
    emit_csv, figure_preset, parse_config, run_sweep, validity_report, Error, InputKind,
    RunConfig, SweepKey, SweepSpec,
};

#[derive(Parser)]
#[command(
    name = "spinbeam",
    about = "Electron beam splitter with spin-orbit arms and a reservoir-coupled lead",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep one parameter over a linear grid and emit a CSV table.
    Sweep {
        /// Config key to sweep (epsilon, alpha, beta, mass, energy,
        /// fermi_energy, temperature_k, length_au/um, junction_au/um).
        #[arg(long)]
        param: String,
        /// First grid value (native unit of the key).
        #[arg(long)]
        from: f64,
        /// Last grid value.
        #[arg(long)]
        to: f64,
        /// Number of grid points (>= 2).
        #[arg(long)]
        steps: usize,
        /// Base configuration file; defaults apply when omitted.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Override the input preparation (bell or mixed).
        #[arg(long)]
        input: Option<String>,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a built-in sweep preset (fig2 through fig6).
    Preset {
        name: String,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Parse a configuration and report validity warnings.
    Check {
        #[arg(long)]
        config: PathBuf,
    },
}

fn load_config(path: &Option<PathBuf>) -> Result<RunConfig, Error> {
    match path {
        None => Ok(RunConfig::default()),
        Some(p) => {
            let text = fs::read_to_string(p)
                .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", p.display())))?;
            parse_config(&text)
        }
    }
}

fn write_records(records: &[spinbeam::SweepRecord], out: &Option<PathBuf>) -> Result<(), Error> {
    let emit = |sink: &mut dyn Write| {
        emit_csv(records, sink).map_err(|e| Error::Invalid(format!("write failed: {e}")))
    };
    match out {
        None => {
            let stdout = std::io::stdout();
            emit(&mut stdout.lock())
        }
        Some(p) => {
            let file = fs::File::create(p)
                .map_err(|e| Error::Invalid(format!("cannot create {}: {e}", p.display())))?;
            let mut writer = std::io::BufWriter::new(file);
            emit(&mut writer)
        }
    }
}

fn run() -> Result<(), Error> {
    let cli = Cli::parse();
    match cli.command {
        Command::Sweep {
            param,
            from,
            to,
            steps,
            config,
            input,
            out,
        } => {
            let mut base = load_config(&config)?;
            if let Some(kind) = input {
                base.input = InputKind::parse(&kind)?;
            }
            let (key, scale) = SweepKey::parse(&param)?;
            let spec = SweepSpec {
                base,
                key,
                from: from * scale,
                to: to * scale,
                steps,
            };
            let records = run_sweep(&spec)?;
            write_records(&records, &out)
        }
        Command::Preset { name, out } => {
            let spec = figure_preset(&name)?;
            let records = run_sweep(&spec)?;
            write_records(&records, &out)
        }
        Command::Check { config } => {
            let cfg = load_config(&Some(config))?;
            let warnings = validity_report(&cfg);
            if warnings.is_empty() {
                println!("ok: configuration is inside the model's validity range");
            } else {
                for w in &warnings {
                    println!("warning: {w}");
                }
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Config { .. } | Error::Invalid(_) => ExitCode::from(2),
                Error::Domain(_) | Error::Integrity(_) => ExitCode::from(3),
            }
        }
    }
}
