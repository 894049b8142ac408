use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use thermal_entanglement::sweep::{self, OutputFormat, Scale, SweepConfig};
use thermal_entanglement::{Error, Spin};

/// Thermal entanglement of a spin-1/2 ⊗ spin-S Heisenberg exchange cell.
#[derive(Parser)]
#[command(version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CellArgs {
    /// Exchange constant J (negative couples antiferrimagnetically)
    #[arg(long = "J", default_value_t = -1.0)]
    coupling: f64,
    /// Spin of the second site, e.g. 1, 3/2 or 1.5
    #[arg(long, default_value = "1")]
    s2: Spin,
    /// Boltzmann constant
    #[arg(long = "kB", default_value_t = 1.0)]
    kb: f64,
}

#[derive(Subcommand)]
enum Command {
    /// Entanglement report over a temperature grid
    #[command(allow_negative_numbers = true)]
    Sweep {
        #[command(flatten)]
        cell: CellArgs,
        #[arg(long, default_value_t = 0.0)]
        t_min: f64,
        #[arg(long, default_value_t = 2.0)]
        t_max: f64,
        /// Number of grid points
        #[arg(long = "n", default_value_t = 201)]
        n_points: usize,
        /// linear or log
        #[arg(long, default_value = "linear")]
        scale: Scale,
        /// csv or json
        #[arg(long, default_value = "csv")]
        format: OutputFormat,
        /// Output file (standard output when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Hamiltonian eigenvalues with degeneracies
    #[command(allow_negative_numbers = true)]
    Spectrum {
        #[command(flatten)]
        cell: CellArgs,
        #[arg(long)]
        json: bool,
    },
    /// Entanglement report at one temperature
    #[command(allow_negative_numbers = true)]
    Point {
        #[command(flatten)]
        cell: CellArgs,
        #[arg(long = "T")]
        temperature: f64,
        #[arg(long)]
        json: bool,
    },
    /// Critical entanglement temperature
    #[command(allow_negative_numbers = true)]
    CriticalTemp {
        #[command(flatten)]
        cell: CellArgs,
        #[arg(long)]
        json: bool,
    },
}

fn run(cli: Cli) -> thermal_entanglement::Result<()> {
    match cli.command {
        Command::Sweep {
            cell,
            t_min,
            t_max,
            n_points,
            scale,
            format,
            out,
        } => {
            let cfg = SweepConfig {
                coupling: cell.coupling,
                s2: cell.s2,
                kb: cell.kb,
                t_min,
                t_max,
                n_points,
                scale,
                format,
                output: out,
            };
            sweep::run_and_write(&cfg)?;
        }
        Command::Spectrum { cell, json } => {
            let table = sweep::spectrum_table(cell.coupling, cell.s2)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&table)?);
            } else {
                print!("{table}");
            }
        }
        Command::Point {
            cell,
            temperature,
            json,
        } => {
            let report = sweep::point_report(cell.coupling, temperature, cell.s2, cell.kb)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                print!("{}", sweep::format_report(&report));
            }
        }
        Command::CriticalTemp { cell, json } => {
            let summary = sweep::critical_temperatures(cell.coupling, cell.s2, cell.kb)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&summary)?);
            } else {
                print!("{summary}");
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err @ Error::InvalidConfig(_)) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}
