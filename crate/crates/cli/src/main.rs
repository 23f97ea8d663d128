//! `covpauli`: capacities and capacity bounds of the covariant Pauli channel.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
//! 3 I/O error.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use covpauli_core::oracle::{run_all, VerifyConfig};
use covpauli_core::report::{fmt_num, figure_data, scan, scan_csv, FigureOptions};
use covpauli_core::{CapacityReport, ChannelParams, Figure, OptimizerConfig};

#[derive(Parser)]
#[command(name = "covpauli", version, about = "Capacities of the covariant Pauli qubit channel")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate every capacity and bound at one parameter point.
    Point {
        #[arg(long, allow_negative_numbers = true)]
        p0: f64,
        #[arg(long, allow_negative_numbers = true)]
        p3: f64,
        /// Print JSON instead of aligned text.
        #[arg(long)]
        json: bool,
        /// Points per axis of the optimizer's seeding grid.
        #[arg(long, default_value_t = 201)]
        opt_grid: usize,
    },
    /// Write a CSV row for every feasible point of an N x N lattice.
    Scan {
        #[arg(long, default_value_t = 201)]
        grid: usize,
        #[arg(long)]
        out: PathBuf,
        /// Skip the single-shot optimizer and drop the `lower` column.
        #[arg(long)]
        skip_lower: bool,
        #[arg(long, default_value_t = 201)]
        opt_grid: usize,
    },
    /// Write plot-ready CSV data for one figure into a directory.
    Figure {
        /// fig2, fig3, fig4 or fig5.
        which: String,
        #[arg(long)]
        out: PathBuf,
        /// Lattice size for the region maps.
        #[arg(long, default_value_t = 201)]
        grid: usize,
        /// Points along s = p0 + p3 for fig5.
        #[arg(long, default_value_t = 101)]
        samples: usize,
        /// Asymmetry values for fig5.
        #[arg(long, value_delimiter = ',', default_values_t = [0.2, 0.4, 0.6, 0.8, 1.0])]
        eps: Vec<f64>,
        /// Points along the contour and boundary polylines.
        #[arg(long, default_value_t = 100)]
        curve_samples: usize,
        #[arg(long, default_value_t = 201)]
        opt_grid: usize,
    },
    /// Run the brute-force oracles against the closed forms.
    Verify {
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        /// Random parameter points per oracle.
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
}

enum Failure {
    Verification,
    Usage(String),
    Io(String),
}

impl From<covpauli_core::Error> for Failure {
    fn from(e: covpauli_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn optimizer(grid: usize) -> Result<OptimizerConfig, Failure> {
    if grid < 2 {
        return Err(Failure::Usage(format!("optimizer grid {grid} must be at least 2")));
    }
    Ok(OptimizerConfig {
        grid_resolution: grid,
        ..Default::default()
    })
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<(), Failure> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let io_err = |e: io::Error| Failure::Io(e.to_string());
    match cli.command {
        Command::Point { p0, p3, json, opt_grid } => {
            let p = ChannelParams::new(p0, p3)?;
            let report = CapacityReport::compute(&p, &optimizer(opt_grid)?);
            if json {
                let text = serde_json::to_string_pretty(&report.rounded()).expect("report serializes");
                writeln!(out, "{text}").map_err(io_err)?;
            } else {
                write!(out, "{}", report.to_text()).map_err(io_err)?;
            }
        }
        Command::Scan {
            grid,
            out: path,
            skip_lower,
            opt_grid,
        } => {
            let cfg = optimizer(opt_grid)?;
            let rows = scan(grid, (!skip_lower).then_some(&cfg))?;
            write_file(&path, &scan_csv(&rows, !skip_lower))?;
        }
        Command::Figure {
            which,
            out: dir,
            grid,
            samples,
            eps,
            curve_samples,
            opt_grid,
        } => {
            let figure: Figure = which.parse()?;
            let opts = FigureOptions {
                grid,
                samples,
                eps,
                curve_samples,
                optimizer: optimizer(opt_grid)?,
            };
            let files = figure_data(figure, &opts)?;
            fs::create_dir_all(&dir).map_err(|e| Failure::Io(format!("cannot create {}: {e}", dir.display())))?;
            for f in files {
                write_file(&dir.join(&f.name), &f.contents)?;
            }
        }
        Command::Verify { seed, samples } => {
            if samples == 0 {
                return Err(Failure::Usage("--samples must be at least 1".into()));
            }
            let cfg = VerifyConfig {
                seed,
                samples,
                ..Default::default()
            };
            let reports = run_all(&cfg);
            for r in &reports {
                writeln!(
                    out,
                    "{:<24} {} max_abs_deviation={} tolerance={} samples={} seed={}",
                    r.name,
                    if r.passed { "PASS" } else { "FAIL" },
                    fmt_num(r.max_abs_deviation),
                    fmt_num(r.tolerance),
                    r.samples,
                    r.seed
                )
                .map_err(io_err)?;
            }
            if reports.iter().any(|r| !r.passed) {
                return Err(Failure::Verification);
            }
        }
    }
    out.flush().map_err(io_err)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
