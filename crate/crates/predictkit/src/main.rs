//! predictkit CLI: run the full evaluation pipeline from a TOML
//! configuration.
//!
//! Exit codes: 0 on full success, 2 when some (country, asset) cells failed
//! (see the run manifest), 1 on configuration or data errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use predictkit::report::{run_pipeline, OutputFormat, RunConfig, RunScope};
use predictkit::Error;

#[derive(Parser)]
#[command(
    name = "predictkit",
    version,
    about = "Return-predictability evaluation over annual country/asset panels"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Regression, out-of-sample and backtest tables (1-5, A1).
    Tables(CommonArgs),
    /// The pooled VAR simulation and its histogram files.
    Sim(CommonArgs),
    /// Everything.
    All(CommonArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// TOML run configuration.
    #[arg(long)]
    config: PathBuf,
    /// Override the panel data file.
    #[arg(long)]
    data: Option<PathBuf>,
    /// Override the output directory.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Simulation seed (mandatory for sim runs unless set in the config).
    #[arg(long)]
    seed: Option<u64>,
    /// Simulation replications.
    #[arg(long)]
    reps: Option<usize>,
    /// Output format for the report tables.
    #[arg(long, value_parser = parse_format)]
    format: Option<OutputFormat>,
}

fn parse_format(raw: &str) -> Result<OutputFormat, String> {
    match raw {
        "csv" => Ok(OutputFormat::Csv),
        "markdown" | "md" => Ok(OutputFormat::Markdown),
        other => Err(format!(
            "unknown format '{other}' (expected csv or markdown)"
        )),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (args, scope) = match &cli.command {
        Command::Tables(a) => (a, RunScope::Tables),
        Command::Sim(a) => (a, RunScope::Sim),
        Command::All(a) => (a, RunScope::All),
    };

    let mut config = match RunConfig::load(&args.config) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    if let Some(data) = &args.data {
        config.data.paths = vec![data.clone()];
    }
    if let Some(out) = &args.out {
        config.output.dir = out.clone();
    }
    if let Some(seed) = args.seed {
        config.simulation.seed = Some(seed);
    }
    if let Some(reps) = args.reps {
        config.simulation.reps = reps;
    }
    if let Some(format) = args.format {
        config.output.format = format;
    }

    match run_pipeline(&config, scope) {
        Ok(output) => {
            println!(
                "wrote {} files to {} ({} cells, {} failed stages)",
                output.files.len(),
                output.out_dir.display(),
                output.cells.len(),
                output.failed_cells.len()
            );
            for (country, asset, err) in &output.failed_cells {
                eprintln!(
                    "failed cell {country}/{asset} at {}: {}",
                    err.stage, err.message
                );
            }
            if output.has_failures() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e @ (Error::Config(_) | Error::Io(_))) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
