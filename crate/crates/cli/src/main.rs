use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use ringcodes_cli::report::{Outcome, Report, Timing};
use ringcodes_cli::verify::{self, Faults};
use ringcodes_cli::{commands, search, CliError, JobConfig, Result};

#[derive(Parser)]
#[command(name = "ringcodes", version, about = "Codes over E and F from simplicial complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Job file (TOML or JSON).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Work budget in evaluation units.
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed for randomized campaigns.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Include wall-clock timings in the report.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form parameters of the ring code, its Gray image and its subfield code.
    Params,
    /// Exhaustive weight distributions checked against the closed forms.
    Dist,
    /// Optimality, minimality and self-orthogonality certificates.
    Check,
    /// Run verification campaigns over the configured grid.
    Verify {
        /// Campaign to run; repeatable. Default: all.
        #[arg(long = "campaign")]
        campaigns: Vec<String>,
        #[arg(long, hide = true)]
        inject_fault: Option<String>,
    },
    /// Find distance-optimal codes over the configured grid.
    Search,
}

fn run(cli: &Cli) -> Result<Report> {
    let mut job = match &cli.config {
        Some(p) => JobConfig::load(p)?,
        None => JobConfig::default(),
    };
    if cli.budget.is_some() {
        job.budget = cli.budget;
    }
    if cli.seed.is_some() {
        job.seed = cli.seed;
    }
    let budget = job.budget()?;
    if let Some(j) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build_global()
            .map_err(|e| CliError::Config(e.to_string()))?;
    }
    Ok(match &cli.command {
        Command::Params => commands::params(&job.spec()?),
        Command::Dist => commands::dist(&job.spec()?, &budget)?,
        Command::Check => commands::check(&job.spec()?, &budget)?,
        Command::Verify { campaigns, inject_fault } => {
            let faults = match inject_fault.as_deref() {
                None => Faults::default(),
                Some("closed-form-distance") => Faults { closed_form_distance: true },
                Some(other) => return Err(CliError::Config(format!("unknown fault `{other}`"))),
            };
            let mut grid = job.grid.clone();
            if !campaigns.is_empty() {
                grid.campaigns = campaigns.clone();
            }
            let mut r = Report::new("verify");
            r.campaigns = verify::run(&grid, job.seed.unwrap_or(0), &budget, faults, cli.timing)?;
            if r.campaigns.iter().any(|c| c.mismatches > 0) {
                r.outcome = Outcome::Mismatch;
            }
            r
        }
        Command::Search => {
            let mut r = Report::new("search");
            r.codes = search::search(&job.grid, &budget)?;
            r
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let start = Instant::now();
    let mut report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    if cli.timing {
        report.timing = Some(Timing {
            total_ms: start.elapsed().as_millis() as u64,
        });
    }
    let text = match cli.format {
        Format::Json => match report.to_json() {
            Ok(s) => s,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
        },
        Format::Text => report.to_text(),
    };
    match &cli.out {
        Some(path) => {
            if let Err(source) = std::fs::write(path, &text) {
                let e = CliError::Write { path: path.clone(), source };
                eprintln!("error: {e}");
                return ExitCode::from(e.exit_code());
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(report.outcome.exit_code())
}
