use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use coact_cli::commands::{self, FuzzArgs, Outcome};
use coact_cli::recipe::{Loader, DEFAULT_MAX_ELEMENTS};
use coact_cli::{CliError, Result};

/// Finite monoids, right congruences and construction checks.
///
/// A SPEC is a Cayley table file, a JSON recipe file, or a builtin name such
/// as U2, Z3, I2, bicyclic or free{a,b}. COACT_MAX_ELEMENTS caps the size
/// of any materialized carrier (default 5000).
#[derive(Parser)]
#[command(name = "coact", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a monoid and print its Cayley table (or a summary if infinite).
    Build {
        spec: String,
        /// Only validate and report the size.
        #[arg(long)]
        validate_only: bool,
    },
    /// Green's relations R, L, H, D and J.
    Green { spec: String },
    /// Least right congruence generated by a list of label pairs.
    Cong {
        spec: String,
        /// JSON list of pairs, as a file path or inline text.
        pairs: String,
        /// Print an H-sequence from A to B.
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        witness: Option<Vec<String>>,
    },
    /// Run a construction check with key=value parameters.
    Check {
        name: String,
        params: Vec<String>,
        /// Write the report here instead of stdout.
        #[arg(long = "json", value_name = "OUT")]
        json_out: Option<PathBuf>,
        /// Include wall time in the report.
        #[arg(long)]
        timing: bool,
    },
    /// Randomized implication and oracle suites.
    Fuzz {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 7)]
        max_size: usize,
        #[arg(long, default_value_t = 12)]
        max_act: usize,
        #[arg(long, default_value_t = 4)]
        max_pairs: usize,
        /// Deliberately misreport one implication, to exercise failure reporting.
        #[arg(long)]
        inject_fault: bool,
    },
}

fn max_elements() -> Result<usize> {
    match std::env::var("COACT_MAX_ELEMENTS") {
        Err(_) => Ok(DEFAULT_MAX_ELEMENTS),
        Ok(s) => s.trim().parse().map_err(|_| {
            CliError::Usage(format!("COACT_MAX_ELEMENTS must be a number, got {s:?}"))
        }),
    }
}

fn run(cli: Cli) -> Result<Outcome> {
    let loader = Loader::new(max_elements()?);
    match cli.command {
        Command::Build {
            spec,
            validate_only,
        } => commands::build(&loader, &spec, validate_only),
        Command::Green { spec } => commands::green_report(&loader, &spec),
        Command::Cong {
            spec,
            pairs,
            witness,
        } => {
            let w = witness.as_deref().map(|w| (w[0].as_str(), w[1].as_str()));
            commands::cong(&loader, &spec, &pairs, w)
        }
        Command::Check {
            name,
            params,
            json_out,
            timing,
        } => commands::check(&loader, &name, &params, json_out.as_deref(), timing),
        Command::Fuzz {
            seed,
            count,
            max_size,
            max_act,
            max_pairs,
            inject_fault,
        } => Ok(commands::fuzz_summary(FuzzArgs {
            seed,
            count,
            max_size,
            max_act,
            max_pairs,
            inject_fault,
        })),
    }
}

fn fail(err: &CliError) -> ExitCode {
    eprintln!("{}", err.to_json());
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => return fail(&CliError::Usage(e.to_string())),
    };
    match run(cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            if out.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => fail(&e),
    }
}
