use clap::{Parser, Subcommand};
use liemech_cli::{group_command, jolt_command, roots_command, CliError};
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "liemech",
    version,
    about = "Rigid-body mechanics on matrix groups: simulations, root systems, jolt analysis"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a scenario file and write its output files
    Run {
        /// Scenario in the key = value format (see README)
        scenario: PathBuf,
    },
    /// Construct, verify, and classify a crystallographic root system
    Roots {
        /// Family letter A through G
        family: String,
        /// Rank within the family
        rank: usize,
    },
    /// Evaluate one group operation and print the result
    Group {
        /// Operation name, e.g. exp-so3 or catalog
        op: String,
        /// Numeric arguments for the operation
        #[arg(num_args = 0.., allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// Differentiate a trajectory CSV and report jolt peaks and exceedances
    Jolt {
        /// Trajectory file in the simulator's CSV format
        trajectory: PathBuf,
        /// Principal masses, comma separated
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        mass: Vec<f64>,
        /// Principal inertias, comma separated
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        inertia: Vec<f64>,
        /// Force-rate and torque-rate exceedance thresholds
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        thresholds: Option<Vec<f64>>,
    },
}

fn dispatch(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Run { scenario } => {
            let outdir = std::env::var_os("LIEMECH_OUT")
                .map(PathBuf::from)
                .unwrap_or_else(|| PathBuf::from("."));
            liemech_cli::run_command(&scenario, &outdir)
        }
        Command::Roots { family, rank } => roots_command(&family, rank),
        Command::Group { op, args } => group_command(&op, &args),
        Command::Jolt { trajectory, mass, inertia, thresholds } => {
            jolt_command(&trajectory, &mass, &inertia, thresholds.as_deref())
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version displays are successes; everything else is a
            // usage error, exit code 1 rather than clap's default 2.
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                std::process::exit(0);
            }
            eprint!("{e}");
            std::process::exit(1);
        }
    };
    match dispatch(cli) {
        Ok(out) => print!("{out}"),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
