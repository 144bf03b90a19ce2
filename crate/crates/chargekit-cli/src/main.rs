use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use chargekit_cli::commands;

#[derive(Parser)]
#[command(name = "chargekit", version, about = "exact finitely additive charges on [0,1)")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Evaluate a charge on an algebra set expression
    Eval { charge: PathBuf, set: String },
    /// Total variation |mu| and norm of a charge
    Tv { charge: PathBuf },
    /// Absolute continuity both ways and singularity, with witnesses
    Relate { mu: PathBuf, nu: PathBuf },
    /// Lebesgue decomposition of a charge against a family
    Decompose {
        lambda: PathBuf,
        /// Member charge files of the family M
        #[arg(long, required = true, num_args = 1..)]
        against: Vec<PathBuf>,
        /// Optional convex weights (p/q, one per member, summing to 1)
        #[arg(long, num_args = 1..)]
        weights: Vec<String>,
    },
    /// Domination report: aggregate, flags, equivalent subfamily
    Dominate {
        #[arg(required = true, num_args = 1..)]
        members: Vec<PathBuf>,
        /// Optional external charge for the pivot comparison
        #[arg(long)]
        lambda: Option<PathBuf>,
    },
    /// Greedy exhaustion over a family of set expressions
    Exhaust {
        lambda: PathBuf,
        #[arg(required = true, num_args = 1..)]
        sets: Vec<String>,
    },
    /// Enumerate the atoms of a positive charge
    Atoms { lambda: PathBuf },
    /// Completion status of an extended set, or --sequence construction
    Complete {
        lambda: PathBuf,
        set: Option<String>,
        /// Construct the sigma-additive sequence and verify it
        #[arg(long)]
        sequence: bool,
    },
    /// Decide a yan model: certificate (exit 0) or witness (exit 1)
    Yan { model: PathBuf },
    /// Run the bundled fixture suite
    Selftest,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.verb {
        Verb::Eval { charge, set } => commands::cmd_eval(charge, set),
        Verb::Tv { charge } => commands::cmd_tv(charge),
        Verb::Relate { mu, nu } => commands::cmd_relate(mu, nu),
        Verb::Decompose { lambda, against, weights } => {
            commands::cmd_decompose(lambda, against, weights)
        }
        Verb::Dominate { members, lambda } => {
            commands::cmd_dominate(members, lambda.as_deref())
        }
        Verb::Exhaust { lambda, sets } => commands::cmd_exhaust(lambda, sets),
        Verb::Atoms { lambda } => commands::cmd_atoms(lambda),
        Verb::Complete { lambda, set, sequence } => {
            commands::cmd_complete(lambda, set.as_deref(), *sequence)
        }
        Verb::Yan { model } => commands::cmd_yan(model),
        Verb::Selftest => commands::cmd_selftest(),
    };
    match result {
        Ok(report) => {
            print!("{}", report.render());
            ExitCode::from(report.exit_code() as u8)
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code as u8)
        }
    }
}
