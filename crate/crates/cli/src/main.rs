mod commands;
mod pretty;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Binary cubic forms: covariants, orbit invariants, factorization and
/// verification, in exact arithmetic.
///
/// Cubics are given by their plain coefficients `p0,p1,p2,p3`, meaning
/// `p0 x³ + p1 x²y + p2 xy² + p3 y³`. Fields: `rat`, `fp:<p>`,
/// `quad:rat:<D>`, `quad:fp:<p>:<d>`.
#[derive(Debug, Parser)]
#[command(name = "cubix", version)]
pub struct Cli {
    #[command(subcommand)]
    pub cmd: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Field descriptor.
    #[arg(long)]
    pub field: String,
    /// Write the JSON result to this file instead of stdout.
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// Print a human-readable summary instead of JSON on stdout.
    #[arg(long)]
    pub pretty: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Group {
    Sl2,
    Gl2,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Stratum, discriminant, invariant and reducibility.
    Classify {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        cubic: String,
    },
    /// Complete orbit invariant.
    Invariant {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        cubic: String,
        #[arg(long, value_enum, default_value = "sl2")]
        group: Group,
    },
    /// Factorization into irreducibles over the field.
    Factor {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        cubic: String,
        /// Multiply the factors back out and compare with the input.
        #[arg(long)]
        check: bool,
    },
    /// Whether two cubics lie in the same orbit.
    SameOrbit {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        cubic: String,
        #[arg(long, allow_hyphen_values = true)]
        cubic2: String,
        #[arg(long, value_enum, default_value = "sl2")]
        group: Group,
    },
    /// Product of two orbits with the same discriminant.
    Compose {
        #[command(flatten)]
        common: Common,
        /// The common value M of Q_n.
        #[arg(long, allow_hyphen_values = true)]
        disc: String,
        #[arg(long, allow_hyphen_values = true)]
        cubic: String,
        #[arg(long, allow_hyphen_values = true)]
        cubic2: String,
    },
    /// Exhaustive orbit decomposition over a small prime field.
    Census {
        #[command(flatten)]
        common: Common,
        /// Largest prime accepted.
        #[arg(long, default_value_t = cubix::verify::DEFAULT_CENSUS_BOUND)]
        bound: u64,
    },
    /// Seeded randomized verification of the identities.
    Verify {
        #[command(flatten)]
        common: Common,
        /// `all` or the name of one identity.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// A root of the depressed cubic t³ + pt + q.
    Root {
        #[command(flatten)]
        common: Common,
        #[arg(long = "p", allow_hyphen_values = true)]
        p: String,
        #[arg(long = "q", allow_hyphen_values = true)]
        q: String,
    },
}

impl Command {
    pub fn common(&self) -> &Common {
        match self {
            Command::Classify { common, .. }
            | Command::Invariant { common, .. }
            | Command::Factor { common, .. }
            | Command::SameOrbit { common, .. }
            | Command::Compose { common, .. }
            | Command::Census { common, .. }
            | Command::Verify { common, .. }
            | Command::Root { common, .. } => common,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    commands::run(&cli.cmd)
}
