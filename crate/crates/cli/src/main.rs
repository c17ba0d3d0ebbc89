mod config;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use supertypical::{FamilySpec, Superalgebra, Weight};

use crate::config::Config;

#[derive(Parser, Debug)]
#[command(name = "supertypical", version, about = "Central characters, Verma flags and mates for Lie superalgebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Print machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Include per-element detail in text output
    #[arg(long, short, global = true)]
    verbose: bool,

    /// Truncation depth for characters (in root heights)
    #[arg(long, global = true, default_value_t = 4)]
    depth: usize,

    /// Refuse to enumerate Weyl groups larger than this
    #[arg(long, global = true)]
    cap: Option<usize>,

    /// key = value file supplying a default family and cap
    #[arg(long, global = true)]
    config: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
struct WeightArgs {
    /// The weight λ, as comma-separated rationals
    #[arg(long, allow_hyphen_values = true, conflicts_with = "lambda_plus_rho")]
    weight: Option<String>,

    /// λ+ρ instead of λ
    #[arg(long, allow_hyphen_values = true)]
    lambda_plus_rho: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Root data, ρ-vectors and the Weyl group order
    Roots { family: Option<String> },
    /// Typicality of λ
    Classify {
        family: Option<String>,
        #[command(flatten)]
        weight: WeightArgs,
    },
    /// The dot orbit of λ and its central character
    Orbit {
        family: Option<String>,
        #[command(flatten)]
        weight: WeightArgs,
    },
    /// Graded Verma flag of M̃(λ) restricted to g0, or of Ind M(λ)
    Flag {
        family: Option<String>,
        #[command(flatten)]
        weight: WeightArgs,
        /// Induce the g0-Verma module M(λ) instead of restricting M̃(λ)
        #[arg(long)]
        induced: bool,
        /// Also print the truncated character and check it against the flag
        #[arg(long)]
        character: bool,
    },
    /// Decomposition of the restriction flag by g0 central character
    Blocks {
        family: Option<String>,
        #[command(flatten)]
        weight: WeightArgs,
    },
    /// Construct the mate of the central character of λ and verify it
    Mate {
        family: Option<String>,
        #[command(flatten)]
        weight: WeightArgs,
    },
    /// Exhaustive perfect-mate check of (λ, χ(M(λ)))
    VerifyPerfect {
        family: Option<String>,
        #[command(flatten)]
        weight: WeightArgs,
    },
    /// Round trips of Ψ and Φ on all single-Verma flags of the block of λ
    Equiv {
        family: Option<String>,
        #[command(flatten)]
        weight: WeightArgs,
    },
    /// Run the built-in table of known values
    Selftest,
}

pub enum Failure {
    Usage(String),
    Domain(supertypical::Error),
}

impl From<supertypical::Error> for Failure {
    fn from(e: supertypical::Error) -> Self {
        Failure::Domain(e)
    }
}

pub struct Ctx {
    pub json: bool,
    pub verbose: bool,
    pub depth: usize,
    pub alg: Superalgebra,
}

impl Ctx {
    fn weight(&self, args: &WeightArgs) -> Result<Weight, Failure> {
        let (text, shifted) = match (&args.weight, &args.lambda_plus_rho) {
            (Some(w), None) => (w, false),
            (None, Some(w)) => (w, true),
            _ => return Err(Failure::Usage("exactly one of --weight or --lambda-plus-rho is required".into())),
        };
        let w = Weight::parse(text).map_err(|e| Failure::Usage(e.to_string()))?;
        self.alg.data.check_rank(&w)?;
        Ok(if shifted { &w - self.alg.data.rho() } else { w })
    }
}

fn family_of(command: &Command) -> Option<&Option<String>> {
    match command {
        Command::Roots { family }
        | Command::Classify { family, .. }
        | Command::Orbit { family, .. }
        | Command::Flag { family, .. }
        | Command::Blocks { family, .. }
        | Command::Mate { family, .. }
        | Command::VerifyPerfect { family, .. }
        | Command::Equiv { family, .. } => Some(family),
        Command::Selftest => None,
    }
}

fn run(cli: Cli) -> report::Output {
    if let Command::Selftest = cli.command {
        return Ok(report::selftest(cli.json));
    }
    let config = match &cli.config {
        Some(path) => Config::load(path).map_err(Failure::Usage)?,
        None => Config::default(),
    };
    let family = family_of(&cli.command)
        .and_then(|f| f.clone())
        .or(config.family.clone())
        .ok_or_else(|| Failure::Usage("no family given and no default in the config file".into()))?;
    let spec: FamilySpec = family.parse().map_err(|e: supertypical::Error| Failure::Usage(e.to_string()))?;
    let cap = cli.cap.or(config.cap).unwrap_or(supertypical::weyl::DEFAULT_ORDER_CAP);
    let ctx = Ctx { json: cli.json, verbose: cli.verbose, depth: cli.depth, alg: Superalgebra::with_cap(spec, cap)? };

    match &cli.command {
        Command::Roots { .. } => Ok(report::roots(&ctx)),
        Command::Classify { weight, .. } => report::classify(&ctx, &ctx.weight(weight)?),
        Command::Orbit { weight, .. } => report::orbit(&ctx, &ctx.weight(weight)?),
        Command::Flag { weight, induced, character, .. } => {
            report::flag(&ctx, &ctx.weight(weight)?, *induced, *character)
        }
        Command::Blocks { weight, .. } => report::blocks(&ctx, &ctx.weight(weight)?),
        Command::Mate { weight, .. } => report::mate(&ctx, &ctx.weight(weight)?),
        Command::VerifyPerfect { weight, .. } => report::verify_perfect(&ctx, &ctx.weight(weight)?),
        Command::Equiv { weight, .. } => report::equiv(&ctx, &ctx.weight(weight)?),
        Command::Selftest => unreachable!(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
