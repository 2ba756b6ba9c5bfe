//! `brim` command-line front end.
//!
//! Exit codes: 0 success, 1 computation failure (budget exhausted, colength
//! of a non-primary ideal), 2 verification failure, 3 parse or usage error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{ArgGroup, Parser, Subcommand};

use brim_cli::commands::{
    cmd_br_function, cmd_br_sequence, cmd_colength, cmd_mixed, cmd_multiplicity, cmd_verify,
    load_family, TableMethod, VerifyArgs,
};
use brim_cli::Failure;

#[derive(Parser)]
#[command(
    name = "brim",
    version,
    about = "Exact Buchsbaum-Rim functions and multiplicities of monomial-ideal families"
)]
struct Cli {
    /// Worker threads for parallel evaluation (0 = automatic)
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Colength (number of standard monomials) of each ideal in a family file
    Colength {
        file: PathBuf,
        /// Keep ideals that are not m-primary (lengths may then be infinite)
        #[arg(long)]
        allow_non_primary: bool,
        /// Machine-readable output
        #[arg(long)]
        json: bool,
    },
    /// Hilbert-Samuel multiplicity of each ideal and the Buchsbaum-Rim
    /// multiplicity of the family
    Multiplicity {
        file: PathBuf,
        /// Stabilization budget (base-point advances)
        #[arg(long, default_value_t = 8)]
        budget: u64,
        #[arg(long)]
        allow_non_primary: bool,
        #[arg(long)]
        json: bool,
    },
    /// Mixed multiplicities e_(i_1,...,i_r) of the family
    Mixed {
        file: PathBuf,
        #[arg(long, default_value_t = 8)]
        budget: u64,
        #[arg(long)]
        allow_non_primary: bool,
        #[arg(long)]
        json: bool,
    },
    /// Table of the two-variable Buchsbaum-Rim function Lambda(p, q)
    #[command(group(ArgGroup::new("method").args(["brute", "fast", "both"])))]
    BrFunction {
        file: PathBuf,
        /// Largest p row
        #[arg(long)]
        p_max: u64,
        /// Largest q column
        #[arg(long)]
        q_max: u64,
        /// Brute-force evaluation only
        #[arg(long)]
        brute: bool,
        /// Stratified evaluation only (blank below the region q >= (p+1)r)
        #[arg(long)]
        fast: bool,
        /// Both evaluators, cross-checked cell by cell (default)
        #[arg(long)]
        both: bool,
        #[arg(long)]
        allow_non_primary: bool,
        #[arg(long)]
        json: bool,
    },
    /// Multiplicity sequence e^0, ..., e^(d+r-1) of the family
    BrSequence {
        file: PathBuf,
        #[arg(long, default_value_t = 8)]
        budget: u64,
        /// Evaluate the two-variable function by brute force everywhere
        #[arg(long)]
        brute_force: bool,
        #[arg(long)]
        allow_non_primary: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run the verification checks on a family file or the built-in corpus
    Verify {
        /// Family file to check (omit with --builtin-corpus)
        file: Option<PathBuf>,
        /// Check the built-in corpus of families
        #[arg(long)]
        builtin_corpus: bool,
        /// Run only this check; repeatable (default: all)
        #[arg(long = "check")]
        checks: Vec<String>,
        #[arg(long, default_value_t = 3)]
        p_max: u64,
        #[arg(long, default_value_t = 18)]
        q_max: u64,
        /// Minimum multi-index samples for the coefficient-ideal identities
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 8)]
        budget: u64,
        #[arg(long)]
        allow_non_primary: bool,
        #[arg(long)]
        json: bool,
    },
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Colength {
            file,
            allow_non_primary,
            json,
        } => {
            let parsed = load_family(&file, allow_non_primary)?;
            cmd_colength(&parsed, json)
        }
        Command::Multiplicity {
            file,
            budget,
            allow_non_primary,
            json,
        } => {
            let parsed = load_family(&file, allow_non_primary)?;
            cmd_multiplicity(&parsed, budget, json)
        }
        Command::Mixed {
            file,
            budget,
            allow_non_primary,
            json,
        } => {
            let parsed = load_family(&file, allow_non_primary)?;
            cmd_mixed(&parsed, budget, json)
        }
        Command::BrFunction {
            file,
            p_max,
            q_max,
            brute,
            fast,
            both: _,
            allow_non_primary,
            json,
        } => {
            let method = if brute {
                TableMethod::Brute
            } else if fast {
                TableMethod::Fast
            } else {
                TableMethod::Both
            };
            let parsed = load_family(&file, allow_non_primary)?;
            cmd_br_function(&parsed, p_max, q_max, method, json)
        }
        Command::BrSequence {
            file,
            budget,
            brute_force,
            allow_non_primary,
            json,
        } => {
            let parsed = load_family(&file, allow_non_primary)?;
            cmd_br_sequence(&parsed, budget, brute_force, json)
        }
        Command::Verify {
            file,
            builtin_corpus,
            checks,
            p_max,
            q_max,
            samples,
            budget,
            allow_non_primary,
            json,
        } => {
            let args = VerifyArgs {
                p_max,
                q_max,
                samples,
                budget,
                checks,
                json,
            };
            match (file, builtin_corpus) {
                (Some(path), false) => {
                    let parsed = load_family(&path, allow_non_primary)?;
                    let name = path
                        .file_stem()
                        .map(|s| s.to_string_lossy().into_owned())
                        .unwrap_or_else(|| path.display().to_string());
                    cmd_verify(Some(&parsed), &name, &args)
                }
                (None, true) => cmd_verify(None, "builtin", &args),
                (Some(_), true) => Err(Failure::Usage(
                    "pass either a file or --builtin-corpus, not both".into(),
                )),
                (None, false) => Err(Failure::Usage(
                    "pass a family file or --builtin-corpus".into(),
                )),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 3,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if cli.threads > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global()
        {
            eprintln!("error: could not configure {} threads: {e}", cli.threads);
            return ExitCode::from(3);
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {failure}");
            ExitCode::from(failure.exit_code())
        }
    }
}
