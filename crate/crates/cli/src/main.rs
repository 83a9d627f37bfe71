//! `sublam`: prove, check and transform sequents and derivations.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

pub const EXIT_NO: u8 = 1;
pub const EXIT_EXHAUSTED: u8 = 2;
pub const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "sublam", version, about = "Lambek calculus with brackets and a subexponential")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
pub struct SystemArgs {
    /// bl1, l1bang, l1bangw or theory
    #[arg(long, default_value = "bl1")]
    pub system: String,
    /// Axioms for `--system theory`, one sequent per line
    #[arg(long)]
    pub theory_file: Option<PathBuf>,
}

#[derive(Args, Clone)]
pub struct BudgetArgs {
    /// Maximum number of rule applications
    #[arg(long)]
    pub budget: Option<usize>,
    /// Maximum number of antecedent items in any sequent
    #[arg(long)]
    pub max_items: Option<usize>,
    /// Seconds before the search gives up
    #[arg(long)]
    pub time_limit: Option<f64>,
}

#[derive(Subcommand)]
enum Command {
    /// Search for a cut-free derivation
    Prove {
        sequent: String,
        #[command(flatten)]
        system: SystemArgs,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        json: bool,
    },
    /// Judge a sentence against a lexicon
    Parse {
        #[arg(long)]
        lexicon: PathBuf,
        sentence: String,
        /// Type to derive (default `S`)
        #[arg(long)]
        target: Option<String>,
        #[arg(long, default_value_t = 256)]
        max_assignments: usize,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        json: bool,
    },
    /// Check the bracket non-negative condition
    Bnnc { sequent: String },
    /// Print the bracket-forgetting projection
    Bfp { sequent: String },
    /// Print the sequent encoding of a grammar
    Encode {
        grammar: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Bounded rewriting from the start symbol to a word
    Rewrite {
        grammar: PathBuf,
        word: String,
        #[arg(long, default_value_t = 12)]
        max_len: usize,
        #[arg(long, default_value_t = 100_000)]
        max_steps: usize,
        /// Also print the bracketed derivation built from the trace
        #[arg(long)]
        derivation: bool,
        #[arg(long)]
        json: bool,
    },
    /// Validate a derivation (JSON or rendered text)
    Check {
        file: PathBuf,
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long)]
        allow_cut: bool,
    },
    /// Eliminate cuts from a derivation
    ElimCut {
        file: PathBuf,
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Prove {
            sequent,
            system,
            budget,
            json,
        } => commands::prove(&sequent, &system, &budget, json),
        Command::Parse {
            lexicon,
            sentence,
            target,
            max_assignments,
            budget,
            json,
        } => commands::parse(&lexicon, &sentence, target.as_deref(), max_assignments, &budget, json),
        Command::Bnnc { sequent } => commands::bnnc(&sequent),
        Command::Bfp { sequent } => commands::bfp(&sequent),
        Command::Encode { grammar, json } => commands::encode(&grammar, json),
        Command::Rewrite {
            grammar,
            word,
            max_len,
            max_steps,
            derivation,
            json,
        } => commands::rewrite(&grammar, &word, max_len, max_steps, derivation, json),
        Command::Check {
            file,
            system,
            allow_cut,
        } => commands::check(&file, &system, allow_cut),
        Command::ElimCut { file, system, json } => commands::elim_cut(&file, &system, json),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
