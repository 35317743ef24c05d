//! Command-line front end: `.gsa` definition files in, checker reports out.

pub mod commands;
pub mod gsa;
pub mod report;
pub mod shipped;

use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

pub use gsa::{parse, serialize, ParseError, Workspace};
pub use report::Report;

/// Exit codes.
pub const PASS: i32 = 0;
pub const FAIL: i32 = 1;
pub const USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "superlr", version, about = "Check and build Lie-Rinehart and 3-Lie-Rinehart superalgebras")]
pub struct Cli {
    /// Print the JSON report instead of the text summary.
    #[arg(long, global = true)]
    pub json: bool,
    /// Require cochains to be super skew in every adjacent pair of arguments.
    #[arg(long, global = true)]
    pub strict_alternating: bool,
    /// Use the alternative sign reading where it disagrees with the Koszul rule.
    #[arg(long, global = true)]
    pub literal_signs: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum What {
    Lie,
    #[value(name = "3lie")]
    ThreeLie,
    Lr,
    #[value(name = "3lr")]
    ThreeLr,
    Module,
    Homo,
    Identities,
    Trace,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Op {
    Tensor,
    Extension,
    Semidirect,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TheoryArg {
    Lr,
    #[value(name = "3lr")]
    ThreeLr,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CocycleCheck {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    Transfer,
    Lemma,
    Class,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the axiom checkers on the definitions in a file.
    Verify {
        file: PathBuf,
        #[arg(long, value_enum)]
        what: Vec<What>,
    },
    /// Build the ternary structure induced by a supertrace.
    Induce {
        file: PathBuf,
        #[arg(long)]
        trace: String,
        #[arg(long)]
        structure: Option<String>,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Fix an even element in the first slot of a ternary structure.
    Reduce {
        file: PathBuf,
        /// An even element, e.g. `e1 + 2*e3`.
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        #[arg(long)]
        structure: Option<String>,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Tensor lift, trivial extension or semidirect sum of a ternary structure.
    Construct {
        file: PathBuf,
        #[arg(long, value_enum)]
        op: Op,
        #[arg(long)]
        structure: Option<String>,
        /// `adjoint`, `algebra`, `scalar` or a module name (semidirect only).
        #[arg(long)]
        module: Option<String>,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Dimensions of cochains, cocycles, coboundaries and cohomology in one degree and parity.
    Cohomology {
        file: PathBuf,
        #[arg(long, value_enum)]
        theory: TheoryArg,
        #[arg(long)]
        degree: usize,
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1))]
        parity: u8,
        /// `adjoint` (default), `algebra`, `scalar` or a module name.
        #[arg(long)]
        module: Option<String>,
        #[arg(long)]
        structure: Option<String>,
    },
    /// Cocycle identities, transfer along a supertrace, and cohomology classes.
    Cocycle {
        file: PathBuf,
        #[arg(long, value_enum)]
        check: CocycleCheck,
        #[arg(long)]
        cochain: Option<String>,
        /// Second cochain for `--check class`.
        #[arg(long)]
        other: Option<String>,
        #[arg(long)]
        structure: Option<String>,
        #[arg(long)]
        trace: Option<String>,
        #[arg(long)]
        module: Option<String>,
    },
    /// Check a formal deformation modulo t^(N+1); optionally move it by an automorphism or push it.
    Deform {
        file: PathBuf,
        #[arg(long)]
        order: usize,
        #[arg(long)]
        deformation: Option<String>,
        /// A file holding the automorphism to apply.
        #[arg(long)]
        equiv: Option<PathBuf>,
        #[arg(long)]
        push: bool,
    },
}

/// Output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs a command line (`argv[0]` is the program name).
pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { PASS };
            let text = e.render().to_string();
            return if code == PASS {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let echo: Vec<String> = argv.iter().skip(1).cloned().collect();
    match commands::dispatch(&cli, &echo) {
        Ok(report) => {
            let code = if report.passed { PASS } else { FAIL };
            let stdout = if cli.json { report.to_json() } else { report.summary() };
            Outcome { code, stdout, stderr: String::new() }
        }
        Err(e) => Outcome { code: USAGE, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}
