//! `selfaffine`: classify spectrality of self-affine measures with
//! consecutive collinear digits, emit and check certificates, and gather
//! numerical evidence.
//!
//! Exit codes: 0 success, 1 unreadable or malformed input, 2 violated
//! precondition or failed certificate, 3 internal error.

mod commands;
mod error;
mod json;
mod text;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::CliError;

#[derive(Parser, Debug)]
#[command(name = "selfaffine", version, about = "Spectrality of self-affine measures with collinear digits")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Instance file: {"matrix": [[..]], "v": [..], "q": ..}
    #[arg(long, short)]
    pub input: PathBuf,
    /// Emit JSON on stdout.
    #[arg(long, conflicts_with = "human")]
    pub json: bool,
    /// Emit aligned text on stdout (the default).
    #[arg(long)]
    pub human: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Evidence {
    None,
    Clique,
    Completeness,
}

#[derive(Args, Debug, Clone)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub common: Common,
    /// Also write the JSON report to this file.
    #[arg(long)]
    pub report: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "none")]
    pub evidence: Evidence,
    /// Candidate spectrum depth for completeness evidence.
    #[arg(long, default_value_t = 3)]
    pub depth: usize,
    /// Truncation error target for Fourier transform evaluation.
    #[arg(long, default_value_t = 1e-9)]
    pub tail_eps: f64,
    /// Largest mask level searched for orthogonality; derived from the input when absent.
    #[arg(long)]
    pub jmax: Option<usize>,
    /// Box radius for clique evidence.
    #[arg(long = "box", default_value_t = 10)]
    pub box_radius: u64,
    /// Lattice denominator for clique evidence.
    #[arg(long, default_value_t = 2)]
    pub lattice_den: u64,
    /// Number of probe frequencies `(k / probes) e_1`, k = 1..probes, for completeness evidence.
    #[arg(long, default_value_t = 8)]
    pub probes: usize,
    /// Record wall-clock timings in the report.
    #[arg(long)]
    pub timings: bool,
}

#[derive(Args, Debug, Clone)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, default_value_t = 3)]
    pub depth: usize,
    #[arg(long)]
    pub jmax: Option<usize>,
}

#[derive(Args, Debug, Clone)]
pub struct CliqueArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long = "box", default_value_t = 10)]
    pub box_radius: u64,
    #[arg(long, default_value_t = 2)]
    pub lattice_den: u64,
    #[arg(long)]
    pub jmax: Option<usize>,
}

#[derive(Args, Debug, Clone)]
pub struct SampleArgs {
    /// Instance file.
    #[arg(long, short)]
    pub input: PathBuf,
    #[arg(long, default_value_t = 100_000)]
    pub iters: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Write the CSV here instead of stdout.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: Common,
    /// Report (or bare certificate) JSON to re-verify against the instance.
    #[arg(long, visible_alias = "verify-certificate")]
    pub certificate: PathBuf,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide spectrality and emit a certificate.
    Classify(ClassifyArgs),
    /// Show the Krylov reduction and companion form.
    Decompose(Common),
    /// Construct a mask-zero witness (requires gcd(q, |det M1|) > 1).
    Witness(Common),
    /// Construct and verify the Hadamard triple (requires q | det M1).
    Hadamard(Common),
    /// List a finite candidate spectrum with orthogonality certificates.
    Spectrum(SpectrumArgs),
    /// Maximum certified-orthogonal set on a finite lattice box.
    Clique(CliqueArgs),
    /// Sample the attractor by the chaos game and print CSV.
    Sample(SampleArgs),
    /// Re-verify a certificate from a report.
    Verify(VerifyArgs),
}

fn main() -> ExitCode {
    // usage errors are input errors (exit 1), not clap's default 2
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Classify(a) => commands::classify(&a),
        Command::Decompose(a) => commands::decompose(&a),
        Command::Witness(a) => commands::witness(&a),
        Command::Hadamard(a) => commands::hadamard(&a),
        Command::Spectrum(a) => commands::spectrum(&a),
        Command::Clique(a) => commands::clique(&a),
        Command::Sample(a) => commands::sample(&a),
        Command::Verify(a) => commands::verify(&a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => report_error(&e),
    }
}

fn report_error(e: &CliError) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(e.exit_code() as u8)
}
