use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use toric_cli::{commands, CliError, Instance, Options, SpecSource};

#[derive(Parser)]
#[command(name = "toric", version, about = "Exact toric residues, resultants and subresultants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the flag element of the chosen flag.
    Delta(Common),
    /// Residue of a monomial, a polynomial, or every monomial of critical degree.
    Residue(Common),
    /// Determinant of the resultant complex and the constant c when observable.
    Resultant(Common),
    /// The h-subresultant.
    Subres(Common),
    /// Global residue of a dense system through the toric residue.
    Global(Common),
    /// Run the invariant checks over several specializations.
    Verify(Common),
}

#[derive(Args)]
struct Common {
    #[arg(long)]
    instance: PathBuf,
    /// Monomial of critical degree, e.g. "x3^2*x4^2".
    #[arg(long)]
    h: Option<String>,
    /// Polynomial of critical degree with rational coefficients.
    #[arg(long)]
    poly: Option<String>,
    /// JSON file mapping atom names to rationals.
    #[arg(long, conflicts_with = "random_seed")]
    spec: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    random_seed: u64,
    #[arg(long, default_value_t = 10)]
    trials: usize,
    /// Redraw a degenerate random specialization up to this many times.
    #[arg(long, default_value_t = 0)]
    retry: usize,
    /// Index into the instance's list of flags.
    #[arg(long, default_value_t = 0)]
    flag: usize,
}

impl Common {
    fn options(&self) -> Options {
        Options {
            spec: match &self.spec {
                Some(p) => SpecSource::File(p.clone()),
                None => SpecSource::Seed(self.random_seed),
            },
            retry: self.retry,
            flag: self.flag,
            h: self.h.clone(),
            poly: self.poly.clone(),
            trials: self.trials,
        }
    }
}

fn run(cli: Cli) -> Result<String, CliError> {
    let (common, f): (&Common, fn(&Instance, &Options) -> Result<String, CliError>) = match &cli.command {
        Command::Delta(c) => (c, commands::delta),
        Command::Residue(c) => (c, commands::residue),
        Command::Resultant(c) => (c, commands::resultant),
        Command::Subres(c) => (c, commands::subres),
        Command::Global(c) => (c, commands::global),
        Command::Verify(c) => (c, commands::verify),
    };
    let inst = Instance::load(&common.instance)?;
    f(&inst, &common.options())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
