use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use jmult::cli::{self, Command, Flags};
use jmult::monomial::MonomialOrder;

#[derive(Parser)]
#[command(
    name = "jmult",
    version,
    about = "Multiplicity sequences, fiber degrees and dual varieties over prime fields"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Reduced Groebner basis of I + K
    Gb(Common),
    /// Dimension, degree and Hilbert series of R/I
    Hilbert(Common),
    /// Cycle contributions and the balance identity
    Multseq(Common),
    /// Fiber ring, analytic spread, r and the reduction-number bound
    Fiber(Common),
    /// Degree of the dual variety of the hypersurface named by `jacobian_of`
    Dual(Common),
    /// Every consistency check available for the problem
    Check(Common),
}

#[derive(Args)]
struct Common {
    /// Problem file (JSON)
    problem: PathBuf,
    #[arg(long)]
    seed: Option<u64>,
    /// Number of consecutive seeds that must agree
    #[arg(long)]
    agree: Option<usize>,
    /// Override the field characteristic
    #[arg(long = "char")]
    characteristic: Option<u64>,
    #[arg(long)]
    json: bool,
    /// Monomial order for `gb`: degrevlex or lex
    #[arg(long)]
    order: Option<MonomialOrder>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, common) = match cli.command {
        Cmd::Gb(c) => (Command::Gb, c),
        Cmd::Hilbert(c) => (Command::Hilbert, c),
        Cmd::Multseq(c) => (Command::Multseq, c),
        Cmd::Fiber(c) => (Command::Fiber, c),
        Cmd::Dual(c) => (Command::Dual, c),
        Cmd::Check(c) => (Command::Check, c),
    };
    let flags = Flags {
        seed: common.seed,
        agree: common.agree,
        characteristic: common.characteristic,
        json: common.json,
        order: common.order,
    };
    let out = cli::run(command, &common.problem, &flags);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    ExitCode::from(out.code as u8)
}
