//! Command-line front end: every subcommand prints one JSON document with
//! sorted keys on stdout. Exit status 0 on success, 1 on domain errors
//! (reducible minimal polynomial, failed verification, search without a
//! result), 2 on usage errors (bad arguments, unreadable or malformed
//! input).

mod algebra;
mod demo;
mod diff;
mod galois_cmd;
mod group_cmd;
mod io;
mod session;

use clap::{Args, Parser, Subcommand};
use io::{CliError, Output};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "fieldtower", version, about = "Exact field towers, closures, Galois groups and difference fields")]
struct Cli {
    /// Indented output instead of one line.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Factor a polynomial over a tower.
    Factor {
        /// Tower descriptor (inline JSON or a file).
        #[arg(long)]
        field: String,
        #[arg(long)]
        poly: String,
    },
    /// Grow and inspect a persistent closure session.
    #[command(subcommand)]
    Closure(ClosureCmd),
    /// Extend an embedding of a tower into a closure session and query it.
    Extend(ExtendArgs),
    /// Galois group of a normal tower, or a chain of normal extensions.
    Galois(GaloisArgs),
    /// The non-covering property of a finite group.
    Ncp(NcpArgs),
    /// Goursat data of a subgroup of a direct product.
    Goursat {
        #[arg(long)]
        g1: String,
        #[arg(long)]
        g2: String,
        /// JSON list of pairs of element labels or indices (inline or file).
        #[arg(long)]
        subgroup: String,
    },
    /// Difference fields: automorphism checks, embeddings, extension to the closure.
    #[command(subcommand)]
    Difference(DiffCmd),
    /// Worked examples.
    #[command(subcommand)]
    Demo(DemoCmd),
}

#[derive(Subcommand)]
pub(crate) enum ClosureCmd {
    /// Start a session over a base field or an initial tower.
    Init {
        #[arg(long)]
        session: String,
        /// Base field: Q, Fp:<p> or FpT:<p>.
        #[arg(long, conflicts_with = "tower")]
        base: Option<String>,
        /// Initial tower descriptor (inline JSON or a file).
        #[arg(long)]
        tower: Option<String>,
    },
    /// Adjoin one root of a polynomial.
    Adjoin {
        #[arg(long)]
        session: String,
        #[arg(long)]
        poly: String,
    },
    /// All roots of a polynomial, with multiplicities.
    Roots {
        #[arg(long)]
        session: String,
        #[arg(long)]
        poly: String,
    },
    /// The unique p^k-th root of an element.
    PkRoot {
        #[arg(long)]
        session: String,
        #[arg(long)]
        element: String,
        #[arg(long, default_value_t = 1)]
        k: u32,
    },
    /// Print the session.
    Show {
        #[arg(long)]
        session: String,
    },
    /// Replay the session log on a fresh session and compare.
    Replay {
        #[arg(long)]
        session: String,
        /// Write the replayed session here.
        #[arg(long)]
        out: Option<String>,
    },
}

#[derive(Args)]
pub(crate) struct ExtendArgs {
    /// Source tower descriptor (inline JSON or a file).
    #[arg(long)]
    tower: String,
    /// JSON object from generator names to images in the target.
    #[arg(long)]
    map: String,
    /// Target closure session.
    #[arg(long)]
    target: String,
    /// Adjoin a root of this polynomial to the source closure first
    /// (repeatable, in order).
    #[arg(long)]
    adjoin: Vec<String>,
    /// Element of the source closure to map.
    #[arg(long)]
    query: Option<String>,
    /// Assignment log to re-execute and compare.
    #[arg(long)]
    replay: Option<String>,
}

#[derive(Args)]
#[command(args_conflicts_with_subcommands = true)]
pub(crate) struct GaloisArgs {
    #[command(subcommand)]
    sub: Option<GaloisCmd>,
    #[arg(long)]
    tower: Option<String>,
    /// Number of leading generators forming the base field.
    #[arg(long, default_value_t = 0)]
    base_level: usize,
}

#[derive(Subcommand)]
pub(crate) enum GaloisCmd {
    /// Maximal chain of normal extensions from a normal tower to the normal
    /// closure of a new root.
    Chain {
        #[arg(long)]
        tower: String,
        #[arg(long)]
        adjoin: String,
    },
    /// Fixed field of a subgroup given by element labels.
    Fixed {
        #[arg(long)]
        tower: String,
        /// JSON list of element labels.
        #[arg(long)]
        subgroup: String,
    },
    /// Automorphism extending sigma on K1 admitting no difference embedding of (K2, tau).
    Incompatible {
        #[arg(long)]
        tower: String,
        /// JSON list of generators of K1.
        #[arg(long)]
        k1: String,
        /// JSON list of their images.
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        k2: String,
        #[arg(long)]
        tau: String,
    },
}

#[derive(Args)]
#[command(args_conflicts_with_subcommands = true)]
pub(crate) struct NcpArgs {
    #[command(subcommand)]
    sub: Option<NcpCmd>,
    /// Group spec: C4, S3, A4, D8, Q8, C2xQ8 or table:<file.json>.
    #[arg(long)]
    group: Option<String>,
}

#[derive(Subcommand)]
pub(crate) enum NcpCmd {
    /// Verdicts for G, H and G x H.
    Product {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
    },
}

#[derive(Subcommand)]
pub(crate) enum DiffCmd {
    /// Whether generator images define an automorphism.
    Check {
        #[arg(long)]
        tower: String,
        /// JSON list of images, or object from generator names to images.
        #[arg(long)]
        sigma: String,
    },
    /// First embedding of one difference field into another.
    Embeds {
        #[arg(long)]
        sub: String,
        #[arg(long)]
        sup: String,
    },
    /// Extend the automorphism to a closure session and query it.
    Extend {
        /// Difference field descriptor (inline JSON or a file).
        #[arg(long)]
        df: String,
        #[arg(long)]
        session: String,
        #[arg(long)]
        adjoin: Vec<String>,
        #[arg(long)]
        query: Vec<String>,
    },
}

#[derive(Subcommand)]
pub(crate) enum DemoCmd {
    /// Square roots of primes with an automorphism swapping a chosen subset:
    /// the closure automorphism fixes exactly the others.
    Shadow {
        #[arg(long, value_delimiter = ',', default_values_t = [2u64, 3, 5])]
        primes: Vec<u64>,
        #[arg(long, value_delimiter = ',', default_values_t = [3u64, 5])]
        swap: Vec<u64>,
    },
    /// Splitting fields of x^3 + a x + a with 4a + 27 prime.
    Discriminants {
        #[arg(long, default_value_t = 3)]
        count: usize,
    },
    /// Non-covering verdicts for the standard small groups.
    Groups,
}

fn run(cli: Cli) -> Result<Output, CliError> {
    match cli.command {
        Command::Factor { field, poly } => algebra::factor(&field, &poly),
        Command::Closure(c) => algebra::closure(c),
        Command::Extend(a) => algebra::extend(a),
        Command::Galois(a) => galois_cmd::run(a),
        Command::Ncp(a) => group_cmd::ncp(a),
        Command::Goursat { g1, g2, subgroup } => group_cmd::goursat(&g1, &g2, &subgroup),
        Command::Difference(c) => diff::run(c),
        Command::Demo(c) => demo::run(c),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pretty = cli.pretty;
    io::finish(run(cli), pretty)
}
