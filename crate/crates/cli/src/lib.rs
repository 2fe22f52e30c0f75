//! Batch front end for `mirror-core`: every command builds a [`Report`] of
//! exact values plus pass/fail checks, rendered as text, CSV or JSON.

mod commands;
mod report;

use std::fmt;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

pub use commands::run;
pub use report::{Check, Format, Report, Table};

#[derive(Debug, Parser)]
#[command(name = "mirror-engine", version, about = "Exact mirror-symmetry computations")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Mirror map, Yukawa couplings, n-point function and instanton numbers
    /// of the degree-(n+2) hypersurface in P^(n+1).
    Mirror {
        #[arg(long, value_parser = clap::value_parser!(u32).range(3..=6))]
        dimension: u32,
        /// Truncation order in q (defaults depend on the dimension).
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        order: Option<u32>,
    },
    /// Classical enumerative counts.
    Count {
        #[command(subcommand)]
        which: CountCommand,
    },
    /// Quantum cohomology rings.
    Qring {
        #[command(subcommand)]
        which: QringCommand,
    },
    /// Polar dual and reflexivity of a lattice polytope read from a file
    /// (one vertex per line, integers separated by spaces).
    Polytope { file: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum CountCommand {
    /// Lines on a cubic surface.
    CubicSurfaceLines,
    /// Lines on a generic quintic threefold.
    QuinticLines,
    /// Conics on a generic quintic threefold.
    QuinticConics,
    /// Lines on the Fermat quintic, with excess multiplicities.
    FermatCensus,
    /// Top Chern class of the cotangent bundle of P^n.
    PnCotangent {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
    },
    /// h^0, h^1 and chi of O(a_1) + ... + O(a_k) on P^1.
    Splitting {
        /// Comma-separated degrees, e.g. 2,-1,-1.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        degrees: Vec<i64>,
    },
}

#[derive(Debug, Subcommand)]
pub enum QringCommand {
    /// Quantum cohomology of CP^n.
    Cpn {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        /// Degree up to which associativity defects are measured.
        #[arg(long, default_value_t = 4)]
        order: u32,
    },
    /// Quintic threefold ring fed with the B-model instanton numbers.
    Cy3 {
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..))]
        order: u32,
    },
    /// Flop along the class (a, b, -c) of a synthetic three-divisor model.
    FlopCheck {
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
        #[arg(long, allow_hyphen_values = true)]
        c: i64,
        #[arg(long = "n-gamma", allow_hyphen_values = true)]
        n_gamma: i64,
    },
    /// A-model connection of the rank-one Calabi–Yau n-fold ring.
    Avhs {
        #[arg(long, value_parser = clap::value_parser!(u32).range(3..=6))]
        dimension: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        order: Option<u32>,
    },
}

#[derive(Debug)]
pub enum CliError {
    Core(mirror_core::Error),
    Io(PathBuf, std::io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(p, e) => write!(f, "{}: {e}", p.display()),
        }
    }
}

impl std::error::Error for CliError {}

impl From<mirror_core::Error> for CliError {
    fn from(e: mirror_core::Error) -> Self {
        CliError::Core(e)
    }
}

/// Sizes the global thread pool from `MIRROR_ENGINE_THREADS`, if set.
/// Results do not depend on the thread count.
pub fn configure_threads() {
    if let Some(n) = std::env::var("MIRROR_ENGINE_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        // a second call (e.g. from tests) finds the pool already built
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}
