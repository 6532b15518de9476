//! Command-line front end: manifests, subcommands and reports.
//!
//! Exit codes: 0 pass, 1 property violation, 2 invalid input, 3 unmet
//! precondition or hypothesis. `--json` prints one sorted-key JSON object.

mod commands;
mod manifest;

use std::ffi::OsString;
use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

pub use commands::{census, describe, genus, parse_circle, verify, Report, Status, Theorem, Twist};
pub use manifest::{Manifest, PolytopeSpec};

use crate::{Error, Result};

#[derive(Debug, Parser)]
#[command(name = "torus-genus", version, about = "Twisted Dirac indices of quasitoric manifolds")]
pub struct Cli {
    /// Cap on worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimensions, Betti numbers, p₁ and spin status.
    Describe {
        /// Manifest file, or `-` for stdin.
        manifest: PathBuf,
    },
    /// q-coefficients of a twisted index.
    Genus {
        manifest: PathBuf,
        #[arg(long, value_enum, default_value = "none")]
        twist: Twist,
        #[arg(long, env = "GENUS_QORDER_DEFAULT", default_value_t = 4)]
        q_order: usize,
        /// Circle, e.g. "1,2": print Laurent polynomials in t^{1/2}.
        #[arg(long)]
        equivariant: Option<String>,
    },
    /// Checks one of the theorem-level properties.
    Verify {
        manifest: Option<PathBuf>,
        #[arg(long, value_enum)]
        theorem: Theorem,
        #[arg(long, env = "GENUS_QORDER_DEFAULT", default_value_t = 4)]
        q_order: usize,
        /// Dimension of the synthetic ring for `lemma52` without a manifest.
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
    /// Enumerates characteristic matrices over connected sums of simplices.
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        bound: i64,
    },
}

fn load(path: &PathBuf) -> Result<Manifest> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Argument(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Argument(format!("{}: {e}", path.display())))?
    };
    Manifest::parse(&text)
}

fn dispatch(command: &Command) -> Result<Report> {
    match command {
        Command::Describe { manifest } => describe(&load(manifest)?),
        Command::Genus { manifest, twist, q_order, equivariant } => {
            let xi = equivariant.as_deref().map(parse_circle).transpose()?;
            genus(&load(manifest)?, *twist, *q_order, xi.as_deref())
        }
        Command::Verify { manifest, theorem, q_order, n } => {
            let m = manifest.as_ref().map(load).transpose()?;
            verify(m.as_ref(), *theorem, *q_order, *n)
        }
        Command::Census { n, k, bound } => census(*n, *k, *bound),
    }
}

/// Runs a parsed command line and returns the report.
pub fn execute(cli: &Cli) -> Report {
    let run = || dispatch(&cli.command).unwrap_or_else(|e| Report::from_error(&e));
    match cli.threads {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t.max(1)).build() {
            Ok(pool) => pool.install(run),
            Err(e) => Report::from_error(&Error::Argument(format!("thread pool: {e}"))),
        },
        None => run(),
    }
}

/// Entry point for the binary: parses, runs, prints, returns the exit code.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { Status::Invalid as i32 } else { 0 };
        }
    };
    let report = execute(&cli);
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&report.json).expect("serializable"));
    } else if report.status == Status::Pass || report.status == Status::Violation {
        print!("{}", report.text);
    } else {
        eprint!("{}", report.text);
    }
    report.status as i32
}
