//! Argument parsing and dispatch for the `smallchar` binary.
//!
//! Exit codes: 0 when every report is verified, 1 on a failed or aborted
//! check, 2 on a usage error (including unknown claim ids).

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use smallchar::claims::{self, Options, CLAIM_IDS, DEFAULT_SEED};
use smallchar::error::Error;
use smallchar::psub::DEFAULT_CAP;
use smallchar::report::Report;
use smallchar::rootsys::{Family, SimpleType};

#[derive(Debug, Parser)]
#[command(name = "smallchar", version, about = "Exact verification of parabolic subgroup scheme claims in characteristic 2 and 3")]
pub struct Cli {
    /// Seed for randomized property checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Cap on closure computations during enumeration.
    #[arg(long, global = true, env = "SMALLCHAR_CAP", default_value_t = DEFAULT_CAP)]
    pub cap: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run one or more named claims (`all` runs every claim).
    Verify {
        #[arg(required = true)]
        ids: Vec<String>,
    },
    /// Intermediate p-subalgebras over a maximal parabolic.
    Classify {
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long)]
        p: u32,
        /// Simple root, 1-based in Bourbaki numbering.
        #[arg(long)]
        alpha: usize,
    },
    /// Pairs (α, β) whose rank-two parabolic is not of Wenzel type.
    Rank2Pairs {
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long)]
        p: u32,
    },
    /// Maximal flag variety tables for E6, E7, E8.
    Tables {
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Md,
    Json,
}

/// Accepts `F4`, or a family letter together with `--rank`.
pub fn parse_type(ty: &str, rank: Option<usize>) -> Result<SimpleType, Error> {
    let ty = ty.trim();
    if ty.len() == 1 {
        let f = ty.chars().next().and_then(Family::from_letter).ok_or_else(|| Error::Parse(format!("unknown family {ty:?}")))?;
        let n = rank.ok_or_else(|| Error::Parse(format!("type {ty} needs --rank")))?;
        return SimpleType::new(f, n);
    }
    let t: SimpleType = ty.parse()?;
    match rank {
        Some(n) if n != t.rank() => Err(Error::Parse(format!("--rank {n} contradicts type {t}"))),
        _ => Ok(t),
    }
}

fn usage(e: impl std::fmt::Display, err: &mut dyn Write) -> i32 {
    let _ = writeln!(err, "error: {e}");
    2
}

fn emit(reports: &[Report], out: &mut dyn Write) -> bool {
    let mut ok = true;
    for r in reports {
        let _ = writeln!(out, "{}", r.to_json_line());
        ok &= r.ok();
    }
    ok
}

fn finish(res: Result<Vec<Report>, Error>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match res {
        Ok(reports) => {
            if emit(&reports, out) {
                0
            } else {
                1
            }
        }
        Err(e @ (Error::Parse(_) | Error::InvalidType(_))) => usage(e, err),
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

/// Parses a whitespace-separated command line (without the program name).
pub fn parse_line(line: &str) -> Result<Cli, clap::Error> {
    Cli::try_parse_from(std::iter::once("smallchar").chain(line.split_whitespace()))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    let opts = Options { seed: cli.seed, cap: cli.cap };
    match cli.command {
        Command::Verify { ids } => {
            let mut wanted: Vec<&str> = vec![];
            for id in &ids {
                if id == "all" {
                    wanted.extend(CLAIM_IDS);
                    continue;
                }
                match claims::parse_claim_id(id) {
                    Ok(id) => wanted.push(id),
                    Err(e) => return usage(format!("{e}; known ids: {}", CLAIM_IDS.join(", ")), err),
                }
            }
            let mut code = 0;
            for (id, res) in claims::run_claims(&wanted, &opts) {
                let c = finish(res.map_err(|e| Error::Inconsistency(format!("{id}: {e}"))), out, err);
                code = code.max(c);
            }
            code
        }
        Command::Classify { ty, rank, p, alpha } => {
            let t = match parse_type(&ty, rank) {
                Ok(t) => t,
                Err(e) => return usage(e, err),
            };
            if alpha == 0 || alpha > t.rank() {
                return usage(format!("--alpha must be in 1..={}", t.rank()), err);
            }
            finish(claims::classify(t, alpha - 1, p, opts.cap).map(|r| vec![r]), out, err)
        }
        Command::Rank2Pairs { ty, rank, p } => {
            let t = match parse_type(&ty, rank) {
                Ok(t) => t,
                Err(e) => return usage(e, err),
            };
            finish(claims::rank2_pairs(t, p).map(|r| vec![r]), out, err)
        }
        Command::Tables { format } => {
            let _ = writeln!(out, "{}", claims::tables(format == Format::Json));
            0
        }
    }
}
