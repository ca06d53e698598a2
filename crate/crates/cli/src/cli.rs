use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(name = "mis-lab", version, about = "Maximal independent sets in clique-free graphs")]
pub struct Cli {
    /// Seed for every randomized step; echoed in reports.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true, env = "MIS_LAB_THREADS")]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a construction and write it as graph6 or hypergraph JSON.
    Construct(ConstructArgs),
    /// Count maximal independent sets of a graph or 3-graph file.
    Count(CountArgs),
    /// Exhaustive search for an extremal value.
    Search(SearchArgs),
    /// Compare exhaustive values with closed forms over parameter ranges.
    Verify(VerifyArgs),
    /// Reduce k-MIS counting to transversal counting on a triangle-free graph.
    Reduce(ReduceArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Construction {
    Comatching,
    Gadget,
    TightCycle,
    Blowup,
    TheoremA,
    TheoremB,
    Hyper,
    StarHyper,
    Dominating,
    C4Leaves,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Packing {
    Trivial,
    Rs,
}

#[derive(Args, Debug, Serialize)]
pub struct ConstructArgs {
    pub name: Construction,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    /// Packing behind a gadget.
    #[arg(long, value_enum, default_value_t = Packing::Trivial)]
    pub packing: Packing,
    /// Blowup spec JSON.
    #[arg(long)]
    pub spec: Option<PathBuf>,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Also write the vertex partition as JSON.
    #[arg(long)]
    pub parts_out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Graph6,
    Text,
}

#[derive(Args, Debug, Serialize)]
pub struct CountArgs {
    /// graph6 file, or hypergraph JSON (`{"n":..,"edges":..}`).
    #[arg(long)]
    pub graph: PathBuf,
    /// Count only sets of this size.
    #[arg(long)]
    pub k: Option<usize>,
    /// Count transversal sets of the partition given by --parts.
    #[arg(long, requires = "parts")]
    pub transversal: bool,
    #[arg(long)]
    pub parts: Option<PathBuf>,
    /// Refuse graphs containing a clique of this size (exit code 3).
    #[arg(long)]
    pub forbid_clique: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
pub struct SearchArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long, default_value_t = 2)]
    pub r: usize,
    /// Collect extremal witnesses up to isomorphism.
    #[arg(long)]
    pub witnesses: bool,
    #[arg(long, default_value_t = mis_lab::search::DEFAULT_WITNESS_CAP)]
    pub witness_cap: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
pub struct VerifyArgs {
    /// moon-moser, hujter-tuza, nielsen, m3n2, mt-n1 or hyper-m432.
    #[arg(long)]
    pub theorem: String,
    /// Inclusive range such as `4..7`, or a single value.
    #[arg(long, value_parser = parse_range)]
    pub n: RangeInclusive<usize>,
    #[arg(long, value_parser = parse_range)]
    pub k: Option<RangeInclusive<usize>>,
    #[arg(long, value_parser = parse_range)]
    pub t: Option<RangeInclusive<usize>>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
pub struct ReduceArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub k: usize,
    #[arg(long, default_value_t = 100)]
    pub retries: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// `a..b` and `a..=b` are both inclusive; a bare `a` is `a..=a`.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("bad bound {x:?}: {e}"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = num(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok(lo..=hi)
}
