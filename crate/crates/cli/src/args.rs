use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(name = "quadwalk", version, about = "Exact verification of quadrant walk generating functions")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the output to a file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count quadrant walks by length and endpoint.
    Count(CountArgs),
    /// Show the kernel roots, the orbit of (x, Y0) or the root symmetric functions.
    Kernel(KernelArgs),
    /// Check the steps of the Gessel solution against the walk counts.
    Verify(VerifyArgs),
    /// Check the identities of the weighted multiple-step model.
    Multistep(MultistepArgs),
    /// Apply the symmetric-kernel predicate.
    Classify(ClassifyArgs),
    /// Sequence table, classification table and check summaries.
    Report(ReportArgs),
}

#[derive(Debug, Args)]
pub struct CountArgs {
    /// Model name, e.g. gessel, kreweras, weighted:3.
    #[arg(long)]
    pub model: String,
    #[arg(long = "max-n", value_name = "N")]
    pub max_n: usize,
    /// Restrict to one endpoint, given as `i,j`.
    #[arg(long, value_parser = parse_end)]
    pub end: Option<(usize, usize)>,
}

fn parse_end(s: &str) -> Result<(usize, usize), String> {
    let (i, j) = s.split_once(',').ok_or("expected i,j")?;
    let p = |v: &str| v.trim().parse::<usize>().map_err(|e| format!("{v:?}: {e}"));
    Ok((p(i)?, p(j)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Show {
    Roots,
    Orbit,
    Symfuns,
}

#[derive(Debug, Args)]
pub struct KernelArgs {
    #[arg(long)]
    pub model: String,
    #[arg(long, default_value_t = 8)]
    pub order: i64,
    #[arg(long, value_enum, default_value_t = Show::Roots)]
    pub show: Show,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// orbit, sum, reconstruct, cubic, critical, annihilators,
    /// discriminant, theorem, q0y-bridge or all.
    #[arg(long, default_value = "all")]
    pub check: String,
    #[arg(long, default_value_t = 12)]
    pub order: i64,
}

#[derive(Debug, Args)]
pub struct MultistepArgs {
    #[arg(long, default_value_t = 1)]
    pub lambda: u32,
    #[arg(long, default_value_t = 20)]
    pub order: i64,
    /// orbit, dde or all.
    #[arg(long, default_value = "all")]
    pub check: String,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    /// Every model of the registry.
    #[arg(long, conflicts_with_all = ["model", "scan"])]
    pub all: bool,
    #[arg(long)]
    pub model: Option<String>,
    /// All unweighted nondegenerate small-step sets with a finite group.
    #[arg(long)]
    pub scan: bool,
    /// Order of the root series used for the cross-check.
    #[arg(long, default_value_t = 10)]
    pub order: i64,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    /// Order of the check summaries.
    #[arg(long, default_value_t = 12)]
    pub order: i64,
    /// Last n of the excursion table q(0,0;2n).
    #[arg(long, default_value_t = 12)]
    pub rows: u32,
}
