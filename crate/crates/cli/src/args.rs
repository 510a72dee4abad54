use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "degenpoly",
    version,
    about = "Exact degenerate Genocchi/Euler/polyexponential tables and identity checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute a coefficient table for one family.
    Compute(ComputeArgs),
    /// Run identity checks and report per-cell results.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Genocchi,
    GenocchiR,
    EulerR,
    PolyGenocchi,
    MultiPolyGenocchi,
    Stirling1,
    MultiPolyexp,
}

impl Family {
    pub fn flag(self) -> &'static str {
        match self {
            Family::Genocchi => "genocchi",
            Family::GenocchiR => "genocchi-r",
            Family::EulerR => "euler-r",
            Family::PolyGenocchi => "poly-genocchi",
            Family::MultiPolyGenocchi => "multi-poly-genocchi",
            Family::Stirling1 => "stirling1",
            Family::MultiPolyexp => "multi-polyexp",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Identity {
    Thm1,
    Cor2,
    Thm3,
    Prop4,
    Eq15,
    Basics,
    All,
}

impl Identity {
    pub fn flag(self) -> &'static str {
        match self {
            Identity::Thm1 => "thm1",
            Identity::Cor2 => "cor2",
            Identity::Thm3 => "thm3",
            Identity::Prop4 => "prop4",
            Identity::Eq15 => "eq15",
            Identity::Basics => "basics",
            Identity::All => "all",
        }
    }
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    #[arg(long)]
    pub n_max: usize,
    /// Order r (genocchi-r, euler-r).
    #[arg(long)]
    pub r: Option<usize>,
    /// Comma-separated index list (poly-genocchi takes exactly one entry).
    #[arg(long, allow_hyphen_values = true)]
    pub ks: Option<String>,
    /// `sym` or a rational `p/q`.
    #[arg(long, default_value = "sym", allow_hyphen_values = true)]
    pub lambda: String,
    /// `sym-x`, `0` or a rational `p/q` (default `sym-x`).
    #[arg(long, allow_hyphen_values = true)]
    pub arg: Option<String>,
    #[arg(long, value_enum, default_value_t = TableFormat::Json)]
    pub format: TableFormat,
    /// Output path; `-` or absent writes to stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Identity::All)]
    pub identity: Identity,
    #[arg(long, default_value_t = 10)]
    pub n_max: usize,
    /// Depth `r` or inclusive range `a..b` used to filter the sweep.
    #[arg(long)]
    pub r: Option<String>,
    /// Comma-separated index list, or `sweep` for the default grid.
    #[arg(long, allow_hyphen_values = true)]
    pub ks: Option<String>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    pub format: ReportFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Evaluate cells one at a time instead of on the thread pool.
    #[arg(long)]
    pub sequential: bool,
    /// Perturb the generating-function families (exercises the failure path).
    #[arg(long, hide = true)]
    pub corrupt_family: bool,
}
