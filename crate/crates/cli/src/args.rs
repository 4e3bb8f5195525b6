use std::path::PathBuf;

use antiprism_core::complex::DEFAULT_SHELL_CAP;
use antiprism_core::enumeration::{DEFAULT_ENUM_CAP, DEFAULT_STREAM_CAP};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "antiprism",
    version,
    about = "Antiprism triangulations, their polynomials and real-rootedness checks"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

/// Settings shared by every subcommand. Each has an `ANTIPRISM_` variable.
#[derive(Debug, Clone, Args)]
pub struct Global {
    /// Output format for reports and tables.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json, env = "ANTIPRISM_FORMAT")]
    pub format: Format,
    /// Output file (a directory for `subdivide`); stdout when absent.
    #[arg(long, global = true, env = "ANTIPRISM_OUT")]
    pub out: Option<PathBuf>,
    /// Worker threads; all cores when absent.
    #[arg(long, global = true, env = "ANTIPRISM_JOBS")]
    pub jobs: Option<usize>,
    /// Largest n for which objects are listed one by one rather than
    /// counted by formula.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUM_CAP, env = "ANTIPRISM_ENUM_CAP")]
    pub enum_cap: usize,
    /// Largest facet count accepted by the shellability search.
    #[arg(long, global = true, default_value_t = DEFAULT_SHELL_CAP, env = "ANTIPRISM_SHELL_CAP")]
    pub shell_cap: usize,
}

impl Global {
    pub fn validate(&self) -> Result<(), String> {
        if self.enum_cap == 0 || self.enum_cap > DEFAULT_STREAM_CAP {
            return Err(format!("--enum-cap must lie in 1..={DEFAULT_STREAM_CAP}"));
        }
        if self.shell_cap == 0 || self.shell_cap > 63 {
            return Err("--shell-cap must lie in 1..=63".into());
        }
        if self.jobs == Some(0) {
            return Err("--jobs must be positive".into());
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Subdivide a complex given as a facet list.
    Subdivide(SubdivideArgs),
    /// Print a polynomial family row by row.
    Table(TableArgs),
    /// Count multi-pointed partitions or permutations by weight.
    Count(CountArgs),
    /// Sweep a claim over a range of n with exact root certificates.
    Verify(VerifyArgs),
    /// Run every enumeration and construction oracle up to n.
    Crosscheck(NMax),
    /// Describe the limits in force, or an input complex.
    Info(InfoArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Antiprism,
    Barycentric,
    Crossing,
}

#[derive(Debug, Args)]
pub struct SubdivideArgs {
    /// Facet list: one facet per line, `#` starts a comment.
    #[arg(long, env = "ANTIPRISM_INPUT")]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = Method::Antiprism, env = "ANTIPRISM_METHOD")]
    pub method: Method,
    /// How many times to apply the subdivision.
    #[arg(long, default_value_t = 1)]
    pub times: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    /// h-polynomial of sd_A(σ_n).
    H,
    /// Local h-polynomial of sd_A(σ_n).
    Ell,
    /// h-polynomial of sd_A(∂σ_n).
    HBoundary,
    /// h_A(σ_n) minus h_A(∂σ_n).
    Theta,
    /// Coefficients of h_A(σ_n) divided by binomial coefficients.
    Barp,
    /// Coefficients of ℓ_A(σ_n) divided by binomial coefficients.
    Ellbar,
    /// q_{n,r} for n + r <= n-max.
    Qnr,
    /// Interior face counts q_A(n,k).
    Qa,
    /// Transform coefficients p_A(n,k,j), one row per (n,k).
    Pa,
    Eulerian,
    Derangement,
    BinomialEulerian,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(value_enum)]
    pub kind: TableKind,
    #[command(flatten)]
    pub range: NMax,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CountKind {
    /// Multi-pointed partial ordered partitions (faces of sd_A(σ_n)).
    Partial,
    /// Multi-pointed ordered partitions (interior faces).
    Full,
    /// Proper multi-pointed ordered partitions (local h).
    Proper,
    /// Proper multi-pointed partial ordered partitions (h).
    ProperPartial,
    /// Permutations with excedance set {1..k}.
    Excedance,
    /// Derangements with excedance set {1..k}.
    DerangementExcedance,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(value_enum)]
    pub kind: CountKind,
    #[command(flatten)]
    pub range: NMax,
}

#[derive(Debug, Clone, Args)]
pub struct NMax {
    #[arg(long, default_value_t = 7, env = "ANTIPRISM_N_MAX")]
    pub n_max: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// thmA, interlace_chain, conj_thetaA, conj_barp, conj_ellA,
    /// peak_position or all.
    #[arg(long, env = "ANTIPRISM_CLAIM")]
    pub claim: String,
    #[arg(long, default_value_t = 1)]
    pub n_min: usize,
    #[command(flatten)]
    pub range: NMax,
}

#[derive(Debug, Args)]
pub struct InfoArgs {
    /// Facet list to describe.
    #[arg(long, env = "ANTIPRISM_INPUT")]
    pub input: Option<PathBuf>,
}
