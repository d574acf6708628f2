use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Maximal operators on finite graphs and on the integers: sharp constants,
/// brute-force oracles and searches.
#[derive(Debug, Parser)]
#[command(name = "sharpmax", version)]
pub struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    /// Write the report here instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Estimate the operator norm ||M_G||_p.
    Norm(NormArgs),
    /// Estimate the variation constant C_{G,p}.
    Var(VarArgs),
    /// Closed-form star norm from constant-leaf functions.
    StarFormula(SizeP),
    /// Structured search for ||M_{K_n}||_p.
    CompleteStructured(SizeP),
    /// Table of closed-form constants and bounds for S_n and K_n.
    Constants(SizeOptP),
    /// Large-p quantities and their limits for S_n and K_n.
    Asymptotics(SizeOptP),
    /// Connected graphs on n vertices up to isomorphism.
    Atlas(AtlasArgs),
    /// Checks of the sharp inequalities on Z.
    ZlineCheck(ZlineArgs),
    /// Empirical maximum of Var_p(Mf)/Var_p(f) on Z.
    ConjectureScan(ScanArgs),
    /// Tabulate a star quantity over a range of p.
    Sweep(SweepArgs),
}

#[derive(Debug, Args)]
pub struct GraphSource {
    /// Named graph: complete:N, star:N, path:N, cycle:N, hypercube:D.
    #[arg(long, conflicts_with = "graph_file", required_unless_present = "graph_file")]
    pub graph: Option<String>,

    /// Edge-list file (`n m` header then `u v` lines) or JSON {"n", "edges"}.
    #[arg(long)]
    pub graph_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SearchFlags {
    /// Grid spacing for the brute-force oracle.
    #[arg(long, default_value_t = 0.05)]
    pub step: f64,
    #[arg(long, default_value_t = 32)]
    pub restarts: usize,
    #[arg(long, default_value_t = 500)]
    pub max_iters: usize,
    #[arg(long, default_value_t = 1e-9)]
    pub tolerance: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NormMethod {
    /// Constant-leaf formula (stars only).
    Formula,
    /// Exact maximum over the grid.
    Oracle,
    /// Multi-start coordinate ascent.
    Ascent,
    /// Structured search (stars and complete graphs).
    Structured,
}

#[derive(Debug, Args)]
pub struct NormArgs {
    #[command(flatten)]
    pub source: GraphSource,
    #[arg(long)]
    pub p: f64,
    #[arg(long, value_enum, default_value_t = NormMethod::Ascent)]
    pub method: NormMethod,
    #[command(flatten)]
    pub search: SearchFlags,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VarMethod {
    /// Known closed form (stars at p = 2, complete graphs).
    Formula,
    Oracle,
    Ascent,
}

#[derive(Debug, Args)]
pub struct VarArgs {
    #[command(flatten)]
    pub source: GraphSource,
    #[arg(long)]
    pub p: f64,
    #[arg(long, value_enum, default_value_t = VarMethod::Ascent)]
    pub method: VarMethod,
    #[command(flatten)]
    pub search: SearchFlags,
}

#[derive(Debug, Args)]
pub struct SizeP {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub p: f64,
}

#[derive(Debug, Args)]
pub struct SizeOptP {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub p: Option<f64>,
}

#[derive(Debug, Args)]
pub struct AtlasArgs {
    #[arg(long)]
    pub n: usize,
    /// Also estimate C_{G,p} for every graph at this exponent.
    #[arg(long)]
    pub scan_p: Option<f64>,
    /// Read "disjoint paths" as edge-disjoint instead of vertex-disjoint.
    #[arg(long)]
    pub edge_disjoint: bool,
    /// Where to write the summary CSV of a scan.
    #[arg(long)]
    pub summary: Option<PathBuf>,
    #[command(flatten)]
    pub search: SearchFlags,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ZlineOp {
    /// Var_p(Mf) against C_p ||f||_p.
    VarNorm,
    /// sup|(M~f)'| against sup|f'|/2.
    LipschitzHalf,
    /// sup|(Mf)'| against sup|f'|.
    LipschitzCentered,
    /// The constant C_p alone.
    Cp,
}

#[derive(Debug, Args)]
pub struct ZlineArgs {
    #[arg(long, value_enum)]
    pub op: ZlineOp,
    /// delta, indicator:A:B, tent:H, or a JSON file {"offset", "values"}.
    #[arg(long, default_value = "delta")]
    pub f: String,
    #[arg(long, default_value_t = 1.0)]
    pub p: f64,
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long)]
    pub p: f64,
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    #[arg(long, default_value_t = 12)]
    pub max_support: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1e-11)]
    pub tol: f64,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// JSON run-spec file; replaces the flags below.
    #[arg(long)]
    pub spec: Option<PathBuf>,
    #[arg(long)]
    pub n: Option<usize>,
    /// START:END:STEP
    #[arg(long)]
    pub p_range: Option<String>,
    #[arg(long, value_enum, default_value_t = SweepQuantity::StarNorm)]
    pub quantity: SweepQuantity,
    /// Add the lower and upper bound columns.
    #[arg(long)]
    pub bounds: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepQuantity {
    /// ||M_{S_n}||_p^p from the constant-leaf formula.
    StarNorm,
    /// (||M_{S_n}||_p^*)^p.
    StarNormStar,
    /// The large-p lower bound on ||M_{S_n}||_p^p.
    StarLowerBound,
}
