use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "rainbow",
    version,
    about = "Rainbow trees, Steiner distances and 3-rainbow colorings of graph operations"
)]
pub struct Cli {
    /// Worker threads for checking and solving; 1 runs sequentially with
    /// identical results.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,

    /// Write a run manifest (inputs with digests, parameters, outputs, wall
    /// time) to this file.
    #[arg(long, global = true)]
    pub manifest: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a named family member, or a random connected graph.
    Gen(GenArgs),
    /// Build a product or join of two graph files.
    Product(ProductArgs),
    /// Color a derived graph from colorings of its operands.
    Color(Box<ColorArgs>),
    /// Check a coloring: exit 0 when every k-set has a rainbow tree.
    Verify(VerifyArgs),
    /// Compute rx_k exactly, or an interval when the budget runs out.
    Solve(SolveArgs),
    /// 3-Steiner diameter, diameter and optional per-triple distances.
    Sdiam(SdiamArgs),
    /// Known value or bound of rx_3 for a family member.
    Oracle(FamilyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum Family {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Star,
    Empty,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    /// Order (path, cycle, complete, empty) or number of leaves (star).
    #[arg(long)]
    pub n: Option<usize>,
    /// First side of a complete bipartite graph.
    #[arg(long)]
    pub s: Option<usize>,
    /// Second side of a complete bipartite graph.
    #[arg(long)]
    pub t: Option<usize>,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_enum, required_unless_present = "random")]
    pub family: Option<Family>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub s: Option<usize>,
    #[arg(long)]
    pub t: Option<usize>,
    /// Random connected graph on `--n` vertices instead of a family.
    #[arg(long, conflicts_with = "family", requires = "n")]
    pub random: bool,
    /// Probability of each non-tree pair in a random graph.
    #[arg(long, default_value_t = 0.3, requires = "random")]
    pub density: f64,
    /// Seed for random graphs.
    #[arg(long, default_value_t = 0, requires = "random")]
    pub seed: u64,
    #[arg(short, long)]
    pub output: PathBuf,
    #[arg(long)]
    pub dot: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProductKind {
    Cartesian,
    Strong,
    Lex,
    Join,
}

#[derive(Debug, Args)]
pub struct ProductArgs {
    #[arg(long, value_enum)]
    pub kind: ProductKind,
    #[arg(long)]
    pub g: PathBuf,
    #[arg(long)]
    pub h: PathBuf,
    #[arg(short, long)]
    pub output: PathBuf,
    /// Vertex coordinates and edge classes of the result.
    #[arg(long)]
    pub map: Option<PathBuf>,
    #[arg(long)]
    pub dot: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Op {
    Cartesian,
    Strong,
    Lex,
    Join,
    Split,
    Subdiv,
    Grid,
}

#[derive(Debug, Args)]
pub struct ColorArgs {
    #[arg(long, value_enum)]
    pub op: Op,
    /// First operand (every op except grid).
    #[arg(long, required_unless_present = "dims")]
    pub g: Option<PathBuf>,
    /// Second operand (products and joins).
    #[arg(long)]
    pub h: Option<PathBuf>,
    /// 3-rainbow coloring of G; solved exactly when absent.
    #[arg(long)]
    pub cg: Option<PathBuf>,
    /// 3-rainbow coloring of H; solved exactly when absent.
    #[arg(long)]
    pub ch: Option<PathBuf>,
    /// Rainbow-connected coloring of H; solved exactly when absent.
    #[arg(long)]
    pub ch_rc: Option<PathBuf>,
    /// Vertex to split.
    #[arg(long)]
    pub vertex: Option<usize>,
    /// Neighbors kept by the split vertex.
    #[arg(long, value_delimiter = ',')]
    pub n1: Vec<usize>,
    /// Neighbors moved to the new vertex.
    #[arg(long, value_delimiter = ',')]
    pub n2: Vec<usize>,
    /// Edge index to subdivide.
    #[arg(long)]
    pub edge: Option<usize>,
    /// Path orders of a grid, e.g. `4,3`.
    #[arg(long, value_delimiter = ',')]
    pub dims: Vec<usize>,
    /// Node budget for solving missing operand colorings.
    #[arg(long, default_value_t = rainbow_core::solver::DEFAULT_BUDGET)]
    pub budget: u64,
    /// Derived graph output.
    #[arg(short, long)]
    pub output: PathBuf,
    /// Coloring output.
    #[arg(long)]
    pub coloring: PathBuf,
    /// Report output; the report is also printed.
    #[arg(long)]
    pub report: Option<PathBuf>,
    #[arg(long)]
    pub dot: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub coloring: PathBuf,
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(2..=3))]
    pub k: u8,
    /// Largest palette accepted by the checker (at most 128).
    #[arg(long, default_value_t = rainbow_core::check::DEFAULT_PALETTE_BOUND)]
    pub palette_bound: u32,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(2..=3))]
    pub k: u8,
    #[arg(long, default_value_t = rainbow_core::solver::DEFAULT_BUDGET)]
    pub budget: u64,
    /// Known valid coloring, reported as the upper end if the budget runs out.
    #[arg(long)]
    pub hint: Option<PathBuf>,
    /// Write the witness (or best known) coloring here.
    #[arg(long)]
    pub emit_witness: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SdiamArgs {
    #[arg(long)]
    pub graph: PathBuf,
    /// Write one `{"triple":[a,b,c],"d":k}` line per 3-set.
    #[arg(long)]
    pub triples: Option<PathBuf>,
}
