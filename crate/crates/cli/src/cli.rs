//! Command-line definitions.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use monocount_core::algebra::TermOrder;
use monocount_core::boards::{HfSource, OwnSquareMode};

use crate::render::TableFormat;

#[derive(Debug, Parser)]
#[command(
    name = "monocount",
    version,
    about = "Counting by Hilbert functions: board placements and lattice walks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Phi(k, u): placements of k pieces leaving exactly u squares unattacked.
    Queens(QueensArgs),
    /// Closed forms for walk endpoint counts f(d) and distance counts g(d).
    Walks(WalksArgs),
    /// Hilbert series and polynomial of a monomial quotient.
    Hilbert(HilbertArgs),
    /// Brute-force counts that bypass all algebra.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    /// f(d) and g(d) by iterated sumsets.
    Walks(OracleWalksArgs),
    /// Free-square profiles by plain enumeration.
    Queens(OracleQueensArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OwnSquare {
    PaperLiteral,
    ExcludeOccupied,
}

impl From<OwnSquare> for OwnSquareMode {
    fn from(m: OwnSquare) -> Self {
        match m {
            OwnSquare::PaperLiteral => OwnSquareMode::PaperLiteral,
            OwnSquare::ExcludeOccupied => OwnSquareMode::ExcludeOccupied,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum HfSourceArg {
    Auto,
    Targets,
    Profile,
    Hilbert,
}

impl From<HfSourceArg> for HfSource {
    fn from(s: HfSourceArg) -> Self {
        match s {
            HfSourceArg::Auto => HfSource::Auto,
            HfSourceArg::Targets => HfSource::Targets,
            HfSourceArg::Profile => HfSource::Profile,
            HfSourceArg::Hilbert => HfSource::Hilbert,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormatArg {
    Csv,
    Matrix,
    Json,
    Pretty,
}

impl From<TableFormatArg> for TableFormat {
    fn from(f: TableFormatArg) -> Self {
        match f {
            TableFormatArg::Csv => TableFormat::Csv,
            TableFormatArg::Matrix => TableFormat::Matrix,
            TableFormatArg::Json => TableFormat::Json,
            TableFormatArg::Pretty => TableFormat::Pretty,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Pretty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Lex,
    Grlex,
    Grevlex,
}

impl From<OrderArg> for TermOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Lex => TermOrder::Lex,
            OrderArg::Grlex => TermOrder::GradedLex,
            OrderArg::Grevlex => TermOrder::GradedRevLex,
        }
    }
}

/// Where the placements and targets come from.
#[derive(Debug, Clone, Args)]
pub struct BoardArgs {
    /// Board side.
    #[arg(long)]
    pub n: Option<usize>,
    /// queen, rook, bishop, knight or king.
    #[arg(long, default_value = "queen")]
    pub piece: String,
    /// Custom piece, JSON `{"moves": [[dx, dy], ...], "sliding": bool}`.
    #[arg(long, conflicts_with = "piece")]
    pub piece_file: Option<PathBuf>,
    /// Undirected graph as an edge list instead of a board.
    #[arg(long, conflicts_with_all = ["n", "piece_file"])]
    pub graph: Option<PathBuf>,
    /// Whether an occupied square can count as unattacked.
    #[arg(long, value_enum, default_value_t = OwnSquare::PaperLiteral)]
    pub own_square: OwnSquare,
}

#[derive(Debug, Clone, Args)]
pub struct QueensArgs {
    #[command(flatten)]
    pub board: BoardArgs,
    /// Single number of pieces.
    #[arg(long, conflicts_with_all = ["kmin", "kmax"])]
    pub k: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub kmin: usize,
    #[arg(long)]
    pub kmax: Option<usize>,
    /// Largest u reported.
    #[arg(long)]
    pub umax: Option<usize>,
    /// Enumerate every placement instead of one per symmetry class.
    #[arg(long)]
    pub no_symmetry: bool,
    /// Also report HF(k, u).
    #[arg(long)]
    pub hf: bool,
    /// Source of HF(k, u) for the inversion cross-check.
    #[arg(long, value_enum, default_value_t = HfSourceArg::Auto)]
    pub hf_source: HfSourceArg,
    #[arg(long, value_enum, default_value_t = TableFormatArg::Pretty)]
    pub format: TableFormatArg,
    /// Cap on enumeration nodes.
    #[arg(long, env = "MONOCOUNT_NODE_BUDGET")]
    pub node_budget: Option<u64>,
    /// Cap on Hilbert recursion subproblems.
    #[arg(long, env = "MONOCOUNT_HILBERT_BUDGET")]
    pub hilbert_budget: Option<u64>,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
}

#[derive(Debug, Clone, Args)]
pub struct StepArgs {
    /// Step set JSON `{"dimension": m, "steps": [[...], ...]}`.
    #[arg(long)]
    pub steps: Option<PathBuf>,
    /// knight, king, line, leaper, axes3 or tetra3; knight by default.
    #[arg(long, conflicts_with = "steps")]
    pub preset: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct WalksArgs {
    #[command(flatten)]
    pub steps: StepArgs,
    /// Degrees compared with the sumset oracle.
    #[arg(long, default_value_t = 10)]
    pub cross_check_limit: u64,
    /// Order giving in(κ) for g; must refine degree.
    #[arg(long, value_enum, default_value_t = OrderArg::Grlex)]
    pub g_order: OrderArg,
    /// Order on the y-block while eliminating u and x.
    #[arg(long, value_enum, default_value_t = OrderArg::Lex)]
    pub kernel_order: OrderArg,
    /// Order on the y-block while eliminating the homogenizing variable.
    #[arg(long, value_enum, default_value_t = OrderArg::Lex)]
    pub homogeneous_order: OrderArg,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
    /// Write every basis and initial ideal to this directory.
    #[arg(long)]
    pub export_dir: Option<PathBuf>,
    /// Largest number of lattice points the oracle may hold.
    #[arg(long, default_value_t = 1 << 26)]
    pub oracle_cap: usize,
    #[arg(long, env = "MONOCOUNT_HILBERT_BUDGET")]
    pub hilbert_budget: Option<u64>,
    /// Skip the all-pairs Buchberger check on the bases.
    #[arg(long)]
    pub skip_basis_check: bool,
}

#[derive(Debug, Clone, Args)]
pub struct HilbertArgs {
    /// Monomial ideal file.
    #[arg(long)]
    pub ideal: PathBuf,
    /// Variable count when the file has no `vars` line.
    #[arg(long)]
    pub vars: Option<usize>,
    /// Grading JSON `{"degrees": [[...], ...]}`; standard by default.
    #[arg(long)]
    pub grading: Option<PathBuf>,
    /// Hilbert function values listed for d <= dmax.
    #[arg(long, default_value_t = 10)]
    pub dmax: u32,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
    #[arg(long, env = "MONOCOUNT_HILBERT_BUDGET")]
    pub hilbert_budget: Option<u64>,
}

#[derive(Debug, Clone, Args)]
pub struct OracleWalksArgs {
    #[command(flatten)]
    pub steps: StepArgs,
    #[arg(long, default_value_t = 10)]
    pub dmax: u64,
    #[arg(long, default_value_t = 1 << 26)]
    pub oracle_cap: usize,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct OracleQueensArgs {
    #[command(flatten)]
    pub board: BoardArgs,
    #[arg(long)]
    pub k: usize,
    #[arg(long, env = "MONOCOUNT_NODE_BUDGET")]
    pub node_budget: Option<u64>,
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
}
