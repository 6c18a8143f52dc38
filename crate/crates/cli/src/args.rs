//! Command-line grammar.

use std::path::PathBuf;

use atl_core::ade::{Branch, CaseName};
use atl_core::annular::{GeneratorKind, Level};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "atl",
    version,
    about = "Annular Temperley-Lieb calculus with exact cyclotomic arithmetic"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: Global,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Print scalars as decimals instead of exact values.
    #[arg(long, global = true)]
    pub approx: bool,
    /// Digits shown with --approx.
    #[arg(long, global = true, default_value_t = 10)]
    pub digits: usize,
    /// Require every input scalar to lie in Q(ζ_N) and report in that field.
    #[arg(long, global = true, value_name = "N")]
    pub conductor: Option<u32>,
    /// Worker threads for Gram entries and loop counting.
    #[arg(long, global = true, value_name = "N")]
    pub jobs: Option<usize>,
    /// Exit with status 1 when the computed check fails.
    #[arg(long, global = true)]
    pub expect_pass: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Disc Temperley-Lieb algebra.
    #[command(subcommand)]
    Tl(TlCommand),
    /// Annular tangles.
    #[command(subcommand)]
    Annular(AnnularCommand),
    /// Annular TL-modules.
    #[command(subcommand)]
    Module(ModuleCommand),
    /// Dimension series and annular multiplicities.
    #[command(subcommand)]
    Series(SeriesCommand),
    /// Pointed bipartite graphs.
    #[command(subcommand)]
    Graph(GraphCommand),
    /// E6/E7/E8 computations.
    #[command(subcommand)]
    Ade(AdeCommand),
}

#[derive(Debug, Subcommand)]
pub enum TlCommand {
    /// Coefficients of the Jones-Wenzl idempotent p_n.
    Jw {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        delta: String,
    },
    /// Dimension of the irreducible TL_n-module with t through strings.
    Dim {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        t: usize,
        /// Also evaluate at δ = 2cos(π/m).
        #[arg(long, value_name = "M")]
        root: Option<usize>,
    },
    /// The diagram basis of TL_n.
    Basis {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum AnnularCommand {
    /// Count (and optionally list) tangles between two levels.
    Count {
        /// Outer level: a positive integer, + or −.
        #[arg(long, value_parser = parse_level, allow_hyphen_values = true)]
        outer: Level,
        #[arg(long, value_parser = parse_level, allow_hyphen_values = true)]
        inner: Level,
        /// Number of through strings.
        #[arg(long, default_value_t = 0)]
        through: usize,
        #[arg(long)]
        list: bool,
    },
    /// A single generator.
    Generator {
        #[arg(long, value_enum)]
        kind: GenKind,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        i: usize,
    },
    /// Compose two tangles given as JSON files (left ∘ right).
    Compose {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        delta: String,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum GenKind {
    Eps,
    Epsbar,
    F,
    Rho,
    SigmaPlus,
    SigmaMinus,
    RhoHalf,
}

impl From<GenKind> for GeneratorKind {
    fn from(k: GenKind) -> Self {
        match k {
            GenKind::Eps => GeneratorKind::Eps,
            GenKind::Epsbar => GeneratorKind::EpsBar,
            GenKind::F => GeneratorKind::F,
            GenKind::Rho => GeneratorKind::Rho,
            GenKind::SigmaPlus => GeneratorKind::SigmaPlus,
            GenKind::SigmaMinus => GeneratorKind::SigmaMinus,
            GenKind::RhoHalf => GeneratorKind::RhoHalf,
        }
    }
}

#[derive(Debug, Args)]
pub struct ModuleArgs {
    #[arg(long, value_enum, default_value_t = ModuleKindArg::LowWeight)]
    pub kind: ModuleKindArg,
    /// Lowest weight for low-weight modules.
    #[arg(long, default_value_t = 1)]
    pub k: usize,
    /// Rotation eigenvalue ω (ω^k = 1).
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub omega: String,
    /// Circle parameter μ for the mu module.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub mu: String,
    #[arg(long, allow_hyphen_values = true)]
    pub delta: String,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModuleKindArg {
    LowWeight,
    Mu,
    ZeroPlus,
    ZeroMinus,
}

#[derive(Debug, Subcommand)]
pub enum ModuleCommand {
    /// Gram matrix of one level: rank, definiteness, inertia, radical.
    Gram {
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long, value_parser = parse_level, allow_hyphen_values = true)]
        level: Level,
        /// Include the matrix entries.
        #[arg(long)]
        matrix: bool,
    },
    /// Definiteness of every level up to a bound.
    Profile {
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long, default_value_t = 4)]
        max_level: usize,
    },
    /// Orbits of ρ on the level basis.
    Census {
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long)]
        level: usize,
    },
    /// The generic module table with level dimensions.
    Table {
        #[arg(long, default_value_t = 3)]
        k_max: usize,
        #[arg(long, default_value_t = 6)]
        m_max: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum SeriesCommand {
    /// Annular multiplicities a_0..a_R from level dimensions.
    Theta {
        /// Comma-separated dimensions starting with 1.
        #[arg(long, value_delimiter = ',')]
        dims: Vec<i64>,
        #[arg(long)]
        max_r: Option<usize>,
    },
    /// Level dimensions of a module family.
    Dims {
        #[arg(long, value_enum)]
        kind: DimKind,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, default_value_t = 10)]
        order: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum DimKind {
    LowWeight,
    Tl,
    Mu,
    ZeroPm,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GraphSource {
    /// Built-in graph: A<n>, D<n>, E6, E7 or E8.
    #[arg(long)]
    pub builtin: Option<String>,
    /// Graph JSON file.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum GraphCommand {
    /// Annular multiplicity screen.
    Screen {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, default_value_t = 6)]
        max_r: usize,
    },
    /// Rotation orbits and eigenvalue multiplicities on level-k loops.
    Census {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        k: usize,
    },
    /// Loop counts at the basepoint and from all even vertices.
    Loops {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, default_value_t = 6)]
        n: usize,
    },
    /// Characteristic polynomial and norm of ΛΛᵀ.
    Spectrum {
        #[command(flatten)]
        source: GraphSource,
    },
}

#[derive(Debug, Args)]
pub struct CaseArgs {
    #[arg(long, value_enum)]
    pub case: CaseArg,
    #[arg(long, value_enum, default_value_t = BranchArg::Plus)]
    pub branch: BranchArg,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum CaseArg {
    E6,
    E8,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum BranchArg {
    Plus,
    Minus,
}

impl From<CaseArg> for CaseName {
    fn from(c: CaseArg) -> Self {
        match c {
            CaseArg::E6 => CaseName::E6,
            CaseArg::E8 => CaseName::E8,
        }
    }
}

impl From<BranchArg> for Branch {
    fn from(b: BranchArg) -> Self {
        match b {
            BranchArg::Plus => Branch::Plus,
            BranchArg::Minus => Branch::Minus,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum AdeCommand {
    /// The null vector ν and its Gram checks.
    Nullvec {
        #[command(flatten)]
        case: CaseArgs,
    },
    /// Gram determinants of V^{4,ω}_5 at δ = 2cos(π/18).
    E7,
    /// Solvability of the star equation with |z| = 1.
    StarEq {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        k: i64,
        #[arg(long)]
        r: i64,
        #[arg(long, allow_hyphen_values = true)]
        omega: String,
    },
    /// Euler counts and the region bound.
    Euler {
        #[arg(long)]
        p: i64,
        #[arg(long)]
        e: i64,
        #[arg(long)]
        k: i64,
        /// Disc counts to tabulate.
        #[arg(long, default_value_t = 3)]
        max_discs: i64,
    },
    /// Transfer-matrix eigenvalue z = A^{2k} + ωA^{-2k}.
    Transfer {
        #[arg(long)]
        k: usize,
        #[arg(long, allow_hyphen_values = true)]
        omega: String,
        /// A; defaults to the parameter of the chosen case.
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, value_enum, default_value_t = CaseArg::E6)]
        case: CaseArg,
        #[arg(long, value_enum, default_value_t = BranchArg::Plus)]
        branch: BranchArg,
    },
    /// Biunitarity of A·E_1 + A^{-1}·id.
    Biunitary {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        delta: String,
    },
    /// Coefficients of ψ² = Aψ + B·p from the two traces.
    PsiSquare {
        #[arg(long, allow_hyphen_values = true)]
        tau1: String,
        #[arg(long, allow_hyphen_values = true)]
        tau2: String,
    },
    /// Dimensions of the degenerate module levels.
    Degenerate {
        #[arg(long)]
        k: usize,
        /// δ = 2cos(π/n).
        #[arg(long)]
        n: usize,
        /// First degenerate level.
        #[arg(long)]
        first: usize,
        #[arg(long)]
        level: usize,
    },
    /// Relations a)–d) for the lowest weight vector.
    Audit {
        #[command(flatten)]
        case: CaseArgs,
    },
}

pub fn parse_level(s: &str) -> Result<Level, String> {
    match s {
        "+" | "plus" => Ok(Level::Plus),
        "-" | "minus" => Ok(Level::Minus),
        _ => match s.parse::<usize>() {
            Ok(m) if m >= 1 => Ok(Level::Pos(m)),
            _ => Err(format!("level must be a positive integer, + or -, not {s:?}")),
        },
    }
}
