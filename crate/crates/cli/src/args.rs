use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "solvdeg",
    version,
    about = "Solving-degree and regularity tools for polynomial systems over prime fields"
)]
pub struct Cli {
    /// Emit a JSON report document instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a degree bound.
    Bound(BoundArgs),
    /// Run the Macaulay matrix algorithm on a system file.
    Solve(SolveArgs),
    /// Hilbert-function analysis of a system file.
    Analyze(AnalyzeArgs),
    /// Generate a regularity table r(n+k, n) as TSV.
    Table(TableArgs),
    /// Generate a seeded random system.
    GenRandom(GenRandomArgs),
    /// Run the built-in regression suite.
    VerifyPaper(VerifyArgs),
}

#[derive(Debug, Clone, Copy, Args)]
#[group(required = true, multiple = false)]
pub struct BoundKind {
    /// EGH-type bound for m quadrics (-m, -n, --variant; -d is the extension degree for Weil variants).
    #[arg(long)]
    pub egh: bool,
    /// First non-positive coefficient of the semi-regular series (-n with --degrees, or -k/-m and -d).
    #[arg(long)]
    pub semiregular: bool,
    /// Exact closed form for quadrics with m - n in 2..=5 (-m or -k, and -n).
    #[arg(long)]
    pub closed_form: bool,
    /// Macaulay bound (-n with --degrees, or -m and -d).
    #[arg(long)]
    pub macaulay: bool,
    /// Bound for n+1 generic forms (-n with --degrees, or -d).
    #[arg(long)]
    pub aci: bool,
    /// Bound for many quadrics or cubics (-n, -d).
    #[arg(long)]
    pub largerm: bool,
    /// Bound for generic inhomogeneous systems (-m, -n, --degrees or -d).
    #[arg(long)]
    pub inhomog: bool,
    /// Macaulay expansion of --ell with respect to -d.
    #[arg(long)]
    pub expansion: bool,
    /// Macaulay shift ell^(d) (--ell, -d).
    #[arg(long)]
    pub shift: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Homogeneous,
    Inhomogeneous,
    Weil,
    WeilInhomog,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    #[command(flatten)]
    pub kind: BoundKind,
    /// Number of equations.
    #[arg(short)]
    pub m: Option<u64>,
    /// Number of variables.
    #[arg(short)]
    pub n: Option<u64>,
    /// Excess m - n.
    #[arg(short)]
    pub k: Option<u64>,
    /// Common degree (or extension degree for the Weil variants).
    #[arg(short)]
    pub d: Option<u32>,
    /// Comma-separated degree list.
    #[arg(long, value_delimiter = ',')]
    pub degrees: Option<Vec<u32>>,
    #[arg(long)]
    pub ell: Option<u64>,
    #[arg(long, value_enum, default_value = "homogeneous")]
    pub variant: VariantArg,
}

#[derive(Debug, Clone, Args)]
pub struct SolveLimits {
    /// Largest degree to try.
    #[arg(long)]
    pub max_degree: Option<u32>,
    /// Give up after this many seconds.
    #[arg(long)]
    pub timeout_secs: Option<u64>,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    pub file: PathBuf,
    #[command(flatten)]
    pub limits: SolveLimits,
    /// Eliminate only at this degree instead of running the S-pair check.
    #[arg(long)]
    pub apriori: Option<u32>,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    pub file: PathBuf,
    /// Largest degree for Hilbert-function questions.
    #[arg(long)]
    pub cap: Option<u32>,
    /// Also test whether the homogenizing variable is a nonzerodivisor.
    #[arg(long)]
    pub t_nzd: bool,
    /// Also report the largest degree of the reduced Gröbner basis.
    #[arg(long)]
    pub maxgb: bool,
    #[command(flatten)]
    pub limits: SolveLimits,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// Range of k = m - n, e.g. `2-100` or `2,3,7`.
    #[arg(long, default_value = "2-100")]
    pub ks: String,
    /// Range of n.
    #[arg(long, default_value = "2-26")]
    pub ns: String,
    #[arg(short, default_value_t = 2)]
    pub d: u32,
}

#[derive(Debug, Args)]
pub struct GenRandomArgs {
    #[arg(short)]
    pub m: Option<usize>,
    #[arg(short)]
    pub n: usize,
    /// Common degree.
    #[arg(short)]
    pub d: Option<u32>,
    #[arg(long, value_delimiter = ',')]
    pub degrees: Option<Vec<u32>>,
    #[arg(short, default_value_t = 7919)]
    pub p: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Generate forms instead of dense polynomials.
    #[arg(long)]
    pub homogeneous: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Skip the slow items (large examples and the random-system corpora).
    #[arg(long)]
    pub quick: bool,
}

/// Parses `a-b`, `a..b`, `a..=b`, a single value, or a comma-separated list.
pub fn parse_range(s: &str) -> Result<Vec<usize>, String> {
    let s = s.trim();
    let num = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("{x:?}: {e}"));
    if s.contains(',') {
        return s.split(',').map(num).collect();
    }
    let bounds = if let Some((a, b)) = s.split_once("..=") {
        Some((a, b))
    } else if let Some((a, b)) = s.split_once("..") {
        Some((a, b))
    } else {
        s.split_once('-')
    };
    match bounds {
        Some((a, b)) => {
            let (a, b) = (num(a)?, num(b)?);
            if a > b {
                return Err(format!("empty range {s:?}"));
            }
            Ok((a..=b).collect())
        }
        None => Ok(vec![num(s)?]),
    }
}
