use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::output::Format;

/// Exact counts, recurrences and closed forms for octant and quadrant
/// walk sequences.
#[derive(Debug, Parser)]
#[command(name = "tensorwalk", version)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t, global = true)]
    pub format: Format,
    /// JSON file with a custom walk config, CT spec, recurrence or operator,
    /// depending on the subcommand.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Terms of a named sequence; lists the registry when no name is given.
    Seq(SeqArgs),
    /// Lattice-walk counts for a built-in or custom configuration.
    #[command(subcommand)]
    Walk(WalkCmd),
    /// Constant-term sequence CT(Δ·Kⁿ).
    Ct(CtArgs),
    /// Binomial transform of a JSON array read from --input or stdin.
    Bt(BtArgs),
    /// P-recurrences: unroll, verify, guess, divide.
    #[command(subcommand)]
    Rec(RecCmd),
    /// Linear differential operators.
    #[command(subcommand)]
    Ode(OdeCmd),
    /// Hypergeometric closed forms of the generating functions.
    #[command(subcommand)]
    Closedform(ClosedformCmd),
    /// Asymptotic constant of the octant excursions.
    Asym(AsymArgs),
    /// Brute-force combinatorial oracles.
    #[command(subcommand)]
    Oracle(OracleCmd),
    /// Branching multiplicities and the restriction identities.
    #[command(subcommand)]
    Branch(BranchCmd),
    /// Run the regression suite.
    Check(CheckArgs),
}

#[derive(Debug, Args)]
pub struct SeqArgs {
    /// Registry name or OEIS tag (case-insensitive).
    pub name: Option<String>,
    #[arg(long, default_value_t = 10)]
    pub terms: usize,
    /// walk, ct, rec, bt, formula or oracle.
    #[arg(long, default_value = "walk")]
    pub engine: String,
}

#[derive(Debug, Args)]
pub struct WalkSource {
    /// Built-in configuration; ignored when --config is given.
    #[arg(long, default_value = "octant_g2")]
    pub builtin: String,
    /// Number of free zero steps for octant_g2 and quadrant_sl3.
    #[arg(long, default_value_t = 0)]
    pub k: u64,
}

#[derive(Debug, Subcommand)]
pub enum WalkCmd {
    /// Walks returning to the start, lengths 0..=n.
    Excursions {
        #[command(flatten)]
        source: WalkSource,
        #[arg(long)]
        n: usize,
    },
    /// Endpoint counts for every length 0..=n.
    Endpoints {
        #[command(flatten)]
        source: WalkSource,
        #[arg(long)]
        n: usize,
    },
    /// Walks ending on an axis, lengths 0..=n.
    Axis {
        #[command(flatten)]
        source: WalkSource,
        #[arg(long)]
        n: usize,
        /// 0 for the x-axis (y = 0), 1 for the y-axis (x = 0).
        #[arg(long, default_value_t = 0)]
        axis: usize,
    },
    /// Endpoint counts at length n by listing every step word.
    Brute {
        #[command(flatten)]
        source: WalkSource,
        #[arg(long)]
        n: usize,
    },
    /// Print the configuration as JSON, usable with --config.
    Show {
        #[command(flatten)]
        source: WalkSource,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum CtBuiltin {
    G2,
    Quadrant,
    Sl2,
}

#[derive(Debug, Args)]
pub struct CtArgs {
    /// Built-in spec; ignored when --config is given.
    #[arg(long, value_enum, default_value = "g2")]
    pub builtin: CtBuiltin,
    /// Free zero steps in the quadrant kernel.
    #[arg(long, default_value_t = 0)]
    pub k: i64,
    #[arg(long, default_value_t = 9)]
    pub n: usize,
    /// Print the CT spec as JSON instead of computing.
    #[arg(long)]
    pub show: bool,
}

#[derive(Debug, Args)]
pub struct BtArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub power: i64,
    /// JSON array of integers; stdin when absent.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

/// Where a sequence argument comes from.
#[derive(Debug, Args)]
pub struct SeqSource {
    /// Registry sequence to use.
    #[arg(long, conflicts_with = "input")]
    pub seq: Option<String>,
    #[arg(long, default_value_t = 30)]
    pub terms: usize,
    #[arg(long, default_value = "walk")]
    pub engine: String,
    /// JSON array of integers; stdin when neither this nor --seq is given.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RecSource {
    /// t3_rec, e3_rec, s3_rec or uniform_rec; ignored when --config is given.
    #[arg(long)]
    pub name: Option<String>,
    /// Parameter of uniform_rec.
    #[arg(long)]
    pub k: Option<i64>,
}

#[derive(Debug, Subcommand)]
pub enum RecCmd {
    /// Print the recurrence as JSON.
    Show {
        #[command(flatten)]
        rec: RecSource,
    },
    /// Extend initial terms to n_max.
    Unroll {
        #[command(flatten)]
        rec: RecSource,
        /// Comma-separated initial terms.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true, required = true)]
        initial: Vec<String>,
        #[arg(long)]
        n: usize,
    },
    /// Check that a sequence satisfies the recurrence.
    Verify {
        #[command(flatten)]
        rec: RecSource,
        #[command(flatten)]
        data: SeqSource,
    },
    /// Search for a recurrence of bounded order and degree.
    Guess {
        #[command(flatten)]
        data: SeqSource,
        #[arg(long, default_value_t = 3)]
        max_order: usize,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
    /// Right division of one named recurrence by another.
    Divide {
        #[arg(long)]
        left: String,
        #[arg(long)]
        left_k: Option<i64>,
        #[arg(long)]
        right: String,
        #[arg(long)]
        right_k: Option<i64>,
    },
}

#[derive(Debug, Args)]
pub struct OpSource {
    /// L6, Q, L3, L2, L1, e3_ode or s3_ode; ignored when --config is given.
    #[arg(long)]
    pub name: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum OdeCmd {
    /// Print the operator as JSON.
    Show {
        #[command(flatten)]
        op: OpSource,
    },
    /// Apply the operator to the generating function of a sequence.
    Apply {
        #[command(flatten)]
        op: OpSource,
        #[command(flatten)]
        data: SeqSource,
    },
    /// Recurrence for the coefficients of a power-series solution.
    ToRec {
        #[command(flatten)]
        op: OpSource,
    },
    /// Product left·right of two named operators.
    Mul {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum ClosedformCmd {
    /// Names of the available closed forms.
    List,
    /// Compare a closed form with the reference terms to the given order.
    Verify {
        #[arg(long)]
        name: String,
        #[arg(long, default_value_t = 60)]
        order: usize,
    },
    /// Series coefficients of a closed form.
    Series {
        #[arg(long)]
        name: String,
        #[arg(long, default_value_t = 20)]
        order: usize,
    },
}

#[derive(Debug, Args)]
pub struct AsymArgs {
    /// Comma-separated sample lengths.
    #[arg(long, value_delimiter = ',', default_value = "500,1000,2000")]
    pub samples: Vec<usize>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Kind {
    Hesitating,
    Vacillating,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Variant {
    S0,
    S1a,
    S1b,
    S2,
}

#[derive(Debug, Subcommand)]
pub enum OracleCmd {
    /// Set partitions of [n].
    Partitions {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        forbid_singletons: bool,
        /// Reject partitions with a k-crossing.
        #[arg(long)]
        max_crossing: Option<usize>,
        /// Reject partitions with an enhanced k-crossing.
        #[arg(long)]
        max_enhanced_crossing: Option<usize>,
    },
    /// Inversion sequences of length n.
    Inversions {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        forbid_wdec3: bool,
        #[arg(long)]
        forbid_fixed: bool,
    },
    /// Hesitating or vacillating tableau walks of semilength n.
    Tableaux {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        height: usize,
        /// Comma-separated final shape; empty by default.
        #[arg(long, value_delimiter = ',')]
        shape: Vec<usize>,
        #[arg(long)]
        exclude_row1_zero: bool,
    },
    /// Rectangular 3-row tableaux with m columns and the given content.
    Sst {
        #[arg(long)]
        m: usize,
        /// Comma-separated multiplicities of 1, 2, ...
        #[arg(long, value_delimiter = ',', required = true)]
        content: Vec<usize>,
        /// Fill cells exhaustively instead of the strip recursion.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Multinomial-weighted tableau sums giving the quadrant rows.
    Quadrant {
        #[arg(long, value_enum)]
        variant: Variant,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        exhaustive: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum BranchCmd {
    /// Nonzero multiplicities m^{(r,s)}_{(p,q)}, every index at most max-deg.
    Table {
        #[arg(long)]
        max_deg: usize,
        /// Expand with the opposite sign in the numerator.
        #[arg(long)]
        minus: bool,
    },
    /// Quadrant excursions against octant axis walks.
    VerifyAxis {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        n: usize,
    },
    /// Quadrant endpoint counts against branching-weighted octant counts.
    VerifyRestriction {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        n: usize,
    },
    /// Compare walk counts with the polynomial-in-k tables.
    Polynomials {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        k_max: i64,
    },
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Comma-separated check names; all checks when absent.
    #[arg(long, value_delimiter = ',')]
    pub only: Vec<String>,
    /// List check names and criteria without running them.
    #[arg(long)]
    pub list: bool,
    /// Perturb the named check's fixture (fault injection).
    #[arg(long, hide = true)]
    pub corrupt: Option<String>,
}
