use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "grasscal",
    version,
    about = "Exact Schubert calculus on Grassmannians",
    after_help = "Exit status: 0 computation completed (verify: all cases passed), \
                  1 verify found a counterexample, 2 argument or parse error, \
                  3 box or precondition violation."
)]
pub struct Cli {
    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    pub json: bool,

    /// Render with unicode symbols (ε, ∧, σ, ·) instead of ASCII
    #[arg(long, global = true)]
    pub unicode: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Apply the degree-raising operator D_h to a basis class
    Pieri(PieriArgs),
    /// Expand the product of two Schubert classes
    Product(ProductArgs),
    /// Intersection number of a list of Schubert classes
    Intersect(IntersectArgs),
    /// Degree-d Gromov-Witten number of a list of Schubert classes
    Gw(GwArgs),
    /// Operator polynomial expressing a class in the generators D1, D2, …
    Giambelli(GiambelliArgs),
    /// Run an oracle-equivalence sweep and report pass/fail
    #[command(subcommand)]
    Verify(VerifySuite),
}

#[derive(Args, Debug)]
#[command(group(
    clap::ArgGroup::new("base").required(true).args(["mono", "partition"])
))]
pub struct PieriArgs {
    /// Operator index h
    #[arg(long = "h")]
    pub h: u32,

    /// Base monomial: comma-separated strictly increasing indices, e.g. "1,3"
    #[arg(long)]
    pub mono: Option<String>,

    /// Base class: comma-separated weakly decreasing parts, "" for the
    /// identity class (requires --k)
    #[arg(long, requires = "k")]
    pub partition: Option<String>,

    /// Arity k (number of wedge factors)
    #[arg(long)]
    pub k: Option<usize>,

    /// Ambient rank n; with --k selects the projected action on G_k(C^n)
    #[arg(long, requires = "k")]
    pub n: Option<u32>,

    /// Use the quantum action on G_k(C^n) (requires --k and --n)
    #[arg(long, requires = "n")]
    pub quantum: bool,

    /// Sign convention for quantum results
    #[arg(long, value_enum, default_value_t = ConventionArg::Bertram)]
    pub convention: ConventionArg,
}

#[derive(Args, Debug)]
pub struct ProductArgs {
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub n: u32,

    /// Left class, comma-separated parts ("" for the identity class)
    #[arg(long)]
    pub lhs: String,

    /// Right class, comma-separated parts ("" for the identity class)
    #[arg(long)]
    pub rhs: String,

    /// Compute in the small quantum ring
    #[arg(long)]
    pub quantum: bool,

    /// Sign convention for quantum results
    #[arg(long, value_enum, default_value_t = ConventionArg::Bertram)]
    pub convention: ConventionArg,
}

#[derive(Args, Debug)]
pub struct IntersectArgs {
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub n: u32,

    /// Semicolon-separated partitions, e.g. "1;1;1;1" or "2;1,1;2,2"
    #[arg(long)]
    pub classes: String,
}

#[derive(Args, Debug)]
pub struct GwArgs {
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub n: u32,

    /// Semicolon-separated partitions, e.g. "2;1,1;2,2"
    #[arg(long)]
    pub classes: String,

    /// Curve degree d
    #[arg(long)]
    pub degree: u32,
}

#[derive(Args, Debug)]
#[command(group(
    clap::ArgGroup::new("base").required(true).args(["mono", "partition"])
))]
pub struct GiambelliArgs {
    /// Target monomial, comma-separated strictly increasing indices
    #[arg(long)]
    pub mono: Option<String>,

    /// Target class, comma-separated parts (requires --k)
    #[arg(long, requires = "k")]
    pub partition: Option<String>,

    /// Arity k
    #[arg(long)]
    pub k: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum VerifySuite {
    /// Restricted vs unrestricted expansion of D_h on every small monomial
    #[command(name = "pieri-vs-leibniz")]
    PieriVsLeibniz {
        #[arg(long, default_value_t = 3)]
        max_k: usize,
        #[arg(long, default_value_t = 8)]
        max_index: u32,
        #[arg(long, default_value_t = 4)]
        max_h: u32,
    },
    /// Determinant reconstruction of every small class from the bottom monomial
    Giambelli {
        #[arg(long, default_value_t = 4)]
        max_part: u32,
        #[arg(long, default_value_t = 3)]
        k: usize,
    },
    /// Poincaré duality pairing across a box
    Duality {
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 5)]
        n: u32,
    },
    /// Classical structure constants vs the Littlewood-Richardson rule
    Lr {
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 5)]
        n: u32,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConventionArg {
    /// Correction terms carry the printed (-1)^{k-1} sign
    Raw,
    /// q ↦ (-1)^{k-1} q, making structure constants non-negative
    Bertram,
}

impl From<ConventionArg> for grasscal::schubert::Convention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Raw => Self::Raw,
            ConventionArg::Bertram => Self::Bertram,
        }
    }
}
