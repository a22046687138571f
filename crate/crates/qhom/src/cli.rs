//! Argument definitions.

use clap::{Args, Parser, Subcommand, ValueEnum};
use qhom_core::partitions::Partition;

#[derive(Parser, Clone, Debug)]
#[command(name = "qhom", version, about = "Verify identities of Hecke operators and quantum matrix bialgebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Clone, Debug)]
pub struct Common {
    /// Parameter for builtin operators: a rational, or `sym` for the symbolic q.
    #[arg(long, global = true, default_value = "4")]
    pub q: String,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug)]
pub enum Format {
    Json,
    Table,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug)]
pub enum FamilyArg {
    E,
    F,
    M,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug)]
pub enum KindArg {
    E,
    F,
    M,
    N,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug)]
pub enum VersionArg {
    Plain,
    Twisted,
    Both,
}

/// Operators are file paths or builtin names (`std2`, `super11`,
/// `flip2`, `superflip11`, `scalar`, ...).
#[derive(Subcommand, Clone, Debug)]
pub enum Command {
    /// Validate the Yang–Baxter, Hecke and closure conditions.
    Check {
        operators: Vec<String>,
        #[arg(long = "op")]
        op: Vec<String>,
    },
    /// Graded dimensions against rank sums, and the Koszul numeric identity.
    Poincare {
        #[arg(long, value_enum, ignore_case = true)]
        family: FamilyArg,
        #[arg(long)]
        op: Option<String>,
        #[arg(long = "S")]
        s: Option<String>,
        #[arg(long = "R")]
        r: Option<String>,
        #[arg(long, default_value_t = 4, value_parser = degree)]
        max_degree: usize,
    },
    /// Build the algebra as projector images and check the presentation.
    Realize {
        #[arg(long, value_enum, ignore_case = true, default_value_t = KindArg::M)]
        kind: KindArg,
        #[arg(long)]
        op: Option<String>,
        #[arg(long = "S")]
        s: Option<String>,
        #[arg(long = "R")]
        r: Option<String>,
        #[arg(long, default_value_t = 3, value_parser = degree)]
        max_degree: usize,
        /// Random triples for the associativity check.
        #[arg(long, default_value_t = 10)]
        samples: usize,
    },
    /// Compare the ideal generated by `M_σ` with its block prediction.
    Ideal {
        #[arg(long, value_parser = parse_partition)]
        sigma: Partition,
        #[arg(long = "S")]
        s: String,
        #[arg(long = "R")]
        r: String,
        #[arg(long, alias = "max-degree", value_parser = degree)]
        degree: usize,
    },
    /// Kernel and block structure of `μ*: M_TS → M_TR ⊗ M_RS`.
    Mu {
        #[arg(long = "T")]
        t: String,
        #[arg(long = "R")]
        r: String,
        #[arg(long = "S")]
        s: String,
        #[arg(long, alias = "max-degree", value_parser = degree)]
        degree: usize,
        #[arg(long, value_enum, ignore_case = true, default_value_t = VersionArg::Plain)]
        version: VersionArg,
    },
    /// Print a builtin operator in the file format.
    Export { name: String },
}

fn degree(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(n) if n >= 1 => Ok(n),
        _ => Err(format!("{s}: degree must be a positive integer")),
    }
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| format!("{e:?}"))
}

/// Process exit status.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Exit {
    Pass = 0,
    Operational = 1,
    Failure = 2,
}
