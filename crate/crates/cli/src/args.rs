//! Command-line syntax.

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "fsz",
    version,
    about = "Test permutation groups for the FSZ_m properties"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Args, Debug, Clone)]
pub struct RunArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Worker threads for the counting loops.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..1025), global = true)]
    pub workers: u64,

    /// Abort with exit status 4 after examining this many group elements.
    #[arg(long, global = true)]
    pub budget: Option<u64>,

    /// Refuse groups whose order exceeds this.
    #[arg(long, default_value_t = 100_000_000, value_parser = clap::value_parser!(u64).range(1..), global = true)]
    pub max_order: u64,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Order, degree, exponent, centre, class counts and Sylow orders.
    Info {
        /// Catalog spec such as `wreath:5`, or a generator file.
        group: String,
    },
    /// Decide whether the group is FSZ.
    Test(TestArgs),
    /// Print |G_m(u, g)| and |G_m(u, g^n)|, counted inside C_G(g).
    Counts(CountsArgs),
    /// Look for u and n with |G_m(u, g)| != |G_m(u, g^n)|.
    Witness(WitnessArgs),
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("mode").args(["center_only", "screen_only"]).multiple(false)))]
pub struct TestArgs {
    pub group: String,

    /// Only test these values of m (comma separated).
    #[arg(long, value_delimiter = ',')]
    pub m: Option<Vec<u64>>,

    /// Count only at central elements; a pass is INCONCLUSIVE.
    #[arg(long)]
    pub center_only: bool,

    /// Apply the cheap sufficient conditions only.
    #[arg(long)]
    pub screen_only: bool,

    /// Skip the screen and go straight to counting.
    #[arg(long, conflicts_with = "screen_only")]
    pub no_screen: bool,
}

#[derive(Args, Debug)]
pub struct CountsArgs {
    pub group: String,

    /// The element u, in cycle notation or as an image list.
    #[arg(long, default_value = "()")]
    pub u: String,

    #[arg(long)]
    pub g: String,

    #[arg(long)]
    pub m: u64,

    #[arg(long)]
    pub n: u64,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("target").args(["g", "scan"]).required(true)))]
pub struct WitnessArgs {
    pub group: String,

    /// Search at this element.
    #[arg(long)]
    pub g: Option<String>,

    /// Search every rational class, central classes first.
    #[arg(long)]
    pub scan: bool,

    /// Values of m to try (comma separated); defaults to the divisor
    /// candidates of each g.
    #[arg(long, value_delimiter = ',')]
    pub m: Option<Vec<u64>>,
}
