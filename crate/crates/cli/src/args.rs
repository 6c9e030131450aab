use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "hgperiod", version, about = "Special values of F(1,1,a;b,c;1) and Hodge character tuples")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

impl Cli {
    pub fn common(&self) -> &Common {
        match &self.command {
            Command::Classify(a) => &a.common,
            Command::Orbits(a) => &a.common,
            Command::AppendixCheck(a) => &a.common,
            Command::Verify(a) | Command::ClosedForm(a) => &a.common,
            Command::EvalF32(a) => &a.common,
        }
    }

    pub fn format(&self) -> Format {
        self.common().format
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Hodge test and family of a character tuple.
    Classify(ClassifyArgs),
    /// Exceptional Galois orbits with denominator m.
    Orbits(OrbitsArgs),
    /// Compare enumerated orbits with the embedded appendix table.
    AppendixCheck(AppendixArgs),
    /// Evaluate an identity by every admitted route and compare.
    Verify(IdentityArgs),
    /// Exact value of F for an identity at given parameters.
    ClosedForm(IdentityArgs),
    /// F(1,1,p3;p4,p5;1) by the accelerated series.
    EvalF32(EvalArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
pub struct Common {
    /// Working precision in decimal digits.
    #[arg(long, env = "PREC", default_value_t = 30)]
    pub precision: u32,
    /// Relative tolerance for route agreement.
    #[arg(long, env = "TOL", default_value_t = 1e-8)]
    pub tolerance: f64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for sampled parameters.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    /// Common denominator; the tuple then lists integer numerators.
    #[arg(long)]
    pub m: Option<u32>,
    /// Four comma-separated numerators, or rationals `p/q` without `--m`.
    #[arg(long)]
    pub tuple: String,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct OrbitsArgs {
    #[arg(long)]
    pub m: u32,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct AppendixArgs {
    /// Check every table entry.
    #[arg(long, conflicts_with = "m")]
    pub all: bool,
    /// Check one table entry.
    #[arg(long)]
    pub m: Option<u32>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct IdentityArgs {
    /// Identity id, e.g. `G1-2m`.
    #[arg(long, required_unless_present = "all")]
    pub id: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<String>,
    /// Comma-separated parameters, used for three-parameter identities.
    #[arg(long, allow_hyphen_values = true)]
    pub tuple: Option<String>,
    /// Every identity at seeded sample points.
    #[arg(long, conflicts_with = "id")]
    pub all: bool,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct EvalArgs {
    /// `p3,p4,p5` as rationals.
    #[arg(long, allow_hyphen_values = true)]
    pub tuple: String,
    #[command(flatten)]
    pub common: Common,
}
