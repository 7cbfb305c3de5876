use clap::{Args, Parser, Subcommand, ValueEnum};
use serre_core::{CaseId, LocalWeight, OddPrime};

#[derive(Debug, Parser)]
#[command(
    name = "serre",
    version,
    about = "Serre weight combinatorics for GL_n over F_l"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Frobenius orbit of ω_m^e and the decomposition of Ind ω_m^e on inertia.
    Orbits {
        #[arg(long, value_parser = parse_prime)]
        l: OddPrime,
        #[arg(long)]
        niveau: u32,
        #[arg(long, allow_negative_numbers = true)]
        exp: i128,
    },
    /// Serre weights.
    #[command(subcommand)]
    Weights(WeightsCommand),
    /// Explicit weights and inertial candidate sets.
    #[command(subcommand)]
    Explicit(ExplicitCommand),
    /// The rank three theory.
    #[command(subcommand)]
    Gl3(Gl3Command),
}

#[derive(Debug, Args)]
pub struct PrimeArg {
    #[arg(long, value_parser = parse_prime)]
    pub l: OddPrime,
}

#[derive(Debug, Args)]
pub struct WeightArg {
    /// Comma-separated entries, e.g. 7,3,0.
    #[arg(long, value_parser = parse_weight, allow_hyphen_values = true)]
    pub weight: LocalWeight,
}

#[derive(Debug, Subcommand)]
pub enum WeightsCommand {
    /// Canonical representatives of all weights of rank n.
    Enumerate {
        #[command(flatten)]
        prime: PrimeArg,
        #[arg(long)]
        n: usize,
    },
    /// Whether two weights are equivalent.
    Equivalent {
        #[command(flatten)]
        prime: PrimeArg,
        #[arg(long, value_parser = parse_weight, allow_hyphen_values = true)]
        a: LocalWeight,
        #[arg(long, value_parser = parse_weight, allow_hyphen_values = true)]
        b: LocalWeight,
    },
    /// Canonical representative of a weight.
    Canonical {
        #[command(flatten)]
        prime: PrimeArg,
        #[command(flatten)]
        weight: WeightArg,
    },
    /// Hodge type of a weight.
    Hodge {
        #[command(flatten)]
        weight: WeightArg,
    },
    /// Weight at the conjugate place.
    Dual {
        #[command(flatten)]
        weight: WeightArg,
    },
}

#[derive(Debug, Subcommand)]
pub enum ExplicitCommand {
    /// All inertial types for which the weight is explicit.
    Candidates {
        #[command(flatten)]
        prime: PrimeArg,
        #[command(flatten)]
        weight: WeightArg,
    },
    /// Whether the weight is explicit for an inertial type.
    Membership {
        #[command(flatten)]
        prime: PrimeArg,
        #[command(flatten)]
        weight: WeightArg,
        /// Inertial type record, e.g. '{"pieces":[{"niveau":3,"exponent":1}]}'.
        #[arg(long = "type")]
        ty: String,
    },
    /// Canonical weights of rank n explicit for an inertial type.
    Weights {
        #[command(flatten)]
        prime: PrimeArg,
        #[arg(long)]
        n: usize,
        #[arg(long = "type")]
        ty: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum Gl3Command {
    /// Jordan–Hölder factors of P_a.
    Jh {
        #[command(flatten)]
        prime: PrimeArg,
        #[command(flatten)]
        weight: WeightArg,
    },
    /// Genericity of a weight.
    Generic {
        #[command(flatten)]
        prime: PrimeArg,
        #[command(flatten)]
        weight: WeightArg,
        #[arg(long)]
        refined: bool,
        /// Niveau of the local representation, for --refined.
        #[arg(long)]
        niveau: Option<u32>,
    },
    /// The eight auxiliary congruences for a weight.
    Facts {
        #[command(flatten)]
        prime: PrimeArg,
        #[command(flatten)]
        weight: WeightArg,
    },
    /// Check one congruence case (1..12 or C1..C8) over the whole region.
    Case {
        #[command(flatten)]
        prime: PrimeArg,
        #[arg(long, value_parser = parse_case)]
        case: CaseId,
        #[arg(long)]
        check_simplification: bool,
    },
    /// Compare the candidate types of a weight and its companion.
    WeightCase {
        #[command(flatten)]
        prime: PrimeArg,
        #[command(flatten)]
        weight: WeightArg,
    },
    /// Exhaustive elimination check over a range of primes.
    Verify {
        #[arg(long)]
        l_min: u64,
        #[arg(long)]
        l_max: u64,
        #[arg(long)]
        refined: bool,
    },
}

fn parse_prime(s: &str) -> Result<OddPrime, String> {
    let l: i64 = s.parse().map_err(|_| format!("`{s}` is not an integer"))?;
    OddPrime::new(l).map_err(|e| e.to_string())
}

fn parse_weight(s: &str) -> Result<LocalWeight, String> {
    s.parse().map_err(|e: serre_core::Error| e.to_string())
}

fn parse_case(s: &str) -> Result<CaseId, String> {
    s.parse().map_err(|e: serre_core::Error| e.to_string())
}
