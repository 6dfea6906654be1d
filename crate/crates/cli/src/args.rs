//! Argument definitions.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gradord_core::group::galois::is_prime;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "gradord", version, about = "Graduated orders, group-ring idempotents and central conductors")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Odd prime p.
    #[arg(long, global = true)]
    pub prime: Option<u64>,
    /// Working p-adic precision for the conductor oracle.
    #[arg(long, global = true, default_value_t = 8)]
    pub precision: u32,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Graduated orders in standard form.
    #[command(subcommand)]
    Order(OrderCommand),
    /// Character tables and group rings.
    #[command(subcommand)]
    Group(GroupCommand),
    /// Central conductors from ramification profiles.
    #[command(subcommand)]
    Iwasawa(IwasawaCommand),
}

#[derive(Debug, Args)]
pub struct OrderInput {
    /// Order file.
    #[arg(long = "in")]
    pub input: PathBuf,
}

#[derive(Debug, Args)]
pub struct OrderPair {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long = "in2")]
    pub input2: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum OrderCommand {
    /// Check the standard-form conditions.
    Validate(OrderInput),
    /// Jacobson radical.
    Radical(OrderInput),
    /// Simple factors of the radical quotient.
    Quotient(OrderInput),
    /// Inverse different.
    Different(OrderInput),
    /// Conductor into the self-dual overorder.
    Conductor(OrderInput),
    /// Intersection of two orders on a common refinement.
    Intersect(OrderPair),
    /// Graduated hull (dvr backend).
    Hull(OrderInput),
    /// Extremality test.
    Extremal(OrderInput),
    /// Hereditary obstruction.
    Hereditary(OrderInput),
    /// Replace off-diagonal entries by one principal ideal.
    Principalize(OrderInput),
}

#[derive(Debug, Args)]
pub struct GroupInput {
    /// Group file.
    #[arg(long)]
    pub group: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum GroupCommand {
    /// p-adic Galois orbits of the characters.
    Orbits(GroupInput),
    /// Central idempotents of Q_p H with their checks.
    Idempotents(GroupInput),
    /// Twist invariants w_chi and v_chi.
    Invariants(GroupInput),
    /// Brute-force central conductor of Z_p H.
    ConductorOracle(GroupInput),
}

#[derive(Debug, Args)]
pub struct ProfileInput {
    /// Profile file.
    #[arg(long)]
    pub profile: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum IwasawaCommand {
    RChi(ProfileInput),
    SChi(ProfileInput),
    CentralConductor(ProfileInput),
    /// Different additivity along the tower listed in the profile file.
    TowerCheck(ProfileInput),
}

impl Cli {
    pub fn validate(&self) -> Result<(), CliError> {
        if let Some(p) = self.prime {
            if p == 2 || !is_prime(p) {
                return Err(CliError::Usage(format!("--prime {p} is not an odd prime")));
            }
        }
        if !(4..=64).contains(&self.precision) {
            return Err(CliError::Usage(format!("--precision {} is outside [4, 64]", self.precision)));
        }
        Ok(())
    }

    pub fn require_prime(&self) -> Result<u64, CliError> {
        self.prime.ok_or_else(|| CliError::Usage("--prime is required".into()))
    }
}
