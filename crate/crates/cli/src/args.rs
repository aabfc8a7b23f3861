//! Command-line arguments.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use helicity_core::{Helicity, Vec64};

#[derive(Debug, Parser)]
#[command(
    name = "helicity",
    version,
    about = "First-order Dirac spin amplitudes in static magnetic fields"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check every operator identity and amplitude invariant on random geometries.
    AlgebraCheck(AlgebraCheckArgs),
    /// Evaluate one spin matrix element.
    Amplitude(AmplitudeArgs),
    /// Tabulate amplitudes over a range of scattering angles (CSV).
    Sweep(SweepArgs),
    /// Tabulate the unpolarized Aharonov-Bohm cross section (CSV).
    Xsec(XsecArgs),
}

#[derive(Debug, Args)]
pub struct AlgebraCheckArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1000)]
    pub trials: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PotentialName {
    Ab,
    Dipole,
    Fixed,
}

#[derive(Debug, Clone, Args)]
pub struct PotentialArgs {
    #[arg(long, value_enum, default_value = "ab")]
    pub potential: PotentialName,
    /// Flux of the Aharonov-Bohm line (along +z).
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub flux: f64,
    /// Dipole moment.
    #[arg(long, value_parser = parse_vec3, default_value = "0,0,1", allow_hyphen_values = true)]
    pub mu: Vec64,
    /// Direction of a constant potential (must be unit length).
    #[arg(long, value_parser = parse_vec3, default_value = "0,0,1", allow_hyphen_values = true)]
    pub ahat: Vec64,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub charge: f64,
}

#[derive(Debug, Clone, Args)]
pub struct KinematicArgs {
    /// Momentum magnitude.
    #[arg(long, default_value_t = 1.0)]
    pub p: f64,
    #[arg(long, default_value_t = 1.0)]
    pub mass: f64,
    /// Incident direction.
    #[arg(long, value_parser = parse_vec3, default_value = "1,0,0", allow_hyphen_values = true)]
    pub incident: Vec64,
    /// Scattering-plane normal; becomes the frame's l axis. The default makes
    /// the Aharonov-Bohm direction coincide with the total momentum.
    #[arg(long, value_parser = parse_vec3, default_value = "0,0,-1", allow_hyphen_values = true)]
    pub normal: Vec64,
}

#[derive(Debug, Clone, Args)]
pub struct HelicityArgs {
    #[arg(long, value_parser = parse_helicity, default_value = "+", allow_hyphen_values = true)]
    pub hin: Helicity,
    #[arg(long, value_parser = parse_helicity, default_value = "+", allow_hyphen_values = true)]
    pub hout: Helicity,
}

#[derive(Debug, Clone, Args)]
pub struct AngleRangeArgs {
    #[arg(long = "theta-min", default_value_t = 0.01)]
    pub theta_min: f64,
    #[arg(long = "theta-max", default_value_t = 3.13)]
    pub theta_max: f64,
    #[arg(long, default_value_t = 100)]
    pub steps: usize,
}

#[derive(Debug, Args)]
pub struct AmplitudeArgs {
    #[command(flatten)]
    pub potential: PotentialArgs,
    #[command(flatten)]
    pub kinematics: KinematicArgs,
    #[command(flatten)]
    pub helicities: HelicityArgs,
    /// Scattering angle in radians.
    #[arg(long)]
    pub theta: f64,
    /// Accepted for interface uniformity; the evaluation is deterministic.
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub potential: PotentialArgs,
    #[command(flatten)]
    pub kinematics: KinematicArgs,
    #[command(flatten)]
    pub helicities: HelicityArgs,
    #[command(flatten)]
    pub range: AngleRangeArgs,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Args)]
pub struct XsecArgs {
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub flux: f64,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub charge: f64,
    #[command(flatten)]
    pub kinematics: KinematicArgs,
    #[command(flatten)]
    pub range: AngleRangeArgs,
    /// Output file; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn parse_vec3(s: &str) -> Result<Vec64, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(format!("expected X,Y,Z, got '{s}'"));
    }
    let mut v = [0.0; 3];
    for (slot, part) in v.iter_mut().zip(&parts) {
        *slot = part
            .parse::<f64>()
            .map_err(|e| format!("bad component '{part}': {e}"))?;
        if !slot.is_finite() {
            return Err(format!("non-finite component '{part}'"));
        }
    }
    Ok(Vec64::from_array(v))
}

pub fn parse_helicity(s: &str) -> Result<Helicity, String> {
    s.parse()
}
