use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use photon_lab::spectral::SpectralLaw;
use photon_lab::statistics::{EntityEnergy, QuantumHypothesis};
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(name = "photon-lab", version, about = "Black-body laws, photon statistics and field identity checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(untagged)]
pub enum Command {
    /// Tabulate a spectral law u(nu, T) over a frequency grid
    Spectrum(SpectrumArgs),
    /// Compare two spectral laws over a grid in h nu / kT
    Compare(CompareArgs),
    /// Fit total energy density against temperature on log-log axes
    Stefan(StefanArgs),
    /// Locate the spectral peak of a law
    Peak(PeakArgs),
    /// Build a law from a quantum hypothesis and tabulate it against its named form
    Compose(ComposeArgs),
    /// Metropolis Monte Carlo photon gas in contact with a heat bath
    Mc(McArgs),
    /// Field-level checks: transversality, divergence, wave equation, u = |g|c
    FieldsCheck(FieldsCheckArgs),
    /// Tensor identities pointwise and integrated over a compact wave packet
    TensorCheck(TensorCheckArgs),
    /// Shell ratio of z angular momentum to energy for magnetic multipoles
    MultipoleRatio(MultipoleArgs),
    /// Photon model: energy split, period and flux integrals, ensemble tensor
    Model(ModelArgs),
}

impl Command {
    pub fn name(&self) -> String {
        match self {
            Command::Spectrum(_) => "spectrum".into(),
            Command::Compare(_) => "compare".into(),
            Command::Stefan(_) => "stefan".into(),
            Command::Peak(_) => "peak".into(),
            Command::Compose(_) => "compose".into(),
            Command::Mc(_) => "mc".into(),
            Command::FieldsCheck(_) => "fields-check".into(),
            Command::TensorCheck(_) => "tensor-check".into(),
            Command::MultipoleRatio(_) => "multipole-ratio".into(),
            Command::Model(m) => format!("model {}", m.command.name()),
        }
    }

    pub fn output(&self) -> (Format, Option<&Path>) {
        let o = match self {
            Command::Spectrum(a) => return (a.output.format, a.output.out.as_deref()),
            Command::Compare(a) => &a.output,
            Command::Stefan(a) => &a.output,
            Command::Peak(a) => &a.output,
            Command::Compose(a) => &a.output,
            Command::Mc(a) => &a.output,
            Command::FieldsCheck(a) => &a.output,
            Command::TensorCheck(a) => &a.output,
            Command::MultipoleRatio(a) => &a.output,
            Command::Model(m) => m.command.output(),
        };
        (o.format, o.out.as_deref())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args, Serialize)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write to this file instead of stdout
    #[arg(long)]
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args, Serialize)]
pub struct TableOutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write to this file instead of stdout
    #[arg(long)]
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Law {
    Planck,
    RayleighJeans,
    Wien,
    HalfQuantum,
    PairPlanck,
    PlanckSecond,
    ZeroPoint,
}

impl From<Law> for SpectralLaw {
    fn from(l: Law) -> Self {
        match l {
            Law::Planck => SpectralLaw::Planck,
            Law::RayleighJeans => SpectralLaw::RayleighJeans,
            Law::Wien => SpectralLaw::Wien,
            Law::HalfQuantum => SpectralLaw::HalfQuantum,
            Law::PairPlanck => SpectralLaw::PairPlanck,
            Law::PlanckSecond => SpectralLaw::PlanckSecond,
            Law::ZeroPoint => SpectralLaw::ZeroPoint,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GridKind {
    Log,
    Linear,
}

#[derive(Debug, Args, Serialize)]
pub struct SpectrumArgs {
    #[arg(long, value_enum)]
    pub law: Law,
    /// Temperature, K
    #[arg(long)]
    pub temp: f64,
    /// Lowest frequency, Hz
    #[arg(long, default_value = "1e12")]
    pub nu_min: f64,
    /// Highest frequency, Hz
    #[arg(long, default_value = "1e15")]
    pub nu_max: f64,
    #[arg(long, default_value_t = 200)]
    pub points: usize,
    #[arg(long, value_enum, default_value_t = GridKind::Log)]
    pub grid: GridKind,
    #[command(flatten)]
    #[serde(flatten)]
    pub output: TableOutputArgs,
}

#[derive(Debug, Args, Serialize)]
pub struct CompareArgs {
    #[arg(long, value_enum)]
    pub law_a: Law,
    #[arg(long, value_enum)]
    pub law_b: Law,
    /// Temperature, K
    #[arg(long, default_value_t = 3000.0)]
    pub temp: f64,
    /// Lowest h nu / kT on the log grid
    #[arg(long, default_value = "1e-3")]
    pub x_min: f64,
    /// Highest h nu / kT on the log grid
    #[arg(long, default_value_t = 50.0)]
    pub x_max: f64,
    #[arg(long, default_value_t = 400)]
    pub points: usize,
    #[command(flatten)]
    #[serde(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args, Serialize)]
pub struct StefanArgs {
    #[arg(long, value_enum)]
    pub law: Law,
    /// Comma-separated temperatures, K
    #[arg(long, value_delimiter = ',', default_value = "500,1000,2000,4000")]
    pub temps: Vec<f64>,
    #[command(flatten)]
    #[serde(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args, Serialize)]
pub struct PeakArgs {
    #[arg(long, value_enum)]
    pub law: Law,
    /// Temperature, K
    #[arg(long)]
    pub temp: f64,
    #[command(flatten)]
    #[serde(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Preset {
    Single,
    HalfQuantum,
    Pair,
    Equipartition,
}

impl From<Preset> for QuantumHypothesis {
    fn from(p: Preset) -> Self {
        match p {
            Preset::Single => QuantumHypothesis::single_photon(),
            Preset::HalfQuantum => QuantumHypothesis::half_quantum(),
            Preset::Pair => QuantumHypothesis::photon_pair(),
            Preset::Equipartition => QuantumHypothesis::equipartition(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EnergyArg {
    Full,
    Half,
    Equipartition,
}

impl From<EnergyArg> for EntityEnergy {
    fn from(e: EnergyArg) -> Self {
        match e {
            EnergyArg::Full => EntityEnergy::FullQuantum,
            EnergyArg::Half => EntityEnergy::HalfQuantum,
            EnergyArg::Equipartition => EntityEnergy::Equipartition,
        }
    }
}

#[derive(Debug, Args, Serialize)]
pub struct HypothesisArgs {
    /// Named hypothesis; overridden field by field by the options below
    #[arg(long, value_enum, default_value_t = Preset::HalfQuantum)]
    pub hypothesis: Preset,
    /// Energy per entity
    #[arg(long, value_enum)]
    pub energy: Option<EnergyArg>,
    /// Photons per entity (1 or 2)
    #[arg(long)]
    pub photons: Option<u8>,
    /// Internal states per entity (1 or 2)
    #[arg(long)]
    pub polarization: Option<u8>,
}

impl HypothesisArgs {
    pub fn resolve(&self) -> photon_lab::Result<QuantumHypothesis> {
        let base = QuantumHypothesis::from(self.hypothesis);
        QuantumHypothesis::new(
            self.energy.map_or(base.entity_energy, Into::into),
            self.photons.unwrap_or(base.photons_per_entity),
            self.polarization.unwrap_or(base.polarization_factor),
        )
    }
}

#[derive(Debug, Args, Serialize)]
pub struct ComposeArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub hypothesis: HypothesisArgs,
    /// Temperature, K
    #[arg(long, default_value_t = 5000.0)]
    pub temp: f64,
    #[arg(long, default_value = "1e12")]
    pub nu_min: f64,
    #[arg(long, default_value = "1e15")]
    pub nu_max: f64,
    #[arg(long, default_value_t = 50)]
    pub points: usize,
    #[command(flatten)]
    #[serde(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args, Serialize)]
pub struct McArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub hypothesis: HypothesisArgs,
    /// Bath temperature, K
    #[arg(long, default_value_t = 1500.0)]
    pub temp: f64,
    #[arg(long, default_value_t = 30)]
    pub modes: usize,
    /// Smallest entity energy over kT, log-spaced
    #[arg(long, default_value_t = 0.1)]
    pub x_min: f64,
    /// Largest entity energy over kT
    #[arg(long, default_value_t = 5.0)]
    pub x_max: f64,
    #[arg(long, default_value_t = 1_000_000)]
    pub sweeps: u64,
    #[arg(long, default_value_t = 10_000)]
    pub burn_in: u64,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Allowed deviation from the closed form, in standard errors
    #[arg(long, default_value_t = 3.0)]
    pub sigmas: f64,
    #[command(flatten)]
    #[serde(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args, Serialize)]
pub struct FieldsCheckArgs {
    /// Random samples per check
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Tolerance for the time-averaged u = |g|c relation
    #[arg(long, default_value_t = 1e-12)]
    pub tolerance: f64,
    #[command(flatten)]
    #[serde(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args, Serialize)]
pub struct TensorCheckArgs {
    /// Packet carrier wavenumber times envelope width
    #[arg(long, default_value_t = 4.0)]
    pub k_sigma: f64,
    /// Half-width of the integration box, in envelope widths
    #[arg(long, default_value_t = 7.5)]
    pub half_width: f64,
    /// Quadrature node step, in envelope widths
    #[arg(long, default_value_t = 0.25)]
    pub step: f64,
    /// Finite-difference spacing, in envelope widths
    #[arg(long, default_value_t = 0.01)]
    pub fd_spacing: f64,
    /// Relative tolerance for the integral equalities
    #[arg(long, default_value_t = 1e-6)]
    pub tolerance: f64,
    /// Required residual reduction when the spacing is halved
    #[arg(long, default_value_t = 8.0)]
    pub min_refinement: f64,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[command(flatten)]
    #[serde(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args, Serialize)]
pub struct MultipoleArgs {
    /// Multipole orders as l:m pairs
    #[arg(long, value_delimiter = ',', default_value = "1:0,1:1,2:1,2:2")]
    pub modes: Vec<String>,
    /// Angular frequency, rad/s
    #[arg(long, default_value = "1e10")]
    pub omega: f64,
    /// Inner shell radius as omega r / c
    #[arg(long, default_value_t = 20.0)]
    pub kr: f64,
    /// Shell width as omega dr / c
    #[arg(long, default_value_t = 0.1)]
    pub kdr: f64,
    #[arg(long, default_value_t = 1e-6)]
    pub tolerance: f64,
    #[command(flatten)]
    #[serde(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args, Serialize)]
pub struct ModelArgs {
    #[command(subcommand)]
    pub command: ModelCommand,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(untagged)]
pub enum ModelCommand {
    /// Spin and translational halves of h nu, in exact arithmetic
    Split(SplitArgs),
    /// Period integral of a one-form around a loop
    Period(PeriodArgs),
    /// Flux of a field's curl through a patch, with the boundary period
    Flux(FluxArgs),
    /// Angular-momentum four-tensor of a particle ensemble
    Ensemble(EnsembleArgs),
}

impl ModelCommand {
    pub fn name(&self) -> &'static str {
        match self {
            ModelCommand::Split(_) => "split",
            ModelCommand::Period(_) => "period",
            ModelCommand::Flux(_) => "flux",
            ModelCommand::Ensemble(_) => "ensemble",
        }
    }

    pub fn output(&self) -> &OutputArgs {
        match self {
            ModelCommand::Split(a) => &a.output,
            ModelCommand::Period(a) => &a.output,
            ModelCommand::Flux(a) => &a.output,
            ModelCommand::Ensemble(a) => &a.output,
        }
    }
}

#[derive(Debug, Args, Serialize)]
pub struct SplitArgs {
    /// Comma-separated frequencies, Hz
    #[arg(long, value_delimiter = ',', default_value = "1e15")]
    pub nu: Vec<f64>,
    #[command(flatten)]
    #[serde(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OneForm {
    /// (hbar/2pi) grad(azimuth) around the z axis
    Vortex,
    /// Gradient of a smooth single-valued scalar
    Gradient,
    /// Gaussian-beam azimuthal potential
    Beam,
}

#[derive(Debug, Args, Serialize)]
pub struct PeriodArgs {
    #[arg(long, value_enum, default_value_t = OneForm::Vortex)]
    pub field: OneForm,
    /// Loop semi-axis along x
    #[arg(long, default_value_t = 1.0)]
    pub a: f64,
    /// Loop semi-axis along y
    #[arg(long, default_value_t = 1.0)]
    pub b: f64,
    /// Loop center x
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub cx: f64,
    /// Loop center y
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub cy: f64,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    pub windings: i32,
    /// Singularity guard as a fraction of the loop size
    #[arg(long, default_value_t = 1e-9)]
    pub guard: f64,
    /// Panel cap before the integral is declared unconverged
    #[arg(long, default_value_t = 65536)]
    pub max_panels: usize,
    #[command(flatten)]
    #[serde(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args, Serialize)]
pub struct FluxArgs {
    #[arg(long, value_enum, default_value_t = OneForm::Beam)]
    pub field: OneForm,
    /// Disk radius
    #[arg(long, default_value_t = 1.5)]
    pub radius: f64,
    #[arg(long, default_value_t = 0.2, allow_hyphen_values = true)]
    pub cx: f64,
    #[arg(long, default_value_t = -0.1, allow_hyphen_values = true)]
    pub cy: f64,
    /// Stokes-consistency tolerance
    #[arg(long, default_value_t = 1e-8)]
    pub tolerance: f64,
    #[command(flatten)]
    #[serde(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args, Serialize)]
pub struct EnsembleArgs {
    /// JSON file {"time": s, "particles": [{"position", "momentum", "energy"?, "mass"?}]}
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Random photons to generate when no input is given
    #[arg(long, default_value_t = 10)]
    pub random: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Free-flight times, s, at which the tensor is re-evaluated
    #[arg(long, value_delimiter = ',', default_value = "0,1e-9,1e-6")]
    pub times: Vec<f64>,
    #[command(flatten)]
    #[serde(flatten)]
    pub output: OutputArgs,
}
