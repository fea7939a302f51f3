use serde::{Deserialize, Serialize};

use super::config::{parse_pair, parse_potential, parse_range, RunConfig};
use super::render::{render_records, sig6, Format, Meta, Record};
use super::tables::{reproduce_table_with, TableId, TableParams};
use crate::error::{Error, Result};
use crate::oracles::{
    bessel_zero, ho_oracle_energy, numerov_bound_state, well_oracle_energy, Indexing, NumerovOptions, OracleEnergy,
};
use crate::potentials::{EffectivePotential, PotentialSpec, UnitSystem};
use crate::spectrum::{self_consistent_energy, EnergyBranch, EnergyLevel, SolveOptions};
use crate::turning_points::{turning_points, Method};
use crate::wavefunctions::{
    sample_wavefunction, uniform_grid, Carrier, FreeParticleWave, Parity, RadialWaveFunction, WaveSample,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Tables,
    Spectrum,
    TurningPoints,
    Wavefunction,
    Oracle(OracleCommand),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleCommand {
    BesselZeros,
    Numerov,
    Ho,
    Well,
}

/// Runs `command` with the settings in `config` and returns the rendered report.
/// `env_units` is the value of the units environment variable, if any.
pub fn execute(command: Command, config: &RunConfig, env_units: Option<&str>) -> Result<Vec<u8>> {
    let units = config.units(env_units)?;
    let format: Format = config.parsed_or("format", Format::Text)?;
    let mut meta = Meta::new(kind(command), "", units.clone());
    meta.config = config.entries().clone();
    match command {
        Command::Tables => {
            let id: TableId = config.require("which")?.parse()?;
            let mut params = TableParams::for_table(id);
            if config.get("units").or(env_units).is_some() && id != TableId::Hydrogen {
                params.units = units.clone();
            }
            let table = reproduce_table_with(id, &params)?;
            meta.units = table.units;
            meta.title = table.title;
            meta.energy_unit = table.unit;
            meta.notes = table.notes;
            render_records(&meta, &table.rows, format)
        }
        Command::Spectrum => {
            let spec = potential(config, &units)?;
            let rows = spectrum_rows(config, &spec, &units)?;
            meta.title = format!("Self-consistent levels of {}", config.require("potential")?);
            render_records(&meta, &rows, format)
        }
        Command::TurningPoints => {
            let spec = potential(config, &units)?;
            let energy: f64 = required(config, "energy")?;
            let mut rows = Vec::new();
            for l in parse_range(config.get("l").unwrap_or("0"))? {
                let u = EffectivePotential::new(spec.clone(), l, units.clone())?;
                let tp = turning_points(&u, energy)?;
                rows.push(TurningPointRow {
                    l,
                    energy,
                    r1: tp.r1,
                    r2: tp.r2,
                    r0: tp.r0,
                    d: tp.d,
                    method: match tp.method {
                        Method::ClosedForm => "closed_form".into(),
                        Method::Numeric => "numeric".into(),
                    },
                });
            }
            meta.title = format!("Turning points of {}", config.require("potential")?);
            render_records(&meta, &rows, format)
        }
        Command::Wavefunction => {
            let spec = potential(config, &units)?;
            let samples = wavefunction_samples(config, &spec, &units)?;
            meta.title = format!("Radial wavefunction R(r) of {}", config.require("potential")?);
            render_records(&meta, &samples, format)
        }
        Command::Oracle(OracleCommand::BesselZeros) => {
            let mut rows = Vec::new();
            for l in parse_range(config.get("l").unwrap_or("0"))? {
                for n in parse_range(config.get("n").unwrap_or("1"))? {
                    rows.push(BesselZeroRow {
                        l,
                        n,
                        beta: bessel_zero(l, n)?,
                    });
                }
            }
            meta.title = "Zeros of the spherical Bessel functions".into();
            render_records(&meta, &rows, format)
        }
        Command::Oracle(OracleCommand::Numerov) => {
            let spec = potential(config, &units)?;
            let bracket = parse_pair(config.require("bracket")?)?;
            let mut rows = Vec::new();
            for l in parse_range(config.get("l").unwrap_or("0"))? {
                let u = EffectivePotential::new(spec.clone(), l, units.clone())?;
                for nodes in parse_range(config.get("nodes").unwrap_or("0"))? {
                    rows.push(numerov_bound_state(&u, nodes, bracket, &NumerovOptions::default())?.into());
                }
            }
            meta.title = format!("Numerov levels of {}", config.require("potential")?);
            render_records::<OracleRow>(&meta, &rows, format)
        }
        Command::Oracle(OracleCommand::Ho) => {
            let omega = config.parsed_or("omega", 1.0)?;
            let indexing = match config.get("indexing").unwrap_or("from-zero") {
                "from-zero" | "zero" | "0" => Indexing::FromZero,
                "from-one" | "one" | "1" => Indexing::FromOne,
                other => {
                    return Err(Error::Config(format!(
                        "unknown indexing `{other}` (from-zero, from-one)"
                    )))
                }
            };
            let mut rows = Vec::new();
            for l in parse_range(config.get("l").unwrap_or("0"))? {
                for n in parse_range(config.get("n").unwrap_or("1"))? {
                    let index = indexing.index_for_label(n)?;
                    rows.push(ho_oracle_energy(index, l, omega, &units, indexing)?.into());
                }
            }
            meta.title = "Oscillator levels (2n + l + 3/2) hbar omega".into();
            meta.notes.push(format!(
                "state label n maps to formula index n - 1 + {}",
                indexing.base()
            ));
            render_records::<OracleRow>(&meta, &rows, format)
        }
        Command::Oracle(OracleCommand::Well) => {
            let radius = config.parsed_or("radius", 1.0)?;
            let mut rows = Vec::new();
            for l in parse_range(config.get("l").unwrap_or("0"))? {
                for n in parse_range(config.get("n").unwrap_or("1"))? {
                    rows.push(well_oracle_energy(radius, l, n, &units)?.into());
                }
            }
            meta.title = "Infinite spherical well levels (hbar^2 / 2 m L^2) beta_nl^2".into();
            render_records::<OracleRow>(&meta, &rows, format)
        }
    }
}

fn kind(command: Command) -> &'static str {
    match command {
        Command::Tables => "table",
        Command::Spectrum => "spectrum",
        Command::TurningPoints => "turning_points",
        Command::Wavefunction => "wavefunction",
        Command::Oracle(OracleCommand::BesselZeros) => "oracle_bessel_zeros",
        Command::Oracle(OracleCommand::Numerov) => "oracle_numerov",
        Command::Oracle(OracleCommand::Ho) => "oracle_ho",
        Command::Oracle(OracleCommand::Well) => "oracle_well",
    }
}

fn potential(config: &RunConfig, units: &UnitSystem) -> Result<PotentialSpec> {
    parse_potential(config.require("potential")?, units)
}

fn required<T: std::str::FromStr>(config: &RunConfig, key: &str) -> Result<T>
where
    T::Err: std::fmt::Display,
{
    config
        .parsed(key)?
        .ok_or_else(|| Error::Config(format!("missing setting `{key}`")))
}

fn branch_for(name: &str, n: u32) -> Result<EnergyBranch> {
    match name.trim().to_ascii_lowercase().as_str() {
        "ground" => Ok(EnergyBranch::Ground),
        "symmetric" | "sym" => Ok(EnergyBranch::Symmetric(n)),
        "antisymmetric" | "anti" => Ok(EnergyBranch::Antisymmetric(n)),
        "general" | "gen" => Ok(EnergyBranch::General(n)),
        other => Err(Error::Config(format!(
            "unknown branch `{other}` (ground, symmetric, antisymmetric, general)"
        ))),
    }
}

fn spectrum_rows(config: &RunConfig, spec: &PotentialSpec, units: &UnitSystem) -> Result<Vec<LevelRow>> {
    let branch_name = config.get("branch").unwrap_or("general");
    let ground = branch_name.trim().eq_ignore_ascii_case("ground");
    let signed = match config.parsed::<bool>("signed")? {
        Some(s) => s,
        None => matches!(spec, PotentialSpec::HydrogenLike { .. }),
    };
    let opts = SolveOptions {
        signed,
        ..SolveOptions::default()
    };
    let ns = if ground {
        vec![0]
    } else {
        parse_range(config.get("n").unwrap_or("1"))?
    };
    let mut rows = Vec::new();
    for l in parse_range(config.get("l").unwrap_or("0"))? {
        let u = EffectivePotential::new(spec.clone(), l, units.clone())?;
        for &n in &ns {
            let level = self_consistent_energy(&u, branch_for(branch_name, n)?.validate()?, &opts)?;
            rows.push(LevelRow::from(level));
        }
    }
    Ok(rows)
}

fn wavefunction_samples(config: &RunConfig, spec: &PotentialSpec, units: &UnitSystem) -> Result<Vec<WaveSample>> {
    let l = config.parsed_or("l", 0u32)?;
    let samples = config.parsed_or("samples", 512usize)?;
    if samples < 2 {
        return Err(Error::Config(format!("samples must be at least 2, got {samples}")));
    }
    if matches!(spec, PotentialSpec::FreeParticle) {
        let k = config.parsed_or("k", 1.0)?;
        let carrier: Carrier = config.parsed_or("carrier", Carrier::Cos)?;
        let rmax: f64 = config.parsed_or("rmax", 10.0)?;
        let wave = FreeParticleWave::new(l, k, carrier)?;
        let grid = uniform_grid(rmax / samples as f64, rmax, samples)?;
        return sample_wavefunction(&wave, &grid);
    }
    let parity: Parity = config.parsed_or("parity", Parity::Symmetric)?;
    let n = config.parsed_or("n", 1u32)?;
    let u = EffectivePotential::new(spec.clone(), l, units.clone())?;
    let wf = RadialWaveFunction::quantized(&u, parity, n)?.normalize()?;
    let tp = wf.turning_points();
    // R = F/r is undefined at the origin, so an r₁ = 0 endpoint is dropped.
    let grid: Vec<f64> = uniform_grid(tp.r1, tp.r2, samples)?
        .into_iter()
        .filter(|&r| r > 0.0)
        .collect();
    sample_wavefunction(&wf, &grid)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LevelRow {
    pub l: u32,
    pub j: Option<String>,
    pub branch: String,
    pub energy: f64,
    pub d: f64,
    pub root_sign: String,
    pub iterations: usize,
    pub converged: bool,
}

impl From<EnergyLevel> for LevelRow {
    fn from(level: EnergyLevel) -> Self {
        LevelRow {
            l: level.l,
            j: level.j.map(|j| j.to_string()),
            branch: level.branch.to_string(),
            energy: level.value,
            d: level.d_at_solution,
            root_sign: serde_json::to_value(level.root_sign)
                .ok()
                .and_then(|v| v.as_str().map(str::to_string))
                .unwrap_or_default(),
            iterations: level.iterations,
            converged: level.converged,
        }
    }
}

impl Record for LevelRow {
    const COLUMNS: &'static [&'static str] = &[
        "l",
        "j",
        "branch",
        "energy",
        "d",
        "root_sign",
        "iterations",
        "converged",
    ];

    fn text_cells(&self) -> Vec<String> {
        vec![
            self.l.to_string(),
            self.j.clone().unwrap_or_else(|| "-".into()),
            self.branch.clone(),
            sig6(self.energy),
            sig6(self.d),
            self.root_sign.clone(),
            self.iterations.to_string(),
            self.converged.to_string(),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TurningPointRow {
    pub l: u32,
    pub energy: f64,
    pub r1: f64,
    pub r2: f64,
    pub r0: f64,
    pub d: f64,
    pub method: String,
}

impl Record for TurningPointRow {
    const COLUMNS: &'static [&'static str] = &["l", "energy", "r1", "r2", "r0", "d", "method"];

    fn text_cells(&self) -> Vec<String> {
        vec![
            self.l.to_string(),
            sig6(self.energy),
            sig6(self.r1),
            sig6(self.r2),
            sig6(self.r0),
            sig6(self.d),
            self.method.clone(),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BesselZeroRow {
    pub l: u32,
    pub n: u32,
    pub beta: f64,
}

impl Record for BesselZeroRow {
    const COLUMNS: &'static [&'static str] = &["l", "n", "beta"];

    fn text_cells(&self) -> Vec<String> {
        vec![self.l.to_string(), self.n.to_string(), sig6(self.beta)]
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleRow {
    pub source: String,
    pub n: u32,
    pub l: u32,
    pub j: Option<String>,
    pub energy: f64,
}

impl From<OracleEnergy> for OracleRow {
    fn from(e: OracleEnergy) -> Self {
        OracleRow {
            source: e.source.to_string(),
            n: e.quantum_numbers.n,
            l: e.quantum_numbers.l,
            j: e.quantum_numbers.j.map(|j| j.to_string()),
            energy: e.value,
        }
    }
}

impl Record for OracleRow {
    const COLUMNS: &'static [&'static str] = &["source", "n", "l", "j", "energy"];

    fn text_cells(&self) -> Vec<String> {
        vec![
            self.source.clone(),
            self.n.to_string(),
            self.l.to_string(),
            self.j.clone().unwrap_or_else(|| "-".into()),
            sig6(self.energy),
        ]
    }
}

impl Record for WaveSample {
    const COLUMNS: &'static [&'static str] = &["r", "re", "im", "below_r1"];
    const COLLECTION: &'static str = "samples";

    fn text_cells(&self) -> Vec<String> {
        vec![sig6(self.r), sig6(self.re), sig6(self.im), self.below_r1.to_string()]
    }
}
