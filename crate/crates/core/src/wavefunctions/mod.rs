//! Radial wavefunctions built on the turning points: the damped periodic
//! solution between r₁ and r₂, the delta-model exponential, the evanescent
//! envelope and the free-particle forms.
//!
//! `F` denotes the reduced function r·R(r); boundary conditions and the
//! normalization integral are stated for F.

mod delta;
mod free;
mod sample;

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

pub use delta::{delta_model_derivative, delta_model_wavefunction, evanescent_eval};
pub use free::{free_particle_radial, Carrier, FreeParticleWave};
pub use sample::{sample_wavefunction, uniform_grid, Sampled, WaveSample};

use crate::error::{Error, Result};
use crate::potentials::EffectivePotential;
use crate::quadrature::{adaptive_integral, phase_q};
use crate::spectrum::{self_consistent_energy, EnergyBranch, SolveOptions};
use crate::turning_points::{turning_points, TurningPoints};

/// Tolerance of the normalization integral.
pub const NORM_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    /// cos carrier, quantized by K·d = (2n−1)π.
    Symmetric,
    /// sin carrier, quantized by K·d = 2nπ.
    Antisymmetric,
}

impl Parity {
    pub fn branch(self, n: u32) -> EnergyBranch {
        match self {
            Parity::Symmetric => EnergyBranch::Symmetric(n),
            Parity::Antisymmetric => EnergyBranch::Antisymmetric(n),
        }
    }
}

impl std::str::FromStr for Parity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "symmetric" | "sym" | "even" => Ok(Parity::Symmetric),
            "antisymmetric" | "anti" | "odd" => Ok(Parity::Antisymmetric),
            other => Err(Error::Config(format!(
                "unknown parity `{other}` (symmetric, antisymmetric)"
            ))),
        }
    }
}

/// Argument of the periodic carrier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CarrierArgument {
    /// K(r − r₀): vanishes at both turning points once quantized.
    #[default]
    Centered,
    /// K·r, kept for comparison with the uncentred printing of the solution.
    Absolute,
}

/// F(r) = A·carrier(r)·e^{−Q(r)} on [r₁, r₂] and zero outside, with Q
/// measured from r₁.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadialWaveFunction {
    potential: EffectivePotential,
    tp: TurningPoints,
    k: f64,
    parity: Parity,
    n: u32,
    amplitude: f64,
    argument: CarrierArgument,
}

impl RadialWaveFunction {
    /// The quantized state: E from the self-consistent solver for the
    /// symmetric or antisymmetric branch, K = m₁√E.
    pub fn quantized(potential: &EffectivePotential, parity: Parity, n: u32) -> Result<Self> {
        let level = self_consistent_energy(potential, parity.branch(n).validate()?, &SolveOptions::default())?;
        let tp = turning_points(potential, level.value)?;
        let k = potential.units().m1() * level.value.sqrt();
        Self::with_wave_number(potential, tp, k, parity, n)
    }

    /// A state with an arbitrary wave number on given turning points, for
    /// checking what quantization buys.
    pub fn with_wave_number(
        potential: &EffectivePotential,
        tp: TurningPoints,
        k: f64,
        parity: Parity,
        n: u32,
    ) -> Result<Self> {
        if !(tp.energy > 0.0) {
            return Err(Error::domain(format!(
                "the periodic solution needs E > 0 so that K = m₁√E is real, got E = {}",
                tp.energy
            )));
        }
        if !(k > 0.0 && k.is_finite()) {
            return Err(Error::domain(format!(
                "wave number must be finite and positive, got {k}"
            )));
        }
        if n == 0 {
            return Err(Error::domain("quantum number n starts at 1"));
        }
        // Fails early when U < 0 somewhere between the turning points.
        phase_q(potential, tp.r2, tp.r1)?;
        Ok(RadialWaveFunction {
            potential: potential.clone(),
            tp,
            k,
            parity,
            n,
            amplitude: 1.0,
            argument: CarrierArgument::Centered,
        })
    }

    pub fn with_argument(mut self, argument: CarrierArgument) -> Self {
        self.argument = argument;
        self
    }

    pub fn with_amplitude(mut self, amplitude: f64) -> Result<Self> {
        if !(amplitude >= 0.0 && amplitude.is_finite()) {
            return Err(Error::domain(format!(
                "amplitude must be finite and non-negative, got {amplitude}"
            )));
        }
        self.amplitude = amplitude;
        Ok(self)
    }

    pub fn potential(&self) -> &EffectivePotential {
        &self.potential
    }

    pub fn turning_points(&self) -> &TurningPoints {
        &self.tp
    }

    pub fn wave_number(&self) -> f64 {
        self.k
    }

    pub fn energy(&self) -> f64 {
        self.tp.energy
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn amplitude(&self) -> f64 {
        self.amplitude
    }

    pub fn argument(&self) -> CarrierArgument {
        self.argument
    }

    /// cos or sin of K(r − r₀) (or K·r).
    pub fn carrier(&self, r: f64) -> f64 {
        let x = match self.argument {
            CarrierArgument::Centered => self.k * (r - self.tp.r0),
            CarrierArgument::Absolute => self.k * r,
        };
        match self.parity {
            Parity::Symmetric => x.cos(),
            Parity::Antisymmetric => x.sin(),
        }
    }

    /// e^{−Q(r)} with Q(r₁) = 0.
    pub fn envelope(&self, r: f64) -> Result<f64> {
        if r == self.tp.r1 {
            return Ok(1.0);
        }
        Ok((-phase_q(&self.potential, r, self.tp.r1)?.value).exp())
    }

    fn inside(&self, r: f64) -> bool {
        r >= self.tp.r1 && r <= self.tp.r2
    }

    /// F(r) = r·R(r); zero outside [r₁, r₂].
    pub fn eval_reduced(&self, r: f64) -> Result<f64> {
        if !(r >= 0.0) {
            return Err(Error::domain(format!("radius must be non-negative, got {r}")));
        }
        if !self.inside(r) {
            return Ok(0.0);
        }
        Ok(self.amplitude * self.carrier(r) * self.envelope(r)?)
    }

    /// R(r) = F(r)/r.
    pub fn eval_radial(&self, r: f64) -> Result<f64> {
        if !(r > 0.0) {
            return Err(Error::domain(format!("radius must be positive, got {r}")));
        }
        Ok(self.eval_reduced(r)? / r)
    }

    /// ∫_{r₁}^{r₂} F² dr.
    pub fn norm_squared(&self) -> Result<f64> {
        let f = |r: f64| self.eval_reduced(r).map(|v| v * v).unwrap_or(f64::NAN);
        Ok(adaptive_integral(f, self.tp.r1, self.tp.r2, NORM_TOLERANCE)?.value)
    }

    /// A copy with the amplitude chosen so that ∫F² dr = 1 over [r₁, r₂].
    pub fn normalize(&self) -> Result<Self> {
        let unit = self.clone().with_amplitude(1.0)?;
        let norm = unit.norm_squared()?;
        if !(norm > 0.0 && norm.is_finite()) {
            return Err(Error::NotNormalizable(format!(
                "∫F² dr = {norm} over [{}, {}]",
                self.tp.r1, self.tp.r2
            )));
        }
        unit.with_amplitude(norm.sqrt().recip())
    }

    /// |F(r₁)|, |F(r₂)| and a sampled max|F| to compare them against.
    pub fn boundary_residuals(&self) -> Result<BoundaryResiduals> {
        let (r1, r2) = (self.tp.r1, self.tp.r2);
        let mut max_abs = 0.0f64;
        for r in uniform_grid(r1, r2, 4097)? {
            max_abs = max_abs.max(self.eval_reduced(r)?.abs());
        }
        Ok(BoundaryResiduals {
            at_r1: self.eval_reduced(r1)?.abs(),
            at_r2: self.eval_reduced(r2)?.abs(),
            max_abs,
        })
    }

    /// Sign changes of F over `samples` uniform points strictly inside (r₁, r₂).
    pub fn interior_nodes(&self, samples: usize) -> Result<usize> {
        let (r1, r2) = (self.tp.r1, self.tp.r2);
        let h = (r2 - r1) / (samples + 1) as f64;
        let mut count = 0;
        let mut prev = 0.0f64;
        for i in 1..=samples {
            let v = self.eval_reduced(r1 + h * i as f64)?;
            if v != 0.0 {
                if prev != 0.0 && (v < 0.0) != (prev < 0.0) {
                    count += 1;
                }
                prev = v;
            }
        }
        // An exact zero on the grid (the midpoint node of the sin carrier)
        // is crossed between its non-zero neighbours and counted above.
        Ok(count)
    }

    /// K·d/π: an odd integer for quantized symmetric states, even for
    /// antisymmetric ones.
    pub fn quantization_ratio(&self) -> f64 {
        self.k * self.tp.d / PI
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundaryResiduals {
    pub at_r1: f64,
    pub at_r2: f64,
    pub max_abs: f64,
}

impl BoundaryResiduals {
    /// The larger residual as a fraction of max|F|.
    pub fn relative(&self) -> f64 {
        self.at_r1.max(self.at_r2) / self.max_abs
    }
}
