//! Reference spectra that do not depend on turning points: spherical Bessel
//! zeros, the textbook oscillator and Coulomb levels, and a Numerov shooting
//! solver.

mod bessel;
mod numerov;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use bessel::{bessel_zero, spherical_bessel, MAX_ZERO_ORDER};
pub use numerov::{numerov_bound_state, NumerovOptions};

use crate::error::{Error, Result};
use crate::potentials::{spin_orbit_constant, HalfInt, SpinOrbitCoupling, UnitSystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleSource {
    BesselWell,
    AnalyticHo,
    PerturbedHoSo,
    Bohr,
    Numerov,
}

impl fmt::Display for OracleSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            OracleSource::BesselWell => "bessel_well",
            OracleSource::AnalyticHo => "analytic_ho",
            OracleSource::PerturbedHoSo => "perturbed_ho_so",
            OracleSource::Bohr => "bohr",
            OracleSource::Numerov => "numerov",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuantumNumbers {
    pub n: u32,
    pub l: u32,
    pub j: Option<HalfInt>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OracleEnergy {
    pub source: OracleSource,
    pub quantum_numbers: QuantumNumbers,
    pub value: f64,
}

/// Where the radial index of the oscillator formula (2n + ℓ + 3/2)ħω starts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Indexing {
    /// n = 0, 1, 2, …: the state labelled 1 uses n = 0.
    FromZero,
    /// n = 1, 2, 3, …: the state labelled 1 uses n = 1.
    FromOne,
}

impl Indexing {
    pub fn base(self) -> u32 {
        match self {
            Indexing::FromZero => 0,
            Indexing::FromOne => 1,
        }
    }

    /// Formula index for a state labelled `label` (1s, 2p, …).
    pub fn index_for_label(self, label: u32) -> Result<u32> {
        if label == 0 {
            return Err(Error::domain("state labels start at 1"));
        }
        Ok(label - 1 + self.base())
    }

    fn check(self, n_index: u32) -> Result<()> {
        if n_index < self.base() {
            return Err(Error::domain(format!(
                "n = {n_index} is below the first index {} of {self:?}",
                self.base()
            )));
        }
        Ok(())
    }
}

/// (ħ²/2mL²)·β²_{nℓ}.
pub fn well_oracle_energy(radius: f64, l: u32, n: u32, units: &UnitSystem) -> Result<OracleEnergy> {
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(Error::domain(format!(
            "well radius must be finite and positive, got {radius}"
        )));
    }
    let beta = bessel_zero(l, n)?;
    Ok(OracleEnergy {
        source: OracleSource::BesselWell,
        quantum_numbers: QuantumNumbers { n, l, j: None },
        value: units.hbar * units.hbar / (2.0 * units.mass * radius * radius) * beta * beta,
    })
}

/// (2n + ℓ + 3/2)ħω with n = `n_index` taken as given; `indexing` only fixes
/// the smallest admissible index.
pub fn ho_oracle_energy(
    n_index: u32,
    l: u32,
    omega: f64,
    units: &UnitSystem,
    indexing: Indexing,
) -> Result<OracleEnergy> {
    indexing.check(n_index)?;
    if !(omega > 0.0 && omega.is_finite()) {
        return Err(Error::domain(format!("omega must be finite and positive, got {omega}")));
    }
    Ok(OracleEnergy {
        source: OracleSource::AnalyticHo,
        quantum_numbers: QuantumNumbers {
            n: n_index + 1 - indexing.base(),
            l,
            j: None,
        },
        value: (2.0 * n_index as f64 + l as f64 + 1.5) * units.hbar * omega,
    })
}

/// (2n + ℓ + 3/2)ħω − C_ℓsj: the oscillator level shifted by the spin-orbit
/// constant to first order.
#[allow(clippy::too_many_arguments)]
pub fn ho_so_oracle_energy(
    n_index: u32,
    l: u32,
    j: HalfInt,
    s: HalfInt,
    coupling: SpinOrbitCoupling,
    omega: f64,
    units: &UnitSystem,
    indexing: Indexing,
) -> Result<OracleEnergy> {
    let base = ho_oracle_energy(n_index, l, omega, units, indexing)?;
    let shift = spin_orbit_constant(omega, j, l, s, units, coupling)?;
    Ok(OracleEnergy {
        source: OracleSource::PerturbedHoSo,
        quantum_numbers: QuantumNumbers {
            j: Some(j),
            ..base.quantum_numbers
        },
        value: base.value - shift,
    })
}

/// −(me⁴/2ħ²)·Z²/n², with e taken from the unit system.
pub fn bohr_energy(z: u32, n: u32, units: &UnitSystem) -> Result<OracleEnergy> {
    if z == 0 || n == 0 {
        return Err(Error::domain("Bohr levels need Z ≥ 1 and n ≥ 1"));
    }
    let e2 = units.charge * units.charge;
    let (z, nf) = (z as f64, n as f64);
    Ok(OracleEnergy {
        source: OracleSource::Bohr,
        quantum_numbers: QuantumNumbers { n, l: 0, j: None },
        value: -units.mass * e2 * e2 / (2.0 * units.hbar * units.hbar) * z * z / (nf * nf),
    })
}
