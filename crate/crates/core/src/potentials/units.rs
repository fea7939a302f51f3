use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// ħc in eV·nm.
pub const HBAR_C_EV_NM: f64 = 197.326_980_4;
/// Electron rest energy m_e c² in eV.
pub const ELECTRON_REST_ENERGY_EV: f64 = 510_998.950_00;
/// Coulomb coupling e²/(4πε₀) in eV·nm.
pub const COULOMB_COUPLING_EV_NM: f64 = 1.439_964_548;
/// Speed of light in natural units (inverse fine-structure constant).
pub const NATURAL_LIGHT_SPEED: f64 = 137.035_999;

/// Physical constants the rest of the crate is expressed in.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UnitSystem {
    pub hbar: f64,
    pub mass: f64,
    /// Only the relativistic spin-orbit constant reads this.
    pub light_speed: f64,
    /// Elementary charge, normalized so that e² is the Coulomb coupling.
    pub charge: f64,
    pub label: String,
}

impl UnitSystem {
    pub fn new(hbar: f64, mass: f64, light_speed: f64, label: impl Into<String>) -> Result<Self> {
        for (name, v) in [("hbar", hbar), ("mass", mass), ("light_speed", light_speed)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::domain(format!(
                    "unit constant {name} must be finite and positive, got {v}"
                )));
            }
        }
        Ok(UnitSystem {
            hbar,
            mass,
            light_speed,
            charge: 1.0,
            label: label.into(),
        })
    }

    /// ħ = m = 1, c = 137.036.
    pub fn natural() -> Self {
        UnitSystem {
            hbar: 1.0,
            mass: 1.0,
            light_speed: NATURAL_LIGHT_SPEED,
            charge: 1.0,
            label: "natural".into(),
        }
    }

    /// Electron in eV and nm, with time measured so that c = 1: ħ carries
    /// ħc (eV·nm) and the mass carries m_e c² (eV).
    pub fn ev_nm() -> Self {
        UnitSystem {
            hbar: HBAR_C_EV_NM,
            mass: ELECTRON_REST_ENERGY_EV,
            light_speed: 1.0,
            charge: COULOMB_COUPLING_EV_NM.sqrt(),
            label: "ev-nm".into(),
        }
    }

    pub fn preset(name: &str) -> Result<Self> {
        match name.trim().to_ascii_lowercase().as_str() {
            "natural" => Ok(Self::natural()),
            "ev-nm" | "ev_nm" | "evnm" | "ev/nm" => Ok(Self::ev_nm()),
            other => Err(Error::Config(format!(
                "unknown units preset `{other}` (expected natural or ev-nm)"
            ))),
        }
    }

    /// m₁ = √(2m/ħ²).
    pub fn m1(&self) -> f64 {
        (2.0 * self.mass).sqrt() / self.hbar
    }

    /// ħ²/2m, the kinetic prefactor.
    pub fn kinetic(&self) -> f64 {
        self.hbar * self.hbar / (2.0 * self.mass)
    }
}

impl Default for UnitSystem {
    fn default() -> Self {
        Self::natural()
    }
}
