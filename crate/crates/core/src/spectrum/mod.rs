//! Energy levels from the width d = r₂ − r₁ of the classically allowed region.

mod closed;
mod solver;

use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};

pub use closed::{
    ho_energies, ho_energy_roots, ho_gn, ho_spin_orbit_energies, ho_spin_orbit_energy_roots, hoso_gn,
    hydrogen_ground_energy, spin_orbit_cj, well_energies, WellEnergies,
};
pub use solver::{parabolic_energies, self_consistent_energy, SolveOptions, TpMethod};

use crate::error::{Error, Result};
use crate::potentials::{HalfInt, UnitSystem};

/// Which quantization condition fixes the energy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "branch", content = "n", rename_all = "snake_case")]
pub enum EnergyBranch {
    Ground,
    Symmetric(u32),
    Antisymmetric(u32),
    General(u32),
}

impl EnergyBranch {
    /// Principal index; the ground branch counts as 1.
    pub fn n(self) -> u32 {
        match self {
            EnergyBranch::Ground => 1,
            EnergyBranch::Symmetric(n) | EnergyBranch::Antisymmetric(n) | EnergyBranch::General(n) => n,
        }
    }

    pub fn validate(self) -> Result<Self> {
        if self.n() == 0 {
            return Err(Error::domain(format!("{self}: quantum number n starts at 1")));
        }
        Ok(self)
    }

    /// g such that E = g/d².
    pub fn coupling(self, units: &UnitSystem) -> Result<f64> {
        let base = units.hbar * units.hbar / units.mass;
        let n = self.validate()?.n() as f64;
        Ok(match self {
            EnergyBranch::Ground => 2.0 * base,
            EnergyBranch::Symmetric(_) => 2.0 * base * PI * PI * (n - 0.5).powi(2),
            EnergyBranch::Antisymmetric(_) => 2.0 * base * PI * PI * n * n,
            EnergyBranch::General(_) => 0.5 * base * PI * PI * n * n,
        })
    }
}

impl fmt::Display for EnergyBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnergyBranch::Ground => write!(f, "ground"),
            EnergyBranch::Symmetric(n) => write!(f, "symmetric({n})"),
            EnergyBranch::Antisymmetric(n) => write!(f, "antisymmetric({n})"),
            EnergyBranch::General(n) => write!(f, "general({n})"),
        }
    }
}

impl std::str::FromStr for EnergyBranch {
    type Err = Error;

    /// `ground`, `symmetric:2`, `antisymmetric:1`, `general:3` (or `general(3)`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        let bad = || Error::Config(format!("unknown energy branch `{s}`"));
        if s == "ground" {
            return Ok(EnergyBranch::Ground);
        }
        let (name, n) = s
            .split_once(':')
            .or_else(|| s.strip_suffix(')').and_then(|t| t.split_once('(')))
            .ok_or_else(bad)?;
        let n: u32 = n.trim().parse().map_err(|_| bad())?;
        let branch = match name.trim() {
            "symmetric" | "sym" => EnergyBranch::Symmetric(n),
            "antisymmetric" | "anti" => EnergyBranch::Antisymmetric(n),
            "general" | "gen" => EnergyBranch::General(n),
            _ => return Err(bad()),
        };
        branch.validate().map_err(|e| Error::Config(e.to_string()))
    }
}

/// Which root of a two-branch closed form a level came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RootSign {
    Plus,
    Minus,
    NotApplicable,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnergyLevel {
    pub branch: EnergyBranch,
    pub l: u32,
    pub j: Option<HalfInt>,
    pub value: f64,
    pub d_at_solution: f64,
    pub root_sign: RootSign,
    pub iterations: usize,
    pub converged: bool,
}

fn check_width(d: f64) -> Result<()> {
    if d > 0.0 && d.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!("width d must be finite and positive, got {d}")))
    }
}

/// 2ħ²/(md²), negative when `signed` (the bound-state sign convention).
pub fn ground_energy_from_d(d: f64, units: &UnitSystem, signed: bool) -> Result<f64> {
    let e = excited_energy_from_d(d, EnergyBranch::Ground, units)?;
    Ok(if signed { -e } else { e })
}

/// g_branch/d²: ground 2ħ²/md², symmetric (2ħ²π²/md²)(n−½)²,
/// antisymmetric (2ħ²π²/md²)n², general (ħ²π²/2md²)n².
pub fn excited_energy_from_d(d: f64, branch: EnergyBranch, units: &UnitSystem) -> Result<f64> {
    check_width(d)?;
    Ok(branch.coupling(units)? / (d * d))
}

/// Bound state of the delta-function model for a given area S.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DeltaModel {
    /// Decay constant k = m|S|/ħ².
    pub k: f64,
    /// E = −mS²/2ħ².
    pub energy: f64,
    /// |A| = √k.
    pub amplitude: f64,
}

pub fn delta_model_energy(s: f64, units: &UnitSystem) -> Result<DeltaModel> {
    if !s.is_finite() {
        return Err(Error::domain(format!("area S must be finite, got {s}")));
    }
    if s == 0.0 {
        return Err(Error::domain("S = 0: the delta model has no bound state"));
    }
    let hb2 = units.hbar * units.hbar;
    let k = units.mass * s.abs() / hb2;
    Ok(DeltaModel {
        k,
        energy: -units.mass * s * s / (2.0 * hb2),
        amplitude: k.sqrt(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn nat() -> UnitSystem {
        UnitSystem::natural()
    }

    #[test]
    fn ground_formula() {
        assert_eq!(ground_energy_from_d(1.0, &nat(), false).unwrap(), 2.0);
        assert_eq!(ground_energy_from_d(2.0, &nat(), true).unwrap(), -0.5);
        assert!(ground_energy_from_d(0.0, &nat(), false).is_err());
        assert!(ground_energy_from_d(-1.0, &nat(), true).is_err());
    }

    #[test]
    fn branch_formulas_at_unit_width() {
        let half_pi2 = PI * PI / 2.0;
        let g1 = excited_energy_from_d(1.0, EnergyBranch::General(1), &nat()).unwrap();
        let s1 = excited_energy_from_d(1.0, EnergyBranch::Symmetric(1), &nat()).unwrap();
        assert!((g1 - half_pi2).abs() < 1e-15);
        assert!((s1 - half_pi2).abs() < 1e-15);
        assert!((g1 - 4.934802).abs() < 1e-6);
        assert!(EnergyBranch::General(0).coupling(&nat()).is_err());
    }

    #[test]
    fn delta_model_examples() {
        let m = delta_model_energy(1.0, &nat()).unwrap();
        assert_eq!((m.k, m.energy, m.amplitude), (1.0, -0.5, 1.0));
        assert_eq!(delta_model_energy(2.0, &nat()).unwrap().energy, -2.0);
        assert_eq!(delta_model_energy(-2.0, &nat()).unwrap().energy, -2.0);
        assert!(delta_model_energy(0.0, &nat()).is_err());
    }

    #[test]
    fn delta_model_reproduces_signed_ground_energy() {
        // S = E₀·d with E₀ = −2ħ²/md² returns E₀ for any width.
        let u = UnitSystem::new(1.3, 0.7, 1.0, "t").unwrap();
        for d in [0.1, 1.0, 2.5, 40.0] {
            let e0 = ground_energy_from_d(d, &u, true).unwrap();
            let model = delta_model_energy(e0 * d, &u).unwrap();
            assert!((model.energy - e0).abs() <= 1e-14 * e0.abs());
        }
    }

    #[test]
    fn parses_branches() {
        assert_eq!("ground".parse::<EnergyBranch>().unwrap(), EnergyBranch::Ground);
        assert_eq!("general:3".parse::<EnergyBranch>().unwrap(), EnergyBranch::General(3));
        assert_eq!(
            "symmetric(2)".parse::<EnergyBranch>().unwrap(),
            EnergyBranch::Symmetric(2)
        );
        assert!("general:0".parse::<EnergyBranch>().is_err());
        assert!("odd:1".parse::<EnergyBranch>().is_err());
        assert_eq!(EnergyBranch::Antisymmetric(4).to_string(), "antisymmetric(4)");
    }

    proptest! {
        #[test]
        fn general_index_identities(d in 0.01f64..100.0, k in 1u32..=10, hbar in 0.1f64..10.0, mass in 0.1f64..10.0) {
            let u = UnitSystem::new(hbar, mass, 1.0, "t").unwrap();
            let g_even = excited_energy_from_d(d, EnergyBranch::General(2 * k), &u).unwrap();
            let anti = excited_energy_from_d(d, EnergyBranch::Antisymmetric(k), &u).unwrap();
            prop_assert!((g_even - anti).abs() <= 4.0 * f64::EPSILON * anti);
            let g_odd = excited_energy_from_d(d, EnergyBranch::General(2 * k - 1), &u).unwrap();
            let sym = excited_energy_from_d(d, EnergyBranch::Symmetric(k), &u).unwrap();
            prop_assert!((g_odd - sym).abs() <= 4.0 * f64::EPSILON * sym);
        }

        #[test]
        fn quarter_scaling_under_doubled_width(d in 0.01f64..100.0, signed: bool) {
            let u = nat();
            let e1 = ground_energy_from_d(d, &u, signed).unwrap();
            let e2 = ground_energy_from_d(2.0 * d, &u, signed).unwrap();
            prop_assert!((e2 - e1 / 4.0).abs() <= 4.0 * f64::EPSILON * e1.abs());
        }

        #[test]
        fn general_branch_increases_with_n(d in 0.01f64..100.0, n in 1u32..50) {
            let u = nat();
            let a = excited_energy_from_d(d, EnergyBranch::General(n), &u).unwrap();
            let b = excited_energy_from_d(d, EnergyBranch::General(n + 1), &u).unwrap();
            prop_assert!(b > a);
        }
    }
}
