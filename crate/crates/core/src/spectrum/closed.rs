//! Closed-form spectra for the hydrogen-like atom, the spherical well and the
//! oscillators, obtained by eliminating E between E = g/d² and d(E).

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::EnergyBranch;
use crate::error::{Error, Result};
use crate::potentials::{spin_orbit_constant, HalfInt, SpinOrbitCoupling, UnitSystem};

/// −(me⁴/2ħ²)·Z²/(1 + ℓ(ℓ+1)), with e taken from the unit system.
pub fn hydrogen_ground_energy(z: u32, l: u32, units: &UnitSystem) -> Result<f64> {
    if z == 0 {
        return Err(Error::domain("hydrogen-like Z must be at least 1"));
    }
    let l2 = casimir(l);
    let e2 = units.charge * units.charge;
    let z = z as f64;
    Ok(-units.mass * e2 * e2 / (2.0 * units.hbar * units.hbar) * z * z / (1.0 + l2))
}

fn casimir(l: u32) -> f64 {
    let l = l as f64;
    l * (l + 1.0)
}

/// The two roots of the well quantization, E = [(√a ± √g)/L]².
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WellEnergies {
    pub plus: f64,
    pub minus: f64,
}

/// Infinite spherical well of radius L, with a = ħ²ℓ(ℓ+1)/2m and g taken
/// from the branch.
pub fn well_energies(radius: f64, l: u32, branch: EnergyBranch, units: &UnitSystem) -> Result<WellEnergies> {
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(Error::domain(format!(
            "well radius must be finite and positive, got {radius}"
        )));
    }
    let sa = (units.hbar * units.hbar * casimir(l) / (2.0 * units.mass)).sqrt();
    let sg = branch.coupling(units)?.sqrt();
    Ok(WellEnergies {
        plus: ((sa + sg) / radius).powi(2),
        minus: ((sa - sg) / radius).powi(2),
    })
}

/// Dimensionless oscillator coupling g_n = 2m·g/ħ² for a branch:
/// ground 4, symmetric 4(n−½)²π², antisymmetric 4n²π², general n²π².
pub fn ho_gn(branch: EnergyBranch) -> Result<f64> {
    let n = branch.validate()?.n() as f64;
    Ok(match branch {
        EnergyBranch::Ground => 4.0,
        EnergyBranch::Symmetric(_) => 4.0 * (n - 0.5).powi(2) * PI * PI,
        EnergyBranch::Antisymmetric(_) => 4.0 * n * n * PI * PI,
        EnergyBranch::General(_) => n * n * PI * PI,
    })
}

/// The spin-orbit formula carries 4g_n under the root, so its coupling is a
/// quarter of [`ho_gn`].
pub fn hoso_gn(branch: EnergyBranch) -> Result<f64> {
    Ok(ho_gn(branch)? / 4.0)
}

fn check_oscillator(omega: f64, g_n: f64) -> Result<()> {
    if !(omega > 0.0 && omega.is_finite()) {
        return Err(Error::domain(format!("omega must be finite and positive, got {omega}")));
    }
    if !(g_n > 0.0 && g_n.is_finite()) {
        return Err(Error::domain(format!("g_n must be finite and positive, got {g_n}")));
    }
    Ok(())
}

/// Both roots of the oscillator quantization,
/// ½ħω[√(ℓ(ℓ+1)) ± √(ℓ(ℓ+1) + g_n)].
pub fn ho_energy_roots(omega: f64, l: u32, g_n: f64, units: &UnitSystem) -> Result<(f64, f64)> {
    check_oscillator(omega, g_n)?;
    let l2 = casimir(l);
    let half = 0.5 * units.hbar * omega;
    let root = (l2 + g_n).sqrt();
    Ok((half * (l2.sqrt() + root), half * (l2.sqrt() - root)))
}

/// The plus root of [`ho_energy_roots`].
pub fn ho_energies(omega: f64, l: u32, g_n: f64, units: &UnitSystem) -> Result<f64> {
    Ok(ho_energy_roots(omega, l, g_n, units)?.0)
}

/// Dimensionless spin-orbit constant C_j = C/ħω.
pub fn spin_orbit_cj(
    omega: f64,
    l: u32,
    j: HalfInt,
    s: HalfInt,
    coupling: SpinOrbitCoupling,
    units: &UnitSystem,
) -> Result<f64> {
    Ok(spin_orbit_constant(omega, j, l, s, units, coupling)? / (units.hbar * omega))
}

/// Both roots of ½ħω[√(ℓ(ℓ+1)) − C_j ± √((√(ℓ(ℓ+1)) − C_j)² + 4g_n)].
pub fn ho_spin_orbit_energy_roots(
    omega: f64,
    l: u32,
    j: HalfInt,
    s: HalfInt,
    coupling: SpinOrbitCoupling,
    g_n: f64,
    units: &UnitSystem,
) -> Result<(f64, f64)> {
    check_oscillator(omega, g_n)?;
    let cj = spin_orbit_cj(omega, l, j, s, coupling, units)?;
    let p = casimir(l).sqrt() - cj;
    let root = (p * p + 4.0 * g_n).sqrt();
    let half = 0.5 * units.hbar * omega;
    Ok((half * (p + root), half * (p - root)))
}

/// The plus root of [`ho_spin_orbit_energy_roots`].
pub fn ho_spin_orbit_energies(
    omega: f64,
    l: u32,
    j: HalfInt,
    s: HalfInt,
    coupling: SpinOrbitCoupling,
    g_n: f64,
    units: &UnitSystem,
) -> Result<f64> {
    Ok(ho_spin_orbit_energy_roots(omega, l, j, s, coupling, g_n, units)?.0)
}
