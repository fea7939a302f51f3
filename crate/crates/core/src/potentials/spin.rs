use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::UnitSystem;
use crate::error::{Error, Result};

/// Non-negative half-integer stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct HalfInt(u32);

impl HalfInt {
    pub const HALF: HalfInt = HalfInt(1);

    pub fn from_twice(twice: u32) -> Self {
        HalfInt(twice)
    }

    pub fn from_int(n: u32) -> Self {
        HalfInt(2 * n)
    }

    pub fn twice(self) -> u32 {
        self.0
    }

    pub fn value(self) -> f64 {
        self.0 as f64 / 2.0
    }

    /// x(x+1)
    pub fn casimir(self) -> f64 {
        let v = self.value();
        v * (v + 1.0)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_multiple_of(2) {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl FromStr for HalfInt {
    type Err = Error;

    /// Accepts `5/2`, `2.5` or `3`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Config(format!("`{s}` is not a non-negative half-integer"));
        if let Some((num, den)) = s.split_once('/') {
            let num: u32 = num.trim().parse().map_err(|_| bad())?;
            return match den.trim() {
                "2" => Ok(HalfInt(num)),
                "1" => Ok(HalfInt(2 * num)),
                _ => Err(bad()),
            };
        }
        let v: f64 = s.parse().map_err(|_| bad())?;
        let twice = 2.0 * v;
        if !(v >= 0.0) || twice.fract() != 0.0 || twice > u32::MAX as f64 {
            return Err(bad());
        }
        Ok(HalfInt(twice as u32))
    }
}

/// j(j+1) − ℓ(ℓ+1) − s(s+1), after checking that j is reachable by coupling ℓ and s.
pub fn coupling_bracket(j: HalfInt, l: u32, s: HalfInt) -> Result<f64> {
    let two_l = 2 * l as i64;
    let (two_j, two_s) = (j.twice() as i64, s.twice() as i64);
    if two_j < (two_l - two_s).abs() || two_j > two_l + two_s || (two_j - two_l - two_s) % 2 != 0 {
        return Err(Error::domain(format!(
            "j = {j} cannot be formed from l = {l} and s = {s}"
        )));
    }
    Ok(j.casimir() - (l as f64) * (l as f64 + 1.0) - s.casimir())
}

/// How the spin-orbit strength is fixed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum SpinOrbitCoupling {
    /// Phenomenological strength C₀ (an energy, e.g. 0.015 ħω):
    /// C = (C₀/2ħω)[…]·ħω.
    Parameter { c0: f64 },
    /// C = (ħ²ω²/2mc²)[…].
    Relativistic,
    /// The same prefactor with m² in the denominator, as printed for the
    /// unreduced spin-orbit term: C = (ħ²ω²/2m²c²)[…].
    RelativisticMassSquared,
}

/// Constant shift C_ℓsj; the oscillator with spin-orbit coupling is ½mω²r² − C.
pub fn spin_orbit_constant(
    omega: f64,
    j: HalfInt,
    l: u32,
    s: HalfInt,
    units: &UnitSystem,
    coupling: SpinOrbitCoupling,
) -> Result<f64> {
    let bracket = coupling_bracket(j, l, s)?;
    let c = &units.light_speed;
    let prefactor = match coupling {
        SpinOrbitCoupling::Parameter { c0 } => {
            if !(c0 >= 0.0 && c0.is_finite()) {
                return Err(Error::domain(format!(
                    "c0 must be a finite non-negative energy, got {c0}"
                )));
            }
            c0 / 2.0
        }
        SpinOrbitCoupling::Relativistic => units.hbar.powi(2) * omega * omega / (2.0 * units.mass * c * c),
        SpinOrbitCoupling::RelativisticMassSquared => {
            units.hbar.powi(2) * omega * omega / (2.0 * units.mass.powi(2) * c * c)
        }
    };
    Ok(prefactor * bracket)
}
