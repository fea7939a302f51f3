//! Central potentials and the effective potential U(r) = V(r) + ħ²ℓ(ℓ+1)/(2mr²).
//!
//! Hard walls are represented by `f64::INFINITY`, which orders above every
//! finite energy, so no finite energy can produce a turning point inside a wall.

mod spin;
mod units;

use serde::{Deserialize, Serialize};

pub use spin::{coupling_bracket, spin_orbit_constant, HalfInt, SpinOrbitCoupling};
pub use units::{UnitSystem, COULOMB_COUPLING_EV_NM, ELECTRON_REST_ENERGY_EV, HBAR_C_EV_NM};

use crate::error::{Error, Result};

/// The catalog of central potentials.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PotentialSpec {
    /// V = −Ze²/r
    HydrogenLike {
        z: u32,
        e_charge: f64,
    },
    /// V = 0 on (0, L), +∞ outside.
    InfiniteSphericalWell {
        radius: f64,
    },
    /// V = ½mω²r²
    IsotropicHO {
        omega: f64,
    },
    /// V = ½mω²r² − C_ℓsj
    HOSpinOrbit {
        omega: f64,
        j: HalfInt,
        s: HalfInt,
        coupling: SpinOrbitCoupling,
    },
    /// V = ar² + br + c
    Parabolic {
        a: f64,
        b: f64,
        c: f64,
    },
    FreeParticle,
}

impl PotentialSpec {
    pub fn name(&self) -> &'static str {
        match self {
            PotentialSpec::HydrogenLike { .. } => "hydrogen",
            PotentialSpec::InfiniteSphericalWell { .. } => "well",
            PotentialSpec::IsotropicHO { .. } => "ho",
            PotentialSpec::HOSpinOrbit { .. } => "hoso",
            PotentialSpec::Parabolic { .. } => "parabolic",
            PotentialSpec::FreeParticle => "free",
        }
    }

    fn validate(&self) -> Result<()> {
        let positive = |name: &str, v: f64| {
            if v.is_finite() && v > 0.0 {
                Ok(())
            } else {
                Err(Error::domain(format!(
                    "{} parameter {name} must be finite and positive, got {v}",
                    self.name()
                )))
            }
        };
        match *self {
            PotentialSpec::HydrogenLike { z, e_charge } => {
                if z == 0 {
                    return Err(Error::domain("hydrogen-like Z must be at least 1"));
                }
                positive("e", e_charge)
            }
            PotentialSpec::InfiniteSphericalWell { radius } => positive("L", radius),
            PotentialSpec::IsotropicHO { omega } | PotentialSpec::HOSpinOrbit { omega, .. } => positive("omega", omega),
            PotentialSpec::Parabolic { a, b, c } => {
                positive("a", a)?;
                positive("b", b)?;
                positive("c", c)
            }
            PotentialSpec::FreeParticle => Ok(()),
        }
    }
}

/// V(r) for a bare central potential. The spin-orbit variant needs ℓ to fix
/// its constant shift, so it is evaluated through [`EffectivePotential`].
pub fn eval_potential(spec: &PotentialSpec, r: f64, units: &UnitSystem) -> Result<f64> {
    check_radius(r)?;
    let v = match *spec {
        PotentialSpec::HydrogenLike { z, e_charge } => -(z as f64) * e_charge * e_charge / r,
        PotentialSpec::InfiniteSphericalWell { radius } => {
            if r < radius {
                0.0
            } else {
                f64::INFINITY
            }
        }
        PotentialSpec::IsotropicHO { omega } => 0.5 * units.mass * omega * omega * r * r,
        PotentialSpec::HOSpinOrbit { .. } => {
            return Err(Error::domain(
                "the spin-orbit oscillator depends on l; evaluate it through EffectivePotential",
            ))
        }
        PotentialSpec::Parabolic { a, b, c } => a * r * r + b * r + c,
        PotentialSpec::FreeParticle => 0.0,
    };
    Ok(v)
}

fn check_radius(r: f64) -> Result<()> {
    if r > 0.0 && !r.is_nan() {
        Ok(())
    } else {
        Err(Error::domain(format!("radius must be positive, got {r}")))
    }
}

/// A central potential together with the angular momentum ℓ and units.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EffectivePotential {
    spec: PotentialSpec,
    l: u32,
    units: UnitSystem,
    centrifugal_coeff: f64,
    /// C_ℓsj for the spin-orbit oscillator, zero otherwise.
    shift: f64,
}

impl EffectivePotential {
    pub fn new(spec: PotentialSpec, l: u32, units: UnitSystem) -> Result<Self> {
        spec.validate()?;
        let shift = match spec {
            PotentialSpec::HOSpinOrbit { omega, j, s, coupling } => {
                spin_orbit_constant(omega, j, l, s, &units, coupling)?
            }
            _ => 0.0,
        };
        let l_f = l as f64;
        let centrifugal_coeff = units.hbar * units.hbar * l_f * (l_f + 1.0) / (2.0 * units.mass);
        Ok(EffectivePotential {
            spec,
            l,
            units,
            centrifugal_coeff,
            shift,
        })
    }

    pub fn spec(&self) -> &PotentialSpec {
        &self.spec
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn units(&self) -> &UnitSystem {
        &self.units
    }

    /// ħ²ℓ(ℓ+1)/2m
    pub fn centrifugal_coeff(&self) -> f64 {
        self.centrifugal_coeff
    }

    /// C_ℓsj (zero unless spin-orbit coupled).
    pub fn spin_orbit_shift(&self) -> f64 {
        self.shift
    }

    /// Position of the hard wall, if any.
    pub fn wall(&self) -> Option<f64> {
        match self.spec {
            PotentialSpec::InfiniteSphericalWell { radius } => Some(radius),
            _ => None,
        }
    }

    /// V(r) including the spin-orbit shift.
    pub fn potential(&self, r: f64) -> Result<f64> {
        match self.spec {
            PotentialSpec::HOSpinOrbit { omega, .. } => {
                check_radius(r)?;
                Ok(0.5 * self.units.mass * omega * omega * r * r - self.shift)
            }
            ref spec => eval_potential(spec, r, &self.units),
        }
    }

    pub fn eval(&self, r: f64) -> Result<f64> {
        Ok(self.potential(r)? + self.centrifugal_coeff / (r * r))
    }

    /// U(r) without the radius check, for hot loops that already know r > 0.
    pub(crate) fn value(&self, r: f64) -> f64 {
        let centrifugal = self.centrifugal_coeff / (r * r);
        let v = match self.spec {
            PotentialSpec::HydrogenLike { z, e_charge } => -(z as f64) * e_charge * e_charge / r,
            PotentialSpec::InfiniteSphericalWell { radius } => {
                if r < radius {
                    0.0
                } else {
                    return f64::INFINITY;
                }
            }
            PotentialSpec::IsotropicHO { omega } => 0.5 * self.units.mass * omega * omega * r * r,
            PotentialSpec::HOSpinOrbit { omega, .. } => 0.5 * self.units.mass * omega * omega * r * r - self.shift,
            PotentialSpec::Parabolic { a, b, c } => a * r * r + b * r + c,
            PotentialSpec::FreeParticle => 0.0,
        };
        v + centrifugal
    }

    /// dU/dr (inside the wall for the spherical well).
    pub fn derivative(&self, r: f64) -> f64 {
        let centrifugal = -2.0 * self.centrifugal_coeff / (r * r * r);
        let dv = match self.spec {
            PotentialSpec::HydrogenLike { z, e_charge } => (z as f64) * e_charge * e_charge / (r * r),
            PotentialSpec::InfiniteSphericalWell { .. } | PotentialSpec::FreeParticle => 0.0,
            PotentialSpec::IsotropicHO { omega } | PotentialSpec::HOSpinOrbit { omega, .. } => {
                self.units.mass * omega * omega * r
            }
            PotentialSpec::Parabolic { a, b, .. } => 2.0 * a * r + b,
        };
        dv + centrifugal
    }

    /// lim U(r) as r → 0⁺.
    pub fn inner_limit(&self) -> f64 {
        if self.l > 0 {
            return f64::INFINITY;
        }
        match self.spec {
            PotentialSpec::HydrogenLike { .. } => f64::NEG_INFINITY,
            PotentialSpec::InfiniteSphericalWell { .. }
            | PotentialSpec::IsotropicHO { .. }
            | PotentialSpec::FreeParticle => 0.0,
            PotentialSpec::HOSpinOrbit { .. } => -self.shift,
            PotentialSpec::Parabolic { c, .. } => c,
        }
    }

    /// lim U(r) as r → ∞ (walls count as +∞).
    pub fn outer_limit(&self) -> f64 {
        match self.spec {
            PotentialSpec::HydrogenLike { .. } | PotentialSpec::FreeParticle => 0.0,
            _ => f64::INFINITY,
        }
    }

    /// Natural length of the problem, used to seed searches and grids.
    pub fn characteristic_length(&self) -> f64 {
        let u = &self.units;
        match self.spec {
            PotentialSpec::HydrogenLike { z, e_charge } => u.hbar * u.hbar / (u.mass * z as f64 * e_charge * e_charge),
            PotentialSpec::InfiniteSphericalWell { radius } => radius,
            PotentialSpec::IsotropicHO { omega } | PotentialSpec::HOSpinOrbit { omega, .. } => {
                (u.hbar / (u.mass * omega)).sqrt()
            }
            PotentialSpec::Parabolic { a, .. } => (u.hbar * u.hbar / (u.mass * a)).powf(0.25),
            PotentialSpec::FreeParticle => 1.0,
        }
    }

    /// ħ²/(mλ²) for the characteristic length λ.
    pub fn characteristic_energy(&self) -> f64 {
        let len = self.characteristic_length();
        self.units.hbar * self.units.hbar / (self.units.mass * len * len)
    }
}

/// Location and value of the minimum of U.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Minimum {
    /// 0 when the infimum is approached at the origin.
    pub r_min: f64,
    pub u_min: f64,
}

/// Global minimum of U on (0, ∞), or on (0, L] inside a wall.
pub fn effective_minimum(potential: &EffectivePotential) -> Result<Minimum> {
    let b = potential.centrifugal_coeff;
    let l = potential.l;
    let u = &potential.units;
    let no_min = |why: &str| {
        Err(Error::NoInteriorMinimum(format!(
            "{} with l = {l}: {why}",
            potential.spec.name()
        )))
    };
    match potential.spec {
        PotentialSpec::HydrogenLike { z, e_charge } => {
            if l == 0 {
                return no_min("U decreases without bound toward the origin");
            }
            let a = z as f64 * e_charge * e_charge;
            Ok(Minimum {
                r_min: 2.0 * b / a,
                u_min: -a * a / (4.0 * b),
            })
        }
        PotentialSpec::InfiniteSphericalWell { radius } => {
            if l == 0 {
                return no_min("U is flat inside the well");
            }
            Ok(Minimum {
                r_min: radius,
                u_min: b / (radius * radius),
            })
        }
        PotentialSpec::IsotropicHO { omega } | PotentialSpec::HOSpinOrbit { omega, .. } => {
            let a = 0.5 * u.mass * omega * omega;
            if l == 0 {
                return Ok(Minimum {
                    r_min: 0.0,
                    u_min: -potential.shift,
                });
            }
            Ok(Minimum {
                r_min: (b / a).powf(0.25),
                u_min: 2.0 * (a * b).sqrt() - potential.shift,
            })
        }
        PotentialSpec::Parabolic { c, .. } => {
            if l == 0 {
                return Ok(Minimum { r_min: 0.0, u_min: c });
            }
            let r_min = stationary_point(potential)?;
            Ok(Minimum {
                r_min,
                u_min: potential.value(r_min),
            })
        }
        PotentialSpec::FreeParticle => no_min("U is monotone"),
    }
}

/// Zero of U′ by bisection for potentials with U → +∞ at both ends.
fn stationary_point(potential: &EffectivePotential) -> Result<f64> {
    let scale = potential.characteristic_length();
    let mut lo = scale;
    while potential.derivative(lo) >= 0.0 {
        lo *= 0.5;
        if lo < f64::MIN_POSITIVE {
            return Err(Error::NoInteriorMinimum("U′ never negative".into()));
        }
    }
    let mut hi = scale;
    while potential.derivative(hi) <= 0.0 {
        hi *= 2.0;
        if !hi.is_finite() {
            return Err(Error::NoInteriorMinimum("U′ never positive".into()));
        }
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if potential.derivative(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= 1e-15 * hi {
            break;
        }
    }
    Ok(0.5 * (lo + hi))
}
