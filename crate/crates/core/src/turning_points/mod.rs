//! Classical turning points: the roots r₁ < r₂ of E = U(r) around the well.

mod quartic;

use serde::{Deserialize, Serialize};

pub use quartic::quartic_positive_roots;

use crate::error::{Error, Result};
use crate::potentials::{effective_minimum, EffectivePotential, PotentialSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ClosedForm,
    Numeric,
}

/// Turning points at a given energy. `r1` is exactly 0 when the allowed
/// region reaches the origin (ℓ = 0 wells).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TurningPoints {
    pub r1: f64,
    pub r2: f64,
    pub r0: f64,
    pub d: f64,
    pub energy: f64,
    pub method: Method,
}

impl TurningPoints {
    /// An explicit interval [r1, r2] at the given energy, for integrating over
    /// ranges that do not come from a root search.
    pub fn from_interval(r1: f64, r2: f64, energy: f64) -> Result<Self> {
        if !(r1 >= 0.0) {
            return Err(Error::domain(format!(
                "inner turning point must be non-negative, got {r1}"
            )));
        }
        Self::new(r1, r2, energy, f64::NAN, Method::Numeric)
    }

    fn new(r1: f64, r2: f64, energy: f64, u_min: f64, method: Method) -> Result<Self> {
        let d = r2 - r1;
        if !(d > 0.0) || !d.is_finite() {
            return Err(Error::NoAllowedRegion { energy, u_min });
        }
        Ok(TurningPoints {
            r1,
            r2,
            r0: 0.5 * (r1 + r2),
            d,
            energy,
            method,
        })
    }
}

/// Lowest energy with a classically allowed region: the minimum of U, or the
/// limit at the origin when U has no interior minimum (ℓ = 0).
pub fn energy_floor(potential: &EffectivePotential) -> f64 {
    match effective_minimum(potential) {
        Ok(m) => m.u_min,
        Err(_) => potential.inner_limit().min(potential.outer_limit()),
    }
}

/// Supremum of bound-state energies: the limit of U at infinity.
pub fn energy_ceiling(potential: &EffectivePotential) -> f64 {
    potential.outer_limit()
}

fn at_or_below(energy: f64, floor: f64) -> bool {
    if floor == f64::NEG_INFINITY {
        return false;
    }
    energy <= floor || (energy - floor) <= 8.0 * f64::EPSILON * energy.abs().max(floor.abs())
}

/// Turning points by the cheapest exact route available for the potential:
/// closed form, the quartic for the parabolic well, the generic search otherwise.
pub fn turning_points(potential: &EffectivePotential, energy: f64) -> Result<TurningPoints> {
    match potential.spec() {
        PotentialSpec::Parabolic { .. } => parabolic_turning_points(potential, energy),
        PotentialSpec::FreeParticle => solve_turning_points(potential, energy),
        _ => closed_form_turning_points(potential, energy),
    }
}

/// Algebraic roots for the hydrogen-like, square-well and oscillator families.
pub fn closed_form_turning_points(potential: &EffectivePotential, energy: f64) -> Result<TurningPoints> {
    let b = potential.centrifugal_coeff();
    let units = potential.units();
    let floor = energy_floor(potential);
    let closed = Method::ClosedForm;
    match *potential.spec() {
        PotentialSpec::HydrogenLike { z, e_charge } => {
            let a = z as f64 * e_charge * e_charge;
            if energy >= 0.0 {
                return Err(Error::Unbound { energy });
            }
            let abs_e = -energy;
            if b == 0.0 {
                return TurningPoints::new(0.0, a / abs_e, energy, floor, closed);
            }
            if (energy - floor).abs() <= 8.0 * f64::EPSILON * floor.abs() {
                return Err(Error::NoAllowedRegion { energy, u_min: floor });
            }
            let disc = a * a - 4.0 * b * abs_e;
            if disc < 0.0 {
                return Err(Error::BelowCentrifugalBarrier {
                    energy,
                    discriminant: disc,
                });
            }
            let sq = disc.sqrt();
            let r1 = 2.0 * b / (a + sq);
            let r2 = (a + sq) / (2.0 * abs_e);
            TurningPoints::new(r1, r2, energy, floor, closed)
        }
        PotentialSpec::InfiniteSphericalWell { radius } => {
            if at_or_below(energy, floor) {
                return Err(Error::NoAllowedRegion { energy, u_min: floor });
            }
            let r1 = if b == 0.0 { 0.0 } else { (b / energy).sqrt() };
            TurningPoints::new(r1, radius, energy, floor, closed)
        }
        PotentialSpec::IsotropicHO { omega } | PotentialSpec::HOSpinOrbit { omega, .. } => {
            let a = 0.5 * units.mass * omega * omega;
            let shifted = energy + potential.spin_orbit_shift();
            if b == 0.0 {
                if at_or_below(shifted, 0.0) {
                    return Err(Error::NoAllowedRegion { energy, u_min: floor });
                }
                return TurningPoints::new(0.0, (shifted / a).sqrt(), energy, floor, closed);
            }
            let barrier = 2.0 * (a * b).sqrt();
            if (shifted - barrier).abs() <= 8.0 * f64::EPSILON * (shifted.abs() + barrier) || shifted < -barrier {
                return Err(Error::NoAllowedRegion { energy, u_min: floor });
            }
            let disc = shifted * shifted - 4.0 * a * b;
            if disc < 0.0 {
                return Err(Error::BelowCentrifugalBarrier {
                    energy,
                    discriminant: disc,
                });
            }
            let sq = disc.sqrt();
            let r2_sq = (shifted + sq) / (2.0 * a);
            let r1_sq = 2.0 * b / (shifted + sq);
            TurningPoints::new(r1_sq.sqrt(), r2_sq.sqrt(), energy, floor, closed)
        }
        _ => Err(Error::domain(format!(
            "no closed-form turning points for the {} potential",
            potential.spec().name()
        ))),
    }
}

/// Roots of ar⁴ + br³ + (c − E)r² + δ = 0 for the parabolic well; the pair
/// immediately bracketing the minimum of U is selected.
pub fn parabolic_turning_points(potential: &EffectivePotential, energy: f64) -> Result<TurningPoints> {
    let PotentialSpec::Parabolic { a, b, c } = *potential.spec() else {
        return Err(Error::domain(
            "quartic turning points apply to the parabolic potential only",
        ));
    };
    let delta = potential.centrifugal_coeff();
    let min = effective_minimum(potential)?;
    if at_or_below(energy, min.u_min) {
        return Err(Error::NoAllowedRegion {
            energy,
            u_min: min.u_min,
        });
    }
    let roots = quartic_positive_roots(a, b, c - energy, delta);
    let outer = roots.iter().copied().find(|&r| r > min.r_min);
    let inner = if delta == 0.0 {
        Some(0.0)
    } else {
        roots.iter().copied().rev().find(|&r| r < min.r_min)
    };
    match (inner, outer) {
        (Some(r1), Some(r2)) => TurningPoints::new(r1, r2, energy, min.u_min, Method::Numeric),
        _ => Err(Error::NoAllowedRegion {
            energy,
            u_min: min.u_min,
        }),
    }
}

const SAMPLES_PER_DECADE: usize = 48;

/// Generic root search: geometric sampling of U − E on each flank of the
/// minimum, then bisection to |Δr| ≤ 1e-13·r.
pub fn solve_turning_points(potential: &EffectivePotential, energy: f64) -> Result<TurningPoints> {
    let floor = energy_floor(potential);
    if at_or_below(energy, floor) {
        return Err(Error::NoAllowedRegion { energy, u_min: floor });
    }
    if energy >= energy_ceiling(potential) && potential.wall().is_none() {
        return Err(Error::Unbound { energy });
    }
    let centre = match effective_minimum(potential) {
        Ok(m) if m.r_min > 0.0 => Some(m.r_min),
        _ => None,
    };
    let f = |r: f64| potential.value(r) - energy;
    let inner_open = potential.inner_limit() < energy;
    let scale = centre.unwrap_or_else(|| potential.characteristic_length());
    let (r1, r2) = generic_roots(&f, energy, scale, inner_open, potential.wall())?;
    TurningPoints::new(r1, r2, energy, floor, Method::Numeric)
}

/// Roots of `f` (= U − E) around a well centred near `centre`. With
/// `inner_open` the allowed region reaches the origin and r₁ = 0; a wall
/// supplies r₂ directly.
fn generic_roots(
    f: &impl Fn(f64) -> f64,
    energy: f64,
    centre: f64,
    inner_open: bool,
    wall: Option<f64>,
) -> Result<(f64, f64)> {
    let mut roots = Vec::new();

    // U is +∞ at the wall itself, so stop just inside it.
    let inner_stop = wall.map_or(centre, |w| w.min(centre) * (1.0 - 4.0 * f64::EPSILON));
    if !inner_open {
        // Walk inward until U exceeds E, then scan the flank.
        let mut lo = inner_stop * 1e-6;
        while f(lo) <= 0.0 {
            lo *= 1e-3;
            if lo < 1e-300 {
                return Err(Error::NoBracket("U stays below E toward the origin".into()));
            }
        }
        roots.extend(scan_flank(f, lo, inner_stop));
    }

    let r2 = if let Some(w) = wall {
        if !inner_open && roots.is_empty() {
            return Err(Error::NoBracket("no inner turning point inside the wall".into()));
        }
        let start = roots.last().copied().unwrap_or(0.0);
        // Any sign change between the inner root and the wall is an extra root.
        if start > 0.0 {
            let extra = scan_flank(f, start * (1.0 + 1e-9), w * (1.0 - 1e-12));
            roots.extend(extra);
        }
        if roots.len() > 1 {
            return Err(Error::AmbiguousRoots { energy, roots });
        }
        w
    } else {
        let start = if inner_open { centre * 1e-6 } else { inner_stop };
        let mut hi = start.max(centre) * 2.0;
        let mut doublings = 0;
        while f(hi) <= 0.0 {
            hi *= 2.0;
            doublings += 1;
            if doublings > 200 || !hi.is_finite() {
                return Err(Error::Unbound { energy });
            }
        }
        // Scan past the first point above E so that extra wells are noticed.
        let outer = scan_flank(f, start, 8.0 * hi);
        roots.extend(outer);
        let expected = if inner_open { 1 } else { 2 };
        if roots.len() != expected {
            if roots.len() > expected {
                return Err(Error::AmbiguousRoots { energy, roots });
            }
            return Err(Error::NoBracket(format!(
                "found {} turning points, expected {expected}",
                roots.len()
            )));
        }
        *roots.last().unwrap()
    };

    let r1 = if inner_open { 0.0 } else { roots[0] };
    if !inner_open && roots.len() > 1 && wall.is_some() {
        return Err(Error::AmbiguousRoots { energy, roots });
    }
    Ok((r1, r2))
}

/// All sign changes of `f` on [lo, hi], sampled geometrically and refined by bisection.
fn scan_flank(f: &impl Fn(f64) -> f64, lo: f64, hi: f64) -> Vec<f64> {
    if !(hi > lo) || lo <= 0.0 {
        return Vec::new();
    }
    let decades = (hi / lo).log10().max(1.0);
    let n = (decades * SAMPLES_PER_DECADE as f64).ceil() as usize;
    let ratio = (hi / lo).powf(1.0 / n as f64);
    let mut roots = Vec::new();
    let mut a = lo;
    let mut fa = f(a);
    for k in 1..=n {
        let b = if k == n { hi } else { lo * ratio.powi(k as i32) };
        let fb = f(b);
        if fa == 0.0 {
            roots.push(a);
        } else if fa.signum() != fb.signum() && fb != 0.0 {
            roots.push(bisect(f, a, b, fa));
        }
        a = b;
        fa = fb;
    }
    roots
}

fn bisect(f: &impl Fn(f64) -> f64, mut a: f64, mut b: f64, fa: f64) -> f64 {
    let sa = fa.signum();
    while (b - a) > 1e-13 * b.abs() {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let fm = f(m);
        if fm == 0.0 {
            return m;
        }
        if fm.signum() == sa {
            a = m;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}
