//! Generic solver for E = ±g/d(E)² on an arbitrary effective potential.

use serde::{Deserialize, Serialize};

use super::{EnergyBranch, EnergyLevel, RootSign};
use crate::error::{Error, Result};
use crate::potentials::{EffectivePotential, PotentialSpec, UnitSystem};
use crate::turning_points::{energy_ceiling, energy_floor, solve_turning_points, turning_points};

/// How d(E) is obtained inside the solver.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TpMethod {
    /// Closed form or quartic where available.
    #[default]
    Auto,
    /// Always the generic root search.
    Numeric,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolveOptions {
    /// Solve E = −g/d² (bound states below a zero ceiling, e.g. hydrogen).
    pub signed: bool,
    pub tp_method: TpMethod,
    /// Bracket width, relative to |E|, at which the level counts as converged.
    pub rel_tol: f64,
    pub max_iter: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            signed: false,
            tp_method: TpMethod::Auto,
            rel_tol: 1e-12,
            max_iter: 200,
        }
    }
}

impl SolveOptions {
    pub fn signed() -> Self {
        SolveOptions {
            signed: true,
            ..Self::default()
        }
    }
}

/// Trial energies spanning the range where bound solutions can live, in
/// ascending order.
fn trial_energies(floor: f64, ceiling: f64, scale: f64) -> Vec<f64> {
    let mut out = Vec::new();
    match (floor.is_finite(), ceiling.is_finite()) {
        (true, true) if ceiling > floor => {
            let w = ceiling - floor;
            for k in 1..=60 {
                let t = 0.5f64.powi(k);
                out.push(floor + w * t);
                out.push(ceiling - w * t);
            }
        }
        (true, false) => {
            for k in -60..=60 {
                out.push(floor + scale * 2f64.powi(k));
            }
        }
        (false, true) => {
            for k in -60..=60 {
                out.push(ceiling - scale * 2f64.powi(k));
            }
        }
        _ => {}
    }
    out.retain(|e| e.is_finite() && *e > floor && *e < ceiling);
    out.sort_by(f64::total_cmp);
    out.dedup();
    out
}

/// Solves h(E) = E ∓ g/d(E)² = 0 by bracketing followed by bisection.
///
/// Bisection continues past `rel_tol` down to adjacent floats (within
/// `max_iter`), so the returned level satisfies its quantization condition as
/// tightly as f64 allows.
pub fn self_consistent_energy(
    potential: &EffectivePotential,
    branch: EnergyBranch,
    opts: &SolveOptions,
) -> Result<EnergyLevel> {
    if !(opts.rel_tol > 0.0) {
        return Err(Error::domain(format!("rel_tol must be positive, got {}", opts.rel_tol)));
    }
    let g = branch.coupling(potential.units())?;
    let sign = if opts.signed { -1.0 } else { 1.0 };
    let width = |e: f64| -> Result<f64> {
        let tp = match opts.tp_method {
            TpMethod::Auto => turning_points(potential, e)?,
            TpMethod::Numeric => solve_turning_points(potential, e)?,
        };
        Ok(tp.d)
    };
    let h = |e: f64| -> Result<f64> {
        let d = width(e)?;
        Ok(e - sign * g / (d * d))
    };

    let floor = energy_floor(potential);
    let ceiling = energy_ceiling(potential);
    let trials = trial_energies(floor, ceiling, potential.characteristic_energy());
    let samples: Vec<(f64, f64)> = trials.iter().filter_map(|&e| h(e).ok().map(|v| (e, v))).collect();

    let mut iterations = 0;
    let finish = |value: f64, iterations: usize, converged: bool| -> Result<EnergyLevel> {
        Ok(EnergyLevel {
            branch,
            l: potential.l(),
            j: match potential.spec() {
                PotentialSpec::HOSpinOrbit { j, .. } => Some(*j),
                _ => None,
            },
            value,
            d_at_solution: width(value)?,
            root_sign: root_sign(potential),
            iterations,
            converged,
        })
    };

    if let Some(&(e, _)) = samples.iter().find(|(_, v)| *v == 0.0) {
        return finish(e, 0, true);
    }
    let (mut lo, mut hi, lo_negative) = samples
        .windows(2)
        .find(|w| (w[0].1 < 0.0) != (w[1].1 < 0.0))
        .map(|w| (w[0].0, w[1].0, w[0].1 < 0.0))
        .ok_or_else(|| {
            Error::NoBracket(format!(
                "E = {}g/d(E)² has no sign change for {} (l = {}, {branch}) between {floor} and {ceiling}",
                if opts.signed { "−" } else { "" },
                potential.spec().name(),
                potential.l()
            ))
        })?;

    let converged = |lo: f64, hi: f64| hi - lo <= opts.rel_tol * lo.abs().max(hi.abs());
    while iterations < opts.max_iter {
        let mid = lo + 0.5 * (hi - lo);
        if mid <= lo || mid >= hi {
            break;
        }
        iterations += 1;
        let v = h(mid)?;
        if v == 0.0 {
            return finish(mid, iterations, true);
        }
        if (v < 0.0) == lo_negative {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let (hlo, hhi) = (h(lo)?, h(hi)?);
    let best = if hlo.abs() <= hhi.abs() { lo } else { hi };
    if !converged(lo, hi) {
        return Err(Error::NotConverged { iterations, last: best });
    }
    finish(best, iterations, true)
}

fn root_sign(potential: &EffectivePotential) -> RootSign {
    match potential.spec() {
        PotentialSpec::InfiniteSphericalWell { .. }
        | PotentialSpec::IsotropicHO { .. }
        | PotentialSpec::HOSpinOrbit { .. } => RootSign::Plus,
        _ => RootSign::NotApplicable,
    }
}

/// Self-consistent level of U = ar² + br + c + ħ²ℓ(ℓ+1)/2mr².
pub fn parabolic_energies(
    a: f64,
    b: f64,
    c: f64,
    l: u32,
    branch: EnergyBranch,
    units: &UnitSystem,
    opts: &SolveOptions,
) -> Result<EnergyLevel> {
    let potential = EffectivePotential::new(PotentialSpec::Parabolic { a, b, c }, l, units.clone())?;
    self_consistent_energy(&potential, branch, opts)
}
