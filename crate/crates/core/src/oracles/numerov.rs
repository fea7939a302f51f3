//! Shooting solution of −(ħ²/2m)F″ + U F = E F on a logarithmic grid.
//!
//! With r = eˣ and F = e^{x/2}·y the radial equation becomes
//! y″ = [¼ + r²(2m/ħ²)(U(r) − E)]·y, which is regular at the origin and is
//! integrated by Numerov's method. Sturm's theorem ties the number of sign
//! changes of y to the number of eigenvalues below E, so bisection on that
//! count isolates the level with a given number of nodes.

use serde::{Deserialize, Serialize};

use super::{OracleEnergy, OracleSource, QuantumNumbers};
use crate::error::{Error, Result};
use crate::potentials::{EffectivePotential, PotentialSpec};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NumerovOptions {
    /// Step in ln r.
    pub step: f64,
    /// Innermost radius as a fraction of the potential's natural length.
    pub inner_fraction: f64,
    /// Decay exponent ∫κ dr that the grid must cover beyond the outer
    /// turning point of the highest energy in the bracket.
    pub decay: f64,
    /// Bisection stops when the energy bracket is this narrow (relative).
    pub rel_tol: f64,
}

impl Default for NumerovOptions {
    fn default() -> Self {
        NumerovOptions {
            step: 1e-3,
            inner_fraction: 1e-6,
            decay: 30.0,
            rel_tol: 1e-12,
        }
    }
}

struct Grid {
    x0: f64,
    h: f64,
    points: usize,
}

fn build_grid(potential: &EffectivePotential, e_top: f64, opts: &NumerovOptions) -> Result<Grid> {
    let scale = potential.characteristic_length();
    let r_min = opts.inner_fraction * scale;
    let r_max = match potential.wall() {
        Some(wall) => wall,
        None => decay_radius(potential, e_top, r_min, opts.decay)?,
    };
    let (x0, x1) = (r_min.ln(), r_max.ln());
    if !(x1 > x0) {
        return Err(Error::domain(
            "Numerov grid is empty: outer radius lies inside the inner cutoff",
        ));
    }
    let intervals = ((x1 - x0) / opts.step).ceil().max(16.0) as usize;
    Ok(Grid {
        x0,
        h: (x1 - x0) / intervals as f64,
        points: intervals + 1,
    })
}

/// Radius beyond which every state below `energy` has decayed by e^{−decay}.
fn decay_radius(potential: &EffectivePotential, energy: f64, r_min: f64, decay: f64) -> Result<f64> {
    if energy >= potential.outer_limit() {
        return Err(Error::domain(format!(
            "bracket top {energy} is not below the continuum threshold {}",
            potential.outer_limit()
        )));
    }
    let m = potential.units().mass;
    let hb = potential.units().hbar;
    let ratio = 1.001;
    let mut r = r_min;
    let mut accumulated = 0.0;
    // Only decay outside an allowed region counts; the centrifugal barrier
    // near the origin is forbidden too.
    let mut seen_allowed = false;
    // Give up after 1e14 natural lengths.
    while r < 1e14 * potential.characteristic_length() {
        let next = r * ratio;
        let gap = potential.value(0.5 * (r + next)) - energy;
        if gap <= 0.0 {
            accumulated = 0.0;
            seen_allowed = true;
        } else if seen_allowed {
            accumulated += (2.0 * m * gap).sqrt() / hb * (next - r);
        }
        r = next;
        if accumulated >= decay {
            return Ok(r);
        }
    }
    if !seen_allowed {
        return Err(Error::NoBracket(format!(
            "energy {energy} lies below the effective potential everywhere"
        )));
    }
    Err(Error::domain(format!("no decaying region found below energy {energy}")))
}

/// Sign changes of y on the grid for trial energy `e`, the last point included.
fn count_nodes(potential: &EffectivePotential, grid: &Grid, e: f64) -> usize {
    let u = potential.units();
    let k2 = 2.0 * u.mass / (u.hbar * u.hbar);
    let nu = potential.l() as f64 + 0.5;
    let h2 = grid.h * grid.h / 12.0;
    // A hard wall is imposed as y = 0 at the last grid point, so the interior
    // potential is used right up to it.
    let r_cap = potential
        .wall()
        .map_or(f64::INFINITY, |w| w * (1.0 - 4.0 * f64::EPSILON));
    let g = |i: usize| {
        let x = grid.x0 + grid.h * i as f64;
        let r = x.exp().min(r_cap);
        0.25 + r * r * k2 * (potential.value(r) - e)
    };
    // Regular solution y ~ e^{(ℓ+½)x} near the origin.
    let mut y_prev = (nu * grid.x0).exp();
    let mut y = (nu * (grid.x0 + grid.h)).exp();
    let mut g_prev = g(0);
    let mut g_cur = g(1);
    let mut nodes = 0;
    for i in 2..grid.points {
        let g_next = g(i);
        let y_next = (2.0 * (1.0 + 5.0 * h2 * g_cur) * y - (1.0 - h2 * g_prev) * y_prev) / (1.0 - h2 * g_next);
        if (y_next < 0.0 && y > 0.0) || (y_next > 0.0 && y < 0.0) {
            nodes += 1;
        }
        y_prev = y;
        y = y_next;
        if y.abs() > 1e150 {
            y *= 1e-150;
            y_prev *= 1e-150;
        }
        g_prev = g_cur;
        g_cur = g_next;
    }
    nodes
}

/// The bound state of U with `node_target` interior nodes, searched for in
/// `bracket = (lo, hi)`.
pub fn numerov_bound_state(
    potential: &EffectivePotential,
    node_target: u32,
    bracket: (f64, f64),
    opts: &NumerovOptions,
) -> Result<OracleEnergy> {
    let (mut lo, mut hi) = bracket;
    if !(lo < hi && lo.is_finite() && hi.is_finite()) {
        return Err(Error::domain(format!("invalid energy bracket [{lo}, {hi}]")));
    }
    if !(opts.step > 0.0 && opts.inner_fraction > 0.0 && opts.decay > 0.0 && opts.rel_tol > 0.0) {
        return Err(Error::domain("Numerov options must be positive"));
    }
    let grid = build_grid(potential, hi, opts)?;
    let target = node_target as usize;
    let (n_lo, n_hi) = (count_nodes(potential, &grid, lo), count_nodes(potential, &grid, hi));
    if n_lo > target || n_hi <= target {
        return Err(Error::NoBracket(format!(
            "no level with {node_target} nodes in [{lo}, {hi}] (node counts {n_lo} and {n_hi})"
        )));
    }
    while hi - lo > opts.rel_tol * lo.abs().max(hi.abs()) {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if count_nodes(potential, &grid, mid) > target {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(OracleEnergy {
        source: OracleSource::Numerov,
        quantum_numbers: QuantumNumbers {
            n: node_target + 1,
            l: potential.l(),
            j: match potential.spec() {
                PotentialSpec::HOSpinOrbit { j, .. } => Some(*j),
                _ => None,
            },
        },
        value: 0.5 * (lo + hi),
    })
}
