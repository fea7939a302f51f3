use std::cell::Cell;

use crate::error::{Error, Result};
use crate::potentials::EffectivePotential;
use crate::quadrature::adaptive_integral;

fn check_k(k: f64) -> Result<()> {
    if k > 0.0 && k.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "decay constant k must be finite and positive, got {k}"
        )))
    }
}

/// D(r) = √k·e^{−k|r − r₀|}, the normalized bound state of the delta model.
pub fn delta_model_wavefunction(k: f64, r0: f64, r: f64) -> Result<f64> {
    check_k(k)?;
    Ok(k.sqrt() * (-k * (r - r0).abs()).exp())
}

/// D′(r), one-sided at r₀ (`right` picks the r > r₀ branch).
pub fn delta_model_derivative(k: f64, r0: f64, r: f64, right: bool) -> Result<f64> {
    let d = delta_model_wavefunction(k, r0, r)?;
    let beyond = r > r0 || (r == r0 && right);
    Ok(if beyond { -k * d } else { k * d })
}

/// exp(−m₁∫_{r_ref}^{r} √(U − E) dx): decays toward larger r and equals 1 at
/// r_ref. Fails if E ≥ U anywhere on the path.
pub fn evanescent_eval(potential: &EffectivePotential, energy: f64, r: f64, r_ref: f64) -> Result<f64> {
    for x in [r, r_ref] {
        if !(x > 0.0 && x.is_finite()) {
            return Err(Error::domain(format!("radius must be finite and positive, got {x}")));
        }
    }
    let allowed = Cell::new(None);
    let gap = |x: f64| {
        let g = potential.value(x) - energy;
        if !(g > 0.0) && allowed.get().is_none() {
            allowed.set(Some(x));
        }
        g
    };
    for x in [r_ref, r] {
        if !(gap(x) > 0.0) {
            return Err(Error::ClassicallyAllowed { r: x });
        }
    }
    if r == r_ref {
        return Ok(1.0);
    }
    let res = adaptive_integral(|x| gap(x).max(0.0).sqrt(), r_ref, r, 1e-12)?;
    if let Some(x) = allowed.get() {
        return Err(Error::ClassicallyAllowed { r: x });
    }
    Ok((-potential.units().m1() * res.value).exp())
}
