use serde::{Deserialize, Serialize};

use super::{free_particle_radial, FreeParticleWave, RadialWaveFunction};
use crate::error::{Error, Result};

/// One point of R(r). Real wavefunctions have `im = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WaveSample {
    pub r: f64,
    pub re: f64,
    pub im: f64,
    /// Set for free-particle points below the inner turning point, where the
    /// piecewise formula is still evaluated although that region is treated
    /// as forbidden.
    pub below_r1: bool,
}

/// Anything that can be sampled as R(r).
pub trait Sampled {
    fn sample_at(&self, r: f64) -> Result<WaveSample>;
}

impl Sampled for RadialWaveFunction {
    fn sample_at(&self, r: f64) -> Result<WaveSample> {
        Ok(WaveSample {
            r,
            re: self.eval_radial(r)?,
            im: 0.0,
            below_r1: false,
        })
    }
}

impl Sampled for FreeParticleWave {
    fn sample_at(&self, r: f64) -> Result<WaveSample> {
        let v = free_particle_radial(self, r)?;
        Ok(WaveSample {
            r,
            re: v.re,
            im: v.im,
            below_r1: r < self.inner_turning_point(),
        })
    }
}

/// Pointwise R(r) on a strictly increasing grid of positive radii.
pub fn sample_wavefunction<W: Sampled + ?Sized>(wf: &W, grid: &[f64]) -> Result<Vec<WaveSample>> {
    if let Some(&first) = grid.first() {
        if !(first > 0.0) {
            return Err(Error::domain(format!("grid radii must be positive, got {first}")));
        }
    }
    if let Some(w) = grid.windows(2).find(|w| !(w[1] > w[0])) {
        return Err(Error::domain(format!(
            "grid must be strictly increasing ({} then {})",
            w[0], w[1]
        )));
    }
    grid.iter().map(|&r| wf.sample_at(r)).collect()
}

/// `n` evenly spaced points from `lo` to `hi`, both included exactly.
pub fn uniform_grid(lo: f64, hi: f64, n: usize) -> Result<Vec<f64>> {
    if !(lo.is_finite() && hi.is_finite() && hi >= lo) {
        return Err(Error::domain(format!("invalid grid range [{lo}, {hi}]")));
    }
    Ok(match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => {
            let step = (hi - lo) / (n - 1) as f64;
            let mut g: Vec<f64> = (0..n).map(|i| lo + step * i as f64).collect();
            g[n - 1] = hi;
            g
        }
    })
}
