use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Carrier {
    /// e^{iKr}
    ExpPlus,
    /// e^{−iKr}
    ExpMinus,
    Cos,
    Sin,
}

impl Carrier {
    pub const ALL: [Carrier; 4] = [Carrier::ExpPlus, Carrier::ExpMinus, Carrier::Cos, Carrier::Sin];

    pub fn eval(self, x: f64) -> Complex64 {
        match self {
            Carrier::ExpPlus => Complex64::from_polar(1.0, x),
            Carrier::ExpMinus => Complex64::from_polar(1.0, -x),
            Carrier::Cos => Complex64::new(x.cos(), 0.0),
            Carrier::Sin => Complex64::new(x.sin(), 0.0),
        }
    }
}

impl std::str::FromStr for Carrier {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "exp+" | "exp_plus" | "exp-plus" => Ok(Carrier::ExpPlus),
            "exp-" | "exp_minus" | "exp-minus" => Ok(Carrier::ExpMinus),
            "cos" => Ok(Carrier::Cos),
            "sin" => Ok(Carrier::Sin),
            other => Err(Error::Config(format!(
                "unknown carrier `{other}` (exp+, exp-, cos, sin)"
            ))),
        }
    }
}

/// Free particle with angular momentum: R(r) = A·f(Kr)/r·e^{−|Q(r)|},
/// Q(r) = √(ℓ(ℓ+1))·ln r, which grows as e^{+Q} below r = 1 and decays as
/// e^{−Q} above it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FreeParticleWave {
    pub l: u32,
    pub k: f64,
    pub carrier: Carrier,
    pub amplitude: f64,
}

impl FreeParticleWave {
    pub fn new(l: u32, k: f64, carrier: Carrier) -> Result<Self> {
        if !(k > 0.0 && k.is_finite()) {
            return Err(Error::domain(format!(
                "wave number must be finite and positive, got {k}"
            )));
        }
        Ok(FreeParticleWave {
            l,
            k,
            carrier,
            amplitude: 1.0,
        })
    }

    /// √(ℓ(ℓ+1))
    pub fn centrifugal_root(&self) -> f64 {
        let l = self.l as f64;
        (l * (l + 1.0)).sqrt()
    }

    /// Inner turning point √(ℓ(ℓ+1))/K, where E = ħ²K²/2m meets the
    /// centrifugal barrier.
    pub fn inner_turning_point(&self) -> f64 {
        self.centrifugal_root() / self.k
    }

    pub fn phase(&self, r: f64) -> f64 {
        if self.l == 0 {
            0.0
        } else {
            self.centrifugal_root() * r.ln()
        }
    }

    /// The free particle is a continuum state: its energy is not quantized
    /// and its amplitude is left undetermined, so there is no normalization
    /// to perform.
    pub fn normalize(&self) -> Result<Self> {
        Err(Error::NotNormalizable(format!(
            "free-particle state (l = {}, K = {}) belongs to the continuum; its amplitude is indefinite",
            self.l, self.k
        )))
    }
}

/// A·(f(Kr)/r)·e^{+Q} for r < 1, A·f(K)/1 at r = 1, A·(f(Kr)/r)·e^{−Q} for r > 1.
pub fn free_particle_radial(fp: &FreeParticleWave, r: f64) -> Result<Complex64> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::domain(format!("radius must be finite and positive, got {r}")));
    }
    let q = fp.phase(r);
    let envelope = if r < 1.0 {
        q.exp()
    } else if r > 1.0 {
        (-q).exp()
    } else {
        1.0
    };
    Ok(fp.carrier.eval(fp.k * r) * (fp.amplitude * envelope / r))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s_wave_has_no_envelope() {
        for c in Carrier::ALL {
            let fp = FreeParticleWave::new(0, 1.7, c).unwrap();
            for r in [0.1, 0.9, 1.0, 1.1, 7.0] {
                let v = free_particle_radial(&fp, r).unwrap();
                let expect = c.eval(1.7 * r) / r;
                assert!((v - expect).norm() <= 4.0 * f64::EPSILON * expect.norm());
            }
        }
    }

    #[test]
    fn p_wave_envelope_at_e() {
        let k = 0.8;
        let fp = FreeParticleWave::new(1, k, Carrier::Cos).unwrap();
        let e = std::f64::consts::E;
        let v = free_particle_radial(&fp, e).unwrap();
        let expect = (-(2f64.sqrt())).exp() * (k * e).cos() / e;
        assert!((v.re - expect).abs() < 1e-15);
        assert_eq!(v.im, 0.0);
        assert!(((-(2f64.sqrt())).exp() - 0.243117).abs() < 1e-6);
    }

    #[test]
    fn continuous_at_unit_radius() {
        for l in 0..=4 {
            for c in Carrier::ALL {
                let fp = FreeParticleWave::new(l, 2.3, c).unwrap();
                let at = free_particle_radial(&fp, 1.0).unwrap();
                let below = free_particle_radial(&fp, 1.0 - f64::EPSILON / 2.0).unwrap();
                let above = free_particle_radial(&fp, 1.0 + f64::EPSILON).unwrap();
                assert!(
                    (below - at).norm() <= 8.0 * f64::EPSILON * at.norm().max(1.0),
                    "l={l} {c:?}"
                );
                assert!(
                    (above - at).norm() <= 8.0 * f64::EPSILON * at.norm().max(1.0),
                    "l={l} {c:?}"
                );
            }
        }
    }

    #[test]
    fn not_normalizable() {
        let fp = FreeParticleWave::new(1, 1.0, Carrier::Cos).unwrap();
        assert!(matches!(fp.normalize(), Err(Error::NotNormalizable(_))));
        assert!(free_particle_radial(&fp, 0.0).is_err());
        assert!(FreeParticleWave::new(1, 0.0, Carrier::Sin).is_err());
    }

    #[test]
    fn inner_turning_point() {
        let fp = FreeParticleWave::new(2, 3.0, Carrier::Sin).unwrap();
        assert!((fp.inner_turning_point() - 6f64.sqrt() / 3.0).abs() < 1e-15);
    }
}
