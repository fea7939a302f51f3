//! The area S = ∫U dr between the turning points and the phase
//! Q(r) = m₁∫√U dr, in closed form where an antiderivative is known and by
//! adaptive quadrature otherwise.

mod adaptive;

use serde::{Deserialize, Serialize};

pub use crate::turning_points::Method;
pub use adaptive::{adaptive_integral, Integral, MAX_PANELS};

use crate::error::{Error, Result};
use crate::potentials::{EffectivePotential, PotentialSpec};
use crate::turning_points::TurningPoints;

/// Relative tolerance for numeric S and Q.
pub const DEFAULT_TOLERANCE: f64 = 1e-10;

/// Value of S or Q with the route that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhaseResult {
    pub value: f64,
    pub method: Method,
    pub lower_limit: f64,
    /// Zero for closed forms.
    pub estimated_error: f64,
}

impl PhaseResult {
    fn closed(value: f64, lower_limit: f64) -> Self {
        PhaseResult {
            value,
            method: Method::ClosedForm,
            lower_limit,
            estimated_error: 0.0,
        }
    }
}

/// S = ∫_{r1}^{r2} U dr from the antiderivative of each catalog potential.
pub fn area_s(potential: &EffectivePotential, tp: &TurningPoints) -> Result<PhaseResult> {
    let (r1, r2) = (tp.r1, tp.r2);
    check_interval(potential, r1, r2)?;
    let delta = potential.centrifugal_coeff();
    if r1 == 0.0 && delta > 0.0 {
        return Err(Error::Divergent("∫ħ²ℓ(ℓ+1)/(2mr²) dr diverges at r = 0".into()));
    }
    // −δ/r, dropped when δ = 0 so that r = 0 is allowed.
    let centrifugal = |r: f64| if delta == 0.0 { 0.0 } else { -delta / r };
    let poly: Box<dyn Fn(f64) -> f64> = match *potential.spec() {
        PotentialSpec::HydrogenLike { z, e_charge } => {
            if r1 == 0.0 {
                return Err(Error::Divergent("∫−Ze²/r dr diverges logarithmically at r = 0".into()));
            }
            let a = z as f64 * e_charge * e_charge;
            Box::new(move |r: f64| -a * r.ln())
        }
        PotentialSpec::InfiniteSphericalWell { .. } | PotentialSpec::FreeParticle => Box::new(|_| 0.0),
        PotentialSpec::IsotropicHO { omega } | PotentialSpec::HOSpinOrbit { omega, .. } => {
            let a = 0.5 * potential.units().mass * omega * omega;
            let c = potential.spin_orbit_shift();
            Box::new(move |r: f64| a * r.powi(3) / 3.0 - c * r)
        }
        PotentialSpec::Parabolic { a, b, c } => Box::new(move |r: f64| ((a * r / 3.0 + b / 2.0) * r + c) * r),
    };
    let f = |r: f64| poly(r) + centrifugal(r);
    Ok(PhaseResult::closed(f(r2) - f(r1), r1))
}

/// S by adaptive quadrature at relative tolerance `tol`.
pub fn area_s_numeric(potential: &EffectivePotential, tp: &TurningPoints, tol: f64) -> Result<PhaseResult> {
    check_interval(potential, tp.r1, tp.r2)?;
    let r = adaptive_integral(|x| potential.value(x), tp.r1, tp.r2, tol)?;
    Ok(PhaseResult {
        value: r.value,
        method: Method::Numeric,
        lower_limit: tp.r1,
        estimated_error: r.error,
    })
}

fn check_interval(potential: &EffectivePotential, lo: f64, hi: f64) -> Result<()> {
    if !(lo >= 0.0 && hi >= 0.0 && lo.is_finite() && hi.is_finite()) {
        return Err(Error::domain(format!(
            "integration range [{lo}, {hi}] must be finite and non-negative"
        )));
    }
    if let Some(wall) = potential.wall() {
        if lo.max(hi) > wall {
            return Err(Error::domain(format!(
                "range [{lo}, {hi}] extends past the wall at r = {wall}"
            )));
        }
    }
    Ok(())
}

/// Open intervals of r where U < 0, in ascending order.
pub fn negative_region(potential: &EffectivePotential) -> Vec<(f64, f64)> {
    let delta = potential.centrifugal_coeff();
    match *potential.spec() {
        PotentialSpec::HydrogenLike { z, e_charge } => {
            let a = z as f64 * e_charge * e_charge;
            vec![(delta / a, f64::INFINITY)]
        }
        PotentialSpec::HOSpinOrbit { omega, .. } => {
            // r²U = A u² − C u + δ with u = r².
            let a = 0.5 * potential.units().mass * omega * omega;
            let c = potential.spin_orbit_shift();
            let disc = c * c - 4.0 * a * delta;
            if c <= 0.0 || disc <= 0.0 {
                return Vec::new();
            }
            let q = 0.5 * (c + disc.sqrt());
            let (u_lo, u_hi) = (delta / q, q / a);
            vec![(u_lo.sqrt(), u_hi.sqrt())]
        }
        // Sums of non-negative terms.
        PotentialSpec::InfiniteSphericalWell { .. }
        | PotentialSpec::IsotropicHO { .. }
        | PotentialSpec::Parabolic { .. }
        | PotentialSpec::FreeParticle => Vec::new(),
    }
}

fn check_real_phase(potential: &EffectivePotential, r: f64, r_ref: f64) -> Result<()> {
    check_interval(potential, r, r_ref)?;
    let (lo, hi) = if r < r_ref { (r, r_ref) } else { (r_ref, r) };
    for (a, b) in negative_region(potential) {
        let (x, y) = (lo.max(a), hi.min(b));
        if x < y {
            return Err(Error::ComplexPhase { lo: x, hi: y });
        }
    }
    Ok(())
}

/// Q(r) = m₁∫_{r_ref}^{r} √U dx, so Q(r_ref) = 0.
///
/// Uses the antiderivative for the well, the free particle and both
/// oscillators; the others are integrated numerically at the default
/// tolerance.
pub fn phase_q(potential: &EffectivePotential, r: f64, r_ref: f64) -> Result<PhaseResult> {
    check_real_phase(potential, r, r_ref)?;
    match closed_phase_antiderivative(potential) {
        Some(g) => {
            if r == r_ref {
                return Ok(PhaseResult::closed(0.0, r_ref));
            }
            let (gr, gref) = (g(r), g(r_ref));
            if !(gr.is_finite() && gref.is_finite()) {
                return Err(Error::Divergent(format!(
                    "m₁∫√U dr diverges on the path from {r_ref} to {r}"
                )));
            }
            Ok(PhaseResult::closed(gr - gref, r_ref))
        }
        None => phase_q_numeric(potential, r, r_ref, DEFAULT_TOLERANCE),
    }
}

/// Q(r) by adaptive quadrature at relative tolerance `tol`.
pub fn phase_q_numeric(potential: &EffectivePotential, r: f64, r_ref: f64, tol: f64) -> Result<PhaseResult> {
    check_real_phase(potential, r, r_ref)?;
    let m1 = potential.units().m1();
    // Rounding can push U a hair below zero at a root of U on the path.
    let res = adaptive_integral(|x| potential.value(x).max(0.0).sqrt(), r_ref, r, tol)?;
    Ok(PhaseResult {
        value: m1 * res.value,
        method: Method::Numeric,
        lower_limit: r_ref,
        estimated_error: m1 * res.error,
    })
}

/// An antiderivative G of m₁√U, when one is implemented in closed form.
fn closed_phase_antiderivative(potential: &EffectivePotential) -> Option<Box<dyn Fn(f64) -> f64>> {
    let m1 = potential.units().m1();
    let delta = potential.centrifugal_coeff();
    let sd = delta.sqrt();
    match *potential.spec() {
        PotentialSpec::InfiniteSphericalWell { .. } | PotentialSpec::FreeParticle => {
            if delta == 0.0 {
                Some(Box::new(|_| 0.0))
            } else {
                Some(Box::new(move |r: f64| m1 * sd * r.ln()))
            }
        }
        PotentialSpec::IsotropicHO { omega } | PotentialSpec::HOSpinOrbit { omega, .. } => {
            // With u = r² and X = Au² + βu + δ (β = −C):
            // ∫√U dr = ½∫√X/u du
            //        = ½[√X + β/(2√A)·ln|2√(AX) + 2Au + β| − √δ·ln|(2√(δX) + βu + 2δ)/u|].
            let a = 0.5 * potential.units().mass * omega * omega;
            let beta = -potential.spin_orbit_shift();
            let sa = a.sqrt();
            Some(Box::new(move |r: f64| {
                let u = r * r;
                let x = ((a * u + beta) * u + delta).max(0.0);
                let sx = x.sqrt();
                let mut g = sx;
                if beta != 0.0 {
                    g += beta / (2.0 * sa) * (2.0 * sa * sx + 2.0 * a * u + beta).abs().ln();
                }
                if delta != 0.0 {
                    g -= sd * ((2.0 * sd * sx + beta * u + 2.0 * delta) / u).abs().ln();
                }
                0.5 * m1 * g
            }))
        }
        PotentialSpec::HydrogenLike { .. } | PotentialSpec::Parabolic { .. } => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::potentials::{HalfInt, SpinOrbitCoupling, UnitSystem};
    use crate::turning_points::turning_points;
    use proptest::prelude::*;

    fn pot(spec: PotentialSpec, l: u32) -> EffectivePotential {
        EffectivePotential::new(spec, l, UnitSystem::natural()).unwrap()
    }

    fn hoso(l: u32, twice_j: u32, c0: f64) -> EffectivePotential {
        pot(
            PotentialSpec::HOSpinOrbit {
                omega: 1.0,
                j: HalfInt::from_twice(twice_j),
                s: HalfInt::HALF,
                coupling: SpinOrbitCoupling::Parameter { c0 },
            },
            l,
        )
    }

    fn catalog() -> Vec<EffectivePotential> {
        let mut out = Vec::new();
        for l in 0..4 {
            out.push(pot(PotentialSpec::HydrogenLike { z: 1, e_charge: 1.0 }, l));
            out.push(pot(PotentialSpec::InfiniteSphericalWell { radius: 50.0 }, l));
            out.push(pot(PotentialSpec::IsotropicHO { omega: 1.0 }, l));
            out.push(pot(
                PotentialSpec::Parabolic {
                    a: 1.0,
                    b: 0.5,
                    c: 0.25,
                },
                l,
            ));
            out.push(pot(PotentialSpec::FreeParticle, l));
            out.push(hoso(l, 2 * l + 1, 0.015));
            if l > 0 {
                out.push(hoso(l, 2 * l - 1, 0.015));
            }
        }
        out
    }

    #[test]
    fn oscillator_s_wave_area() {
        let u = pot(PotentialSpec::IsotropicHO { omega: 1.0 }, 0);
        let tp = turning_points(&u, 1.0).unwrap();
        assert_eq!(tp.r1, 0.0);
        let expect = 2f64.sqrt() / 3.0;
        let closed = area_s(&u, &tp).unwrap();
        let numeric = area_s_numeric(&u, &tp, 1e-10).unwrap();
        assert_eq!(closed.method, Method::ClosedForm);
        assert!((closed.value - expect).abs() < 1e-14);
        assert!((numeric.value - expect).abs() < 1e-12);
        assert!(numeric.estimated_error <= 1e-10);
    }

    #[test]
    fn free_s_wave_area_vanishes() {
        let u = pot(PotentialSpec::FreeParticle, 0);
        let tp = TurningPoints::from_interval(0.5, 3.0, 0.0).unwrap();
        assert_eq!(area_s(&u, &tp).unwrap().value, 0.0);
        assert_eq!(area_s_numeric(&u, &tp, 1e-10).unwrap().value, 0.0);
    }

    #[test]
    fn hydrogen_s_wave_area_diverges_at_origin() {
        let u = pot(PotentialSpec::HydrogenLike { z: 1, e_charge: 1.0 }, 0);
        let tp = turning_points(&u, -0.5).unwrap();
        assert_eq!((tp.r1, tp.r2), (0.0, 2.0));
        assert!(matches!(area_s(&u, &tp), Err(Error::Divergent(_))));
        assert!(area_s_numeric(&u, &tp, 1e-10).is_err());
        // Away from the origin the logarithm is finite.
        let eps = 1e-3;
        let cut = TurningPoints::from_interval(eps, 2.0, -0.5).unwrap();
        let s = area_s(&u, &cut).unwrap().value;
        assert!((s + (2.0 / eps).ln()).abs() < 1e-12);
    }

    #[test]
    fn closed_area_matches_quadrature_across_catalog() {
        for u in catalog() {
            let floor = crate::turning_points::energy_floor(&u);
            let energy = if floor.is_finite() {
                floor + 0.7 * floor.abs().max(1.0)
            } else {
                -0.05
            };
            let Ok(tp) = turning_points(&u, energy) else { continue };
            let Ok(closed) = area_s(&u, &tp) else {
                assert!(tp.r1 == 0.0, "{:?}", u.spec());
                continue;
            };
            let numeric = area_s_numeric(&u, &tp, 1e-10).unwrap();
            let scale = closed.value.abs().max(1.0);
            assert!(
                (closed.value - numeric.value).abs() <= 1e-9 * scale,
                "{:?} l={}: {} vs {}",
                u.spec(),
                u.l(),
                closed.value,
                numeric.value
            );
        }
    }

    #[test]
    fn empty_path_gives_zero() {
        for u in catalog() {
            let q = phase_q(&u, 1.3, 1.3).unwrap();
            assert_eq!(q.value, 0.0);
        }
    }

    #[test]
    fn well_p_wave_phase_is_logarithmic() {
        let u = pot(PotentialSpec::InfiniteSphericalWell { radius: 10.0 }, 1);
        let e = std::f64::consts::E;
        let q = phase_q(&u, e, 1.0).unwrap();
        assert!((q.value - 2f64.sqrt()).abs() < 1e-14);
        let n = phase_q_numeric(&u, e, 1.0, 1e-12).unwrap();
        assert!((n.value - 2f64.sqrt()).abs() < 1e-11);
        assert!(phase_q(&u, 11.0, 1.0).is_err());
    }

    #[test]
    fn oscillator_closed_phase_matches_quadrature() {
        let u = pot(PotentialSpec::IsotropicHO { omega: 1.0 }, 1);
        let c = phase_q(&u, 2.0, 1.0).unwrap();
        let n = phase_q_numeric(&u, 2.0, 1.0, 1e-12).unwrap();
        assert_eq!(c.method, Method::ClosedForm);
        assert!((c.value - n.value).abs() <= 1e-8 * c.value.abs());
    }

    #[test]
    fn negative_region_is_reported_with_its_interval() {
        let u = pot(PotentialSpec::HydrogenLike { z: 1, e_charge: 1.0 }, 1);
        // U < 0 beyond r = 1.
        match phase_q(&u, 3.0, 0.5) {
            Err(Error::ComplexPhase { lo, hi }) => {
                assert!((lo - 1.0).abs() < 1e-15);
                assert_eq!(hi, 3.0);
            }
            other => panic!("{other:?}"),
        }
        assert!(phase_q(&u, 0.9, 0.5).is_ok());
        // Strong spin-orbit shift opens a negative pocket.
        let deep = hoso(1, 3, 3.0);
        assert!(matches!(phase_q(&deep, 2.0, 0.5), Err(Error::ComplexPhase { .. })));
        for (a, b) in negative_region(&deep) {
            let mid = 0.5 * (a + b);
            assert!(deep.value(mid) < 0.0);
            assert!(deep.value(a * 0.99) > 0.0 && deep.value(b * 1.01) > 0.0);
        }
    }

    #[test]
    fn divergent_reference_at_origin() {
        let u = pot(PotentialSpec::IsotropicHO { omega: 1.0 }, 2);
        assert!(phase_q(&u, 1.0, 0.0).is_err());
        let s = pot(PotentialSpec::IsotropicHO { omega: 1.0 }, 0);
        let q = phase_q(&s, 2.0, 0.0).unwrap();
        // m₁∫₀² r/√2 dr with m₁ = √2
        assert!((q.value - 2.0).abs() < 1e-14);
    }

    /// Radii where U > 0, spread geometrically over the region that matters.
    fn positive_radii(u: &EffectivePotential, n: usize) -> Vec<f64> {
        let hi = u.wall().map_or(6.0, |w| 0.95 * w);
        (0..n)
            .map(|k| 0.05 * (hi / 0.05f64).powf(k as f64 / (n - 1) as f64))
            .filter(|&r| u.value(r) > 1e-6)
            .collect()
    }

    #[test]
    fn phase_derivative_is_m1_sqrt_u() {
        for u in catalog() {
            let m1 = u.units().m1();
            for r in positive_radii(&u, 50) {
                let h = 1e-6 * r;
                let (a, b) = (r - h, r + h);
                if negative_region(&u).iter().any(|&(lo, hi)| a < hi && b > lo) {
                    continue;
                }
                let fd = (phase_q(&u, b, r).unwrap().value - phase_q(&u, a, r).unwrap().value) / (2.0 * h);
                let exact = m1 * u.value(r).sqrt();
                assert!(
                    (fd - exact).abs() <= 1e-5 * exact,
                    "{:?} l={} r={r}: {fd} vs {exact}",
                    u.spec(),
                    u.l()
                );
            }
        }
    }

    #[test]
    fn closed_forms_agree_with_quadrature() {
        for u in catalog() {
            if closed_phase_antiderivative(&u).is_none() {
                continue;
            }
            let radii = positive_radii(&u, 25);
            if radii.is_empty() {
                continue;
            }
            let r_ref = radii[radii.len() / 2];
            for &r in &radii {
                let Ok(c) = phase_q(&u, r, r_ref) else { continue };
                let n = phase_q_numeric(&u, r, r_ref, 1e-12).unwrap();
                assert!(
                    (c.value - n.value).abs() <= 1e-8 * c.value.abs().max(1.0),
                    "{:?} l={} r={r}: {} vs {}",
                    u.spec(),
                    u.l(),
                    c.value,
                    n.value
                );
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn phase_is_additive_and_monotone(idx in 0usize..26, x in 0.0f64..1.0, y in 0.0f64..1.0, z in 0.0f64..1.0) {
            let cat = catalog();
            let u = &cat[idx % cat.len()];
            let radii = positive_radii(u, 200);
            if radii.len() < 3 {
                return Ok(());
            }
            let pick = |t: f64| radii[((radii.len() - 1) as f64 * t) as usize];
            let mut pts = [pick(x), pick(y), pick(z)];
            pts.sort_by(f64::total_cmp);
            let [a, b, c] = pts;
            if negative_region(u).iter().any(|&(lo, hi)| a < hi && c > lo) {
                return Ok(());
            }
            let ac = phase_q(u, c, a).unwrap().value;
            let ab = phase_q(u, b, a).unwrap().value;
            let bc = phase_q(u, c, b).unwrap().value;
            prop_assert!((ac - ab - bc).abs() <= 1e-9 * ac.abs().max(1.0));
            prop_assert!(ab >= 0.0 && bc >= 0.0);
            prop_assert!(phase_q(u, a, c).unwrap().value <= 0.0);
        }
    }
}
