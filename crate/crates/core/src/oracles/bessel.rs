use crate::error::{Error, Result};

/// Largest order supported by [`bessel_zero`].
pub const MAX_ZERO_ORDER: u32 = 10;

/// Spherical Bessel function j_ℓ(x) for x > 0.
///
/// Upward recurrence from j₀ and j₁ where it is stable (x > ℓ), the power
/// series below that.
pub fn spherical_bessel(l: u32, x: f64) -> Result<f64> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::domain(format!(
            "spherical Bessel argument must be finite and positive, got {x}"
        )));
    }
    if x <= l as f64 + 1.0 {
        return Ok(series(l, x));
    }
    let (s, c) = x.sin_cos();
    let mut prev = s / x;
    if l == 0 {
        return Ok(prev);
    }
    let mut cur = s / (x * x) - c / x;
    for k in 1..l {
        let next = (2 * k + 1) as f64 / x * cur - prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// x^ℓ/(2ℓ+1)!! · Σ_k (−x²/2)^k / (k!·(2ℓ+3)(2ℓ+5)…(2ℓ+2k+1)).
fn series(l: u32, x: f64) -> f64 {
    let mut lead = 1.0;
    for k in 1..=l {
        lead *= x / (2 * k + 1) as f64;
    }
    let y = -0.5 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..200 {
        term *= y / (k as f64 * (2 * l + 2 * k + 1) as f64);
        sum += term;
        if term.abs() <= 1e-17 * sum.abs() {
            break;
        }
    }
    lead * sum
}

/// n-th positive zero β_{nℓ} of j_ℓ, by a sign-change scan and bisection.
pub fn bessel_zero(l: u32, n: u32) -> Result<f64> {
    if n == 0 {
        return Err(Error::domain("zeros are counted from n = 1"));
    }
    if l > MAX_ZERO_ORDER {
        return Err(Error::domain(format!(
            "order l = {l} exceeds the supported maximum {MAX_ZERO_ORDER}"
        )));
    }
    // Zeros of j_ℓ are more than 2.5 apart, so this step cannot skip a pair.
    let step = 0.05;
    let mut a = 0.5;
    let mut fa = spherical_bessel(l, a)?;
    let mut found = 0;
    loop {
        let b = a + step;
        let fb = spherical_bessel(l, b)?;
        if fb == 0.0 || (fa < 0.0) != (fb < 0.0) {
            found += 1;
            if found == n {
                return bisect(l, a, b, fa);
            }
        }
        a = b;
        fa = fb;
    }
}

fn bisect(l: u32, mut a: f64, mut b: f64, fa: f64) -> Result<f64> {
    let neg = fa < 0.0;
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let fm = spherical_bessel(l, m)?;
        if fm == 0.0 {
            return Ok(m);
        }
        if (fm < 0.0) == neg {
            a = m;
        } else {
            b = m;
        }
    }
    Ok(0.5 * (a + b))
}
