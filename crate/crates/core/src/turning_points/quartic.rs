/// Positive real roots of a4·r⁴ + a3·r³ + a2·r² + a0 (no linear term), sorted
/// ascending.
///
/// The derivative r(4a4·r² + 3a3·r + 2a2) has at most two positive critical
/// points, so (0, R] splits into at most three monotone pieces with at most one
/// root each. Each piece is solved by safeguarded Newton iteration.
pub fn quartic_positive_roots(a4: f64, a3: f64, a2: f64, a0: f64) -> Vec<f64> {
    assert!(a4 > 0.0, "leading coefficient must be positive");
    if a0 == 0.0 {
        // r²(a4·r² + a3·r + a2): only the quadratic factor has positive roots.
        return positive_quadratic_roots(a4, a3, a2);
    }
    let p = |r: f64| ((a4 * r + a3) * r + a2) * r * r + a0;
    let dp = |r: f64| ((4.0 * a4 * r + 3.0 * a3) * r + 2.0 * a2) * r;
    // Rounding bound for evaluating p at r.
    let slack = |r: f64| 64.0 * f64::EPSILON * (a4 * r.powi(4) + a3.abs() * r.powi(3) + a2.abs() * r * r + a0.abs());

    let bound = 1.0 + [a3, a2, a0].iter().map(|c| c.abs() / a4).fold(0.0, f64::max);

    let mut knots = vec![0.0];
    let (qa, qb, qc) = (4.0 * a4, 3.0 * a3, 2.0 * a2);
    let disc = qb * qb - 4.0 * qa * qc;
    if disc >= 0.0 {
        let sq = disc.sqrt();
        // Stable quadratic roots.
        let sign = if qb >= 0.0 { 1.0 } else { -1.0 };
        let q = -0.5 * (qb + sign * sq);
        let mut crit = vec![q / qa];
        if q != 0.0 {
            crit.push(qc / q);
        }
        // A vanishing q means qb = qc = 0 and a single critical point at 0.
        crit.sort_by(f64::total_cmp);
        knots.extend(crit.into_iter().filter(|&c| c > 0.0 && c < bound));
    }
    knots.push(bound);
    knots.dedup();

    let mut roots: Vec<f64> = Vec::new();
    for w in knots.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        let (flo, fhi) = (p(lo), p(hi));
        if lo > 0.0 && flo.abs() <= slack(lo) {
            // Tangent (or exact) root at a critical point.
            roots.push(lo);
            continue;
        }
        if flo.signum() == fhi.signum() {
            continue;
        }
        roots.push(safeguarded_newton(&p, &dp, lo, hi, flo));
    }
    roots.retain(|&r| r > 0.0);
    roots.sort_by(f64::total_cmp);
    roots.dedup_by(|a, b| (*a - *b).abs() <= 1e-12 * a.abs().max(1.0));
    roots
}

fn positive_quadratic_roots(a: f64, b: f64, c: f64) -> Vec<f64> {
    let disc = b * b - 4.0 * a * c;
    if disc < 0.0 {
        return Vec::new();
    }
    let sign = if b >= 0.0 { 1.0 } else { -1.0 };
    let q = -0.5 * (b + sign * disc.sqrt());
    let mut roots = vec![q / a];
    if q != 0.0 {
        roots.push(c / q);
    }
    roots.retain(|&r| r > 0.0);
    roots.sort_by(f64::total_cmp);
    roots.dedup();
    roots
}

/// Newton steps kept inside a shrinking sign-change bracket.
fn safeguarded_newton(p: &impl Fn(f64) -> f64, dp: &impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, flo: f64) -> f64 {
    let lo_sign = flo.signum();
    let mut x = 0.5 * (lo + hi);
    for _ in 0..200 {
        let fx = p(x);
        if fx == 0.0 {
            return x;
        }
        if fx.signum() == lo_sign {
            lo = x;
        } else {
            hi = x;
        }
        let d = dp(x);
        let newton = x - fx / d;
        let next = if d != 0.0 && newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
        if (next - x).abs() <= 1e-15 * x.abs() || hi - lo <= 1e-15 * hi.abs() {
            return next;
        }
        x = next;
    }
    x
}
