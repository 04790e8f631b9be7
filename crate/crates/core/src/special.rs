//! Scalar functions of circular caps.
//!
//! `g(t)` is the area of the circular segment of the unit disk with half-angle `t`,
//! `h(t) = g(t)/sin²t` the same area normalized by the squared half-chord.

use crate::error::{domain, Error, Result};
use std::f64::consts::PI;

// g and sin x - x cos x lose digits to cancellation well before 1e-4, so their
// power series is used on a wider interval. Quotients built from them only need
// a series where the numerator and denominator would underflow or vanish.
const SERIES_CUTOFF: f64 = 0.25;
const NEAR_ZERO: f64 = 1e-4;

/// `t - sin t cos t`.
pub fn g(t: f64) -> f64 {
    if t.abs() < SERIES_CUTOFF {
        // t - sin(2t)/2 = sum_{k>=1} (-1)^{k+1} (2t)^{2k+1} / (2 (2k+1)!)
        let u = 2.0 * t;
        let u2 = u * u;
        let mut term = u * u2 / 6.0;
        let mut sum = 0.0;
        let mut k = 1.0;
        while term.abs() > 1e-300 {
            sum += term;
            term *= -u2 / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
            k += 1.0;
            if k > 30.0 {
                break;
            }
        }
        0.5 * sum
    } else {
        t - t.sin() * t.cos()
    }
}

/// `sin x - x cos x`, accurate near zero.
pub fn sin_minus_xcos(x: f64) -> f64 {
    if x.abs() < SERIES_CUTOFF {
        // sum_{k>=1} (-1)^{k+1} 2k x^{2k+1} / (2k+1)!
        let x2 = x * x;
        let mut pow = x * x2 / 6.0; // x^{2k+1}/(2k+1)! for k=1
        let mut sum = 0.0;
        for k in 1..30 {
            let kf = k as f64;
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            sum += sign * 2.0 * kf * pow;
            pow *= x2 / ((2.0 * kf + 2.0) * (2.0 * kf + 3.0));
            if pow.abs() < 1e-300 {
                break;
            }
        }
        sum
    } else {
        x.sin() - x * x.cos()
    }
}

/// `g(t)/sin²t` on `(-π, π)`, extended by `h(0) = 0`.
pub fn h(t: f64) -> Result<f64> {
    if !t.is_finite() || t.abs() >= PI {
        return Err(domain(format!("h: argument {t} outside (-pi, pi)")));
    }
    Ok(h_unchecked(t))
}

pub(crate) fn h_unchecked(t: f64) -> f64 {
    if t.abs() < NEAR_ZERO {
        let t2 = t * t;
        t * (2.0 / 3.0 + t2 * (4.0 / 45.0 + t2 * (4.0 / 315.0)))
    } else {
        let s = t.sin();
        g(t) / (s * s)
    }
}

/// Derivative of `h`: `2 (sin t - t cos t) / sin³t`.
pub fn h_prime(t: f64) -> f64 {
    if t.abs() < NEAR_ZERO {
        let t2 = t * t;
        2.0 / 3.0 + t2 * (4.0 / 15.0 + t2 * (4.0 / 63.0))
    } else {
        let s = t.sin();
        2.0 * sin_minus_xcos(t) / (s * s * s)
    }
}

/// Inverse of `h`: the unique `t` in `(-π, π)` with `h(t) = y`.
pub fn h_inv(y: f64) -> Result<f64> {
    if !y.is_finite() {
        return Err(domain(format!("h_inv: non-finite argument {y}")));
    }
    if y == 0.0 {
        return Ok(0.0);
    }
    let t = h_inv_pos(y.abs())?;
    Ok(t.copysign(y))
}

fn h_inv_pos(y: f64) -> Result<f64> {
    let mut lo = 0.0_f64;
    let mut hi = PI;
    let mut t = if y < 0.5 {
        1.5 * y
    } else {
        (PI - (PI / y).sqrt()).max(0.5)
    };
    t = t.clamp(f64::MIN_POSITIVE, PI * (1.0 - f64::EPSILON));
    for _ in 0..200 {
        let f = h_unchecked(t) - y;
        if f == 0.0 {
            return Ok(t);
        }
        if f < 0.0 {
            lo = lo.max(t);
        } else {
            hi = hi.min(t);
        }
        let d = h_prime(t);
        let mut next = t - f / d;
        if !(next > lo && next < hi) || !next.is_finite() {
            next = 0.5 * (lo + hi);
        }
        if (next - t).abs() <= 4.0 * f64::EPSILON * t.abs().max(1e-300) || hi - lo <= f64::EPSILON * hi
        {
            return Ok(polish(next, y));
        }
        t = next;
    }
    Err(Error::Numeric(format!("h_inv: no convergence for y = {y}")))
}

/// Walk to the neighbouring float with the smallest residual; near `π` one ulp
/// of `t` moves `h` by a relative `1e-13`.
fn polish(mut t: f64, y: f64) -> f64 {
    let res = |t: f64| (h_unchecked(t) - y).abs();
    let step = |t: f64, up: bool| f64::from_bits(if up { t.to_bits() + 1 } else { t.to_bits() - 1 });
    let up = h_unchecked(t) < y;
    let mut best = res(t);
    for _ in 0..64 {
        let next = step(t, up);
        if !(next > 0.0 && next < PI) || res(next) >= best {
            break;
        }
        best = res(next);
        t = next;
    }
    t
}

/// `sin³x cos x / (sin x - x cos x)`, the tan-free form of `sin³x / (tan x - x)`.
pub fn h_cap(x: f64) -> Result<f64> {
    if !(x > 0.0 && x < PI) {
        return Err(domain(format!("H: argument {x} outside (0, pi)")));
    }
    Ok(h_cap_unchecked(x))
}

pub(crate) fn h_cap_unchecked(x: f64) -> f64 {
    if x.abs() < NEAR_ZERO {
        let x2 = x * x;
        3.0 + x2 * (-27.0 / 10.0 + x2 * (1287.0 / 1400.0))
    } else {
        let s = x.sin();
        s * s * s * x.cos() / sin_minus_xcos(x)
    }
}

/// `x / sin x` with the removable singularity at 0 filled in.
pub fn x_over_sin(x: f64) -> f64 {
    if x.abs() < 1e-4 {
        1.0 + x * x / 6.0
    } else {
        x / x.sin()
    }
}

/// Perimeter defect of a cap: `sin x · T / sin T - x` with `T = h⁻¹(h(x) + y)`.
pub fn f_defect(x: f64, y: f64) -> Result<f64> {
    if !(x >= 0.0 && x < PI) || !y.is_finite() {
        return Err(domain(format!("F: argument ({x}, {y}) outside the admissible set")));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    let t = h_inv(h_unchecked(x) + y)?;
    Ok(x.sin() * x_over_sin(t) - x)
}

/// Limit of the quotient along the four-cap family shrinking to the ball.
pub fn limit_case_a(eta1: f64, eta2: f64) -> Result<f64> {
    for e in [eta1, eta2] {
        if !(e > 0.0 && e <= PI / 2.0) {
            return Err(domain(format!("limit: angle {e} outside (0, pi/2]")));
        }
    }
    let term = |e: f64| e.cos() / (8.0 * sin_minus_xcos(e));
    Ok(PI / 8.0 * (term(eta1) + term(eta2)))
}

/// Minimum of [`limit_case_a`] over admissible angles `η₁ + η₂ ≤ π/2`, `ηᵢ ≥ lo`.
/// Both terms decrease in their angle, so the minimum lies on `η₁ + η₂ = π/2`.
pub fn minimize_limit_case_a(lo: f64) -> Result<(f64, f64, f64)> {
    let f = |e: f64| limit_case_a(e, PI / 2.0 - e).unwrap_or(f64::INFINITY);
    let (e, v) = crate::optim::golden_section(f, lo, PI / 2.0 - lo, 1e-12)?;
    Ok((e, PI / 2.0 - e, v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn limit_minimum_on_diagonal() {
        let (a, b, v) = minimize_limit_case_a(0.01).unwrap();
        assert!((a - PI / 4.0).abs() < 1e-6 && (b - PI / 4.0).abs() < 1e-6);
        assert!((v - PI / (8.0 * (4.0 - PI))).abs() < 1e-10);
    }

    #[test]
    fn g_basic_values() {
        assert_eq!(g(0.0), 0.0);
        assert!((g(PI / 2.0) - PI / 2.0).abs() < 1e-15);
        assert!((g(PI / 4.0) - (PI / 4.0 - 0.5)).abs() < 1e-15);
    }

    #[test]
    fn series_and_direct_agree_at_cutoff() {
        for &t in &[0.2499999, 0.25, 0.2500001, -0.25] {
            let direct = t - f64::sin(t) * f64::cos(t);
            assert!((g(t) - direct).abs() < 1e-16, "g {t}");
            let s = f64::sin(t);
            assert!((h_unchecked(t) - direct / (s * s)).abs() < 1e-14, "h {t}");
            let d = f64::sin(t) - t * f64::cos(t);
            assert!((sin_minus_xcos(t) - d).abs() < 1e-16, "sxc {t}");
            let hc = s * s * s * t.cos() / d;
            assert!((h_cap_unchecked(t) - hc).abs() < 1e-13, "H {t}");
        }
    }

    #[test]
    fn near_zero_series_match_quotients() {
        for &t in &[0.99e-4, 1.01e-4] {
            assert!((h_unchecked(t) / (2.0 * t / 3.0) - 1.0).abs() < 1e-8);
            assert!((h_prime(t) / (2.0 / 3.0) - 1.0).abs() < 1e-8);
            assert!((h_cap_unchecked(t) / 3.0 - 1.0).abs() < 1e-8);
        }
        let a = h_unchecked(0.99999e-4);
        let b = h_unchecked(1.00001e-4);
        assert!(b > a && (b - a) < 2e-9);
    }

    #[test]
    fn h_small_argument() {
        let v = h(1e-6).unwrap();
        assert!((v / (2e-6 / 3.0) - 1.0).abs() < 1e-9);
    }

    #[test]
    fn h_inv_examples() {
        assert_eq!(h_inv(0.0).unwrap(), 0.0);
        assert!((h_inv(PI / 2.0).unwrap() - PI / 2.0).abs() < 1e-14);
        assert!((h_inv(h(1.0).unwrap()).unwrap() - 1.0).abs() < 1e-12);
        assert!(h_inv(f64::NAN).is_err());
    }

    #[test]
    fn h_cap_values() {
        assert!(h_cap(PI / 2.0).unwrap().abs() < 1e-16);
        assert!(h_cap(2.0).unwrap() < 0.0);
        assert!(h_cap(0.0).is_err());
        assert!(h_cap(PI).is_err());
    }

    #[test]
    fn limit_values() {
        let v = limit_case_a(PI / 4.0, PI / 4.0).unwrap();
        assert!((v - PI / (8.0 * (4.0 - PI))).abs() < 1e-15);
        assert!(limit_case_a(PI / 2.0, PI / 2.0).unwrap().abs() < 1e-16);
        let half = limit_case_a(PI / 4.0, PI / 2.0).unwrap();
        assert!((half - v / 2.0).abs() < 1e-15);
        assert!(limit_case_a(0.0, 1.0).is_err());
    }

    #[test]
    fn f_defect_zero_and_small() {
        assert!(f_defect(0.7, 0.0).unwrap().abs() < 1e-15);
        assert_eq!(f_defect(0.0, 0.3).unwrap(), 0.0);
        let x = PI / 4.0;
        let y = 0.01;
        let lead = 0.5 * y * x.sin().powi(2);
        assert!((f_defect(x, y).unwrap() / lead - 1.0).abs() < 0.05);
    }
}
