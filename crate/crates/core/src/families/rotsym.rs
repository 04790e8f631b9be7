//! One-optimal-ball candidates with `N`-fold rotational symmetry.
//!
//! Around the unit ball, `N` outer caps of radius `R₀` (ball half-angle `θ`,
//! cap half-angle `α`) alternate with `N` inner arcs of radius `R₁` spanning the
//! remaining half-angle `π/N − θ`. In the non-connected variant the set also
//! contains a ball of radius `R₀` far from the unit ball.

use super::FamilyReport;
use crate::error::{Error, Result};
use crate::geometry::{Arc, ArcRegion, Edge, Point};
use crate::optim::{brent_root, scan_roots};
use crate::special::{g, h_cap_unchecked, h_unchecked, x_over_sin};
use crate::symmetrization::cap_edge;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RotSymParams {
    pub n: u32,
    pub theta: f64,
    pub alpha: f64,
    pub connected: bool,
}

impl RotSymParams {
    pub fn connected(n: u32, theta: f64, alpha: f64) -> Self {
        RotSymParams { n, theta, alpha, connected: true }
    }
    pub fn nonconnected(n: u32, theta: f64, alpha: f64) -> Self {
        RotSymParams { n, theta, alpha, connected: false }
    }
    fn c(&self) -> f64 {
        PI / self.n as f64
    }
}

/// Closed-form pieces shared by both variants; finite wherever the formulas are.
#[derive(Debug, Clone, Copy)]
pub struct Pieces {
    pub r0: f64,
    pub a0: f64,
    pub a1: f64,
    /// `α R₀ + sin(π/N − θ)(α − π/N)/sin(α − π/N)`, a `1/(2N)` share of the arc length.
    pub d: f64,
}

pub fn pieces(n: u32, theta: f64, alpha: f64) -> Pieces {
    let c = PI / n as f64;
    let r0 = theta.sin() / alpha.sin();
    let s = (c - theta).sin();
    Pieces {
        r0,
        a0: r0 * r0 * g(alpha) - g(theta),
        a1: s * s * h_unchecked(alpha - c) + g(c - theta),
        d: alpha * r0 + s * x_over_sin(alpha - c),
    }
}

/// Area residual of the connected variant, `𝒜₀ − 𝒜₁`.
pub fn connected_residual(n: u32, theta: f64, alpha: f64) -> f64 {
    let p = pieces(n, theta, alpha);
    p.a0 - p.a1
}

/// Area residual of the non-connected variant, `𝒜₀ − 𝒜₁ + (π/N) R₀²`.
pub fn nonconnected_residual(n: u32, theta: f64, alpha: f64) -> f64 {
    let p = pieces(n, theta, alpha);
    p.a0 - p.a1 + PI / n as f64 * p.r0 * p.r0
}

fn q_value(n: u32, theta: f64, alpha: f64, value: f64) -> f64 {
    let c = PI / n as f64;
    h_cap_unchecked(alpha) / theta.sin().powi(3) - h_cap_unchecked((alpha - c).abs()) / (c - theta).sin().powi(3)
        - 32.0 * n as f64 / PI * value
}

/// The `α`-dependent factor of `Φ`: `cot α − (N/π)(1 − α cot α)`.
pub fn phi_factor(n: u32, alpha: f64) -> f64 {
    let cot = alpha.cos() / alpha.sin();
    cot - n as f64 / PI * (1.0 - alpha * cot)
}

pub fn phi(n: u32, theta: f64, alpha: f64) -> f64 {
    let cot = alpha.cos() / alpha.sin();
    n as f64 * (theta.sin() / alpha.sin()) * (1.0 - alpha * cot) * phi_factor(n, alpha)
}

/// Zero of [`phi_factor`]; the factor decreases from `+∞` to `−∞` on `(0, π)`.
pub fn alpha_root(n: u32) -> Result<f64> {
    if n < 2 {
        return Err(Error::Domain(format!("symmetry order {n} < 2")));
    }
    brent_root(|a| phi_factor(n, a), 1e-6, PI - 1e-6, 1e-15)
}

fn check_connected(p: &RotSymParams) -> Result<()> {
    let c = p.c();
    if p.n < 2 || !(p.theta >= 0.0 && p.theta <= c && c <= p.alpha && p.alpha <= PI) {
        return Err(Error::Domain(format!("connected parameters {p:?}")));
    }
    if p.alpha.sin().abs() < 1e-12 || (p.alpha - c).sin().abs() < 1e-12 {
        return Err(Error::Singular(format!("sin(alpha) or sin(alpha - pi/N) vanishes at {p:?}")));
    }
    Ok(())
}

fn check_nonconnected(p: &RotSymParams) -> Result<()> {
    let c = p.c();
    if p.n < 2 || !(p.theta >= 0.0 && p.theta <= c && p.theta < p.alpha && p.alpha <= PI) {
        return Err(Error::Domain(format!("non-connected parameters {p:?}")));
    }
    if p.alpha.sin().abs() < 1e-12 || (c - p.alpha).sin().abs() < 1e-12 {
        return Err(Error::Singular(format!("R1 singular at {p:?}")));
    }
    Ok(())
}

pub fn connected_metrics(p: &RotSymParams) -> Result<FamilyReport> {
    check_connected(p)?;
    let (n, c) = (p.n as f64, p.c());
    let pc = pieces(p.n, p.theta, p.alpha);
    let delta = (2.0 * n * pc.d - 2.0 * PI) / (2.0 * PI);
    let lambda = n * (pc.a0 + pc.a1) / PI;
    let mut rep = FamilyReport::new("connected", delta, lambda);
    rep.r0 = Some(pc.r0);
    rep.r1 = Some((c - p.theta).sin() / (p.alpha - c).sin());
    rep.a0 = Some(pc.a0);
    rep.a1 = Some(pc.a1);
    rep.area = Some(PI + n * (pc.a0 - pc.a1));
    rep.perimeter = Some(2.0 * n * pc.d);
    rep.q = rep.value.map(|v| q_value(p.n, p.theta, p.alpha, v));
    Ok(rep)
}

pub fn nonconnected_metrics(p: &RotSymParams) -> Result<FamilyReport> {
    check_nonconnected(p)?;
    let (n, c) = (p.n as f64, p.c());
    let pc = pieces(p.n, p.theta, p.alpha);
    let delta = n / PI * pc.d + pc.r0 - 1.0;
    let lambda = 2.0 * n * pc.a0 / PI + 2.0 * pc.r0 * pc.r0;
    let mut rep = FamilyReport::new("nonconnected", delta, lambda);
    rep.r0 = Some(pc.r0);
    rep.r1 = Some((c - p.theta).sin() / (c - p.alpha).sin());
    rep.a0 = Some(pc.a0);
    rep.a1 = Some(pc.a1);
    rep.area = Some(PI + n * (pc.a0 - pc.a1) + PI * pc.r0 * pc.r0);
    rep.perimeter = Some(2.0 * n * pc.d + 2.0 * PI * pc.r0);
    rep.q = rep.value.map(|v| q_value(p.n, p.theta, p.alpha, v));
    rep.phi = Some(phi(p.n, p.theta, p.alpha));
    Ok(rep)
}

fn ring(p: &RotSymParams) -> Vec<Edge> {
    let c = p.c();
    let at = |phi: f64| Point::polar(1.0, phi);
    let mut edges = Vec::with_capacity(2 * p.n as usize);
    for k in 0..p.n {
        let base = 2.0 * k as f64 * c;
        if p.theta > 0.0 {
            edges.push(cap_edge(at(base - p.theta), at(base + p.theta), p.alpha));
        }
        if p.theta < c {
            edges.push(cap_edge(at(base + p.theta), at(base + 2.0 * c - p.theta), c - p.alpha));
        }
    }
    edges
}

pub fn connected_construct(p: &RotSymParams) -> Result<ArcRegion> {
    check_connected(p)?;
    Ok(ArcRegion::single(ring(p)))
}

/// The `N`-fold component around the unit ball plus a far ball of radius `R₀`.
pub fn nonconnected_construct(p: &RotSymParams) -> Result<ArcRegion> {
    check_nonconnected(p)?;
    let w = ArcRegion::single(ring(p));
    let (_, hi) = w.bounding_box();
    let r0 = p.theta.sin() / p.alpha.sin();
    let center = Point::new(hi.x.max(1.0) + 1.0 + r0, 0.0);
    let far = vec![Edge::Arc(Arc::new(center, r0, 0.0, 2.0 * PI))];
    Ok(ArcRegion::new(vec![w.loops[0].clone(), far]))
}

#[derive(Debug, Clone, Serialize)]
pub struct Conditions {
    /// `(label, residual)`; equalities hold at zero, inequalities by sign.
    pub residuals: Vec<(String, f64)>,
    pub holds: Vec<(String, bool)>,
}

impl Conditions {
    pub fn all_hold(&self) -> bool {
        self.holds.iter().all(|h| h.1)
    }
    pub fn get(&self, label: &str) -> Option<f64> {
        self.residuals.iter().find(|r| r.0 == label).map(|r| r.1)
    }
}

/// Residuals of the necessary optimality conditions for a one-ball minimizer.
pub fn condition_check(p: &RotSymParams, rep: &FamilyReport, tol: f64) -> Conditions {
    let n = p.n as f64;
    let r0 = rep.r0.unwrap_or(f64::NAN);
    let r1 = rep.r1.unwrap_or(f64::NAN);
    let (a0, a1) = (rep.a0.unwrap_or(f64::NAN), rep.a1.unwrap_or(f64::NAN));
    let value = rep.value.unwrap_or(f64::NAN);
    let first_order = 1.0 / r0 + 1.0 / r1 - 8.0 * rep.delta / rep.lambda;
    let q = rep.q.unwrap_or(f64::NAN);
    let mut residuals = Vec::new();
    let mut holds = Vec::new();
    if p.connected {
        let eq = a0 - a1;
        let bound = a0 - PI / n;
        residuals.push(("i".to_string(), eq));
        residuals.push(("i_bound".to_string(), bound));
        holds.push(("i".to_string(), eq.abs() <= tol && bound <= tol));
    } else {
        let eq = a0 - a1 + PI / n * r0 * r0;
        residuals.push(("i".to_string(), eq));
        holds.push(("i".to_string(), eq.abs() <= tol));
    }
    residuals.push(("ii".to_string(), first_order));
    holds.push(("ii".to_string(), first_order.abs() <= tol));
    residuals.push(("iii".to_string(), value - 0.406));
    holds.push(("iii".to_string(), value < 0.406));
    residuals.push(("iv".to_string(), q));
    holds.push(("iv".to_string(), q >= -tol));
    if !p.connected {
        let ph = rep.phi.unwrap_or(f64::NAN);
        residuals.push(("v".to_string(), ph));
        holds.push(("v".to_string(), ph >= -tol));
    }
    Conditions { residuals, holds }
}

/// Smallest `θ` satisfying the area constraint for the given `α`
/// (with `𝒜₀ ≤ π/N` in the connected case).
pub fn solve_theta(n: u32, alpha: f64, connected: bool) -> Result<f64> {
    if n < 2 {
        return Err(Error::Domain(format!("symmetry order {n} < 2")));
    }
    let c = PI / n as f64;
    if connected {
        return curve_thetas(n, alpha, 400)
            .into_iter()
            .find(|&t| pieces(n, t, alpha).a0 <= c)
            .ok_or_else(|| Error::Infeasible(format!("no admissible theta for N = {n}, alpha = {alpha}")));
    }
    let hi = c.min(alpha) - 1e-9;
    scan_roots(|t| nonconnected_residual(n, t, alpha), 1e-9, hi, 400, 1e-15)
        .first()
        .copied()
        .ok_or_else(|| Error::Infeasible(format!("no theta root for N = {n}, alpha = {alpha}")))
}

/// A point of the connected family on the area-constraint curve `𝒜₀ = 𝒜₁`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct CurvePoint {
    pub n: u32,
    pub alpha: f64,
    pub theta: f64,
    /// `𝒜₀ − 𝒜₁`.
    pub residual_i: f64,
    /// `1/R₀ + 1/R₁ − 8δ/λ`.
    pub residual_ii: f64,
    pub value: f64,
}

fn curve_thetas(n: u32, alpha: f64, samples: usize) -> Vec<f64> {
    let c = PI / n as f64;
    scan_roots(|t| connected_residual(n, t, alpha), 1e-9, c - 1e-9, samples, 1e-15)
}

fn curve_point(n: u32, alpha: f64, theta: f64) -> Option<CurvePoint> {
    let p = RotSymParams::connected(n, theta, alpha);
    let rep = connected_metrics(&p).ok()?;
    let cond = condition_check(&p, &rep, 1e-8);
    if cond.get("i_bound")? > 0.0 {
        return None;
    }
    Some(CurvePoint {
        n,
        alpha,
        theta,
        residual_i: cond.get("i")?,
        residual_ii: cond.get("ii")?,
        value: rep.value?,
    })
}

/// Admissible points of the connected family with `𝒜₀ = 𝒜₁` (and `𝒜₀ ≤ π/N`),
/// one `θ` root solve per sampled `α ∈ (π/N, π)`.
pub fn constraint_curve(n: u32, samples: usize) -> Vec<Vec<CurvePoint>> {
    let c = PI / n as f64;
    (1..samples)
        .map(|i| c + (PI - c) * i as f64 / samples as f64)
        .map(|alpha| curve_thetas(n, alpha, 400).into_iter().filter_map(|t| curve_point(n, alpha, t)).collect())
        .collect()
}

/// Points of the connected family satisfying both `𝒜₀ = 𝒜₁` and
/// `1/R₀ + 1/R₁ = 8δ/λ`: sign changes of the second residual between consecutive
/// samples of a curve branch, refined by a root solve in `α`.
pub fn connected_critical_points(n: u32, samples: usize) -> Vec<CurvePoint> {
    let curve = constraint_curve(n, samples);
    let mut out = Vec::new();
    for w in curve.windows(2) {
        if w[0].len() != w[1].len() {
            continue;
        }
        for (k, (a, b)) in w[0].iter().zip(&w[1]).enumerate() {
            if a.residual_ii.signum() == b.residual_ii.signum() {
                continue;
            }
            let branch = |alpha: f64| {
                curve_thetas(n, alpha, 400)
                    .get(k)
                    .and_then(|&t| curve_point(n, alpha, t))
                    .map_or(f64::NAN, |p| p.residual_ii)
            };
            if let Ok(alpha) = brent_root(branch, a.alpha, b.alpha, 1e-14) {
                if let Some(p) = curve_thetas(n, alpha, 400).get(k).and_then(|&t| curve_point(n, alpha, t)) {
                    out.push(p);
                }
            }
        }
    }
    out
}


#[cfg(test)]
mod curve_tests {
    use super::*;

    #[test]
    fn curve_points_satisfy_area_constraint() {
        let curve = constraint_curve(4, 40);
        let pts: Vec<_> = curve.iter().flatten().collect();
        assert!(!pts.is_empty());
        for p in pts {
            assert!(p.residual_i.abs() < 1e-10, "{p:?}");
            assert!(p.residual_ii.is_finite());
        }
    }
}
