//! Eight-arc doubly symmetric "masks" with two optimal unit balls at `(±x₀, 0)`.

use super::FamilyReport;
use crate::error::{Error, Result};
use crate::geometry::{ArcRegion, Point};
use crate::optim::nelder_mead;
use crate::special::h_unchecked;
use crate::symmetrization::cap_edge;
use serde::{Deserialize, Serialize};
use std::f64::consts::{FRAC_PI_2, PI};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MaskParams {
    pub alpha: f64,
    pub theta: f64,
    pub x0: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MaskGeometry {
    pub r1: f64,
    pub r2: f64,
    pub r3: f64,
    pub o1: Point,
    pub o2: Point,
    pub o3: Point,
}

#[derive(Debug, Clone)]
pub struct MaskConfig {
    /// Starts per side of the lattice over the feasibility triangle.
    pub lattice: usize,
    /// Admit `θ` up to `π` (opposite curvatures inside the balls).
    pub extended: bool,
}

impl Default for MaskConfig {
    fn default() -> Self {
        MaskConfig { lattice: 16, extended: false }
    }
}

fn feasible_angles(alpha: f64, theta: f64, extended: bool) -> bool {
    if extended {
        (0.0..=FRAC_PI_2).contains(&alpha) && (0.0..=PI).contains(&theta)
    } else {
        alpha >= 0.0 && theta >= 0.0 && alpha + theta <= FRAC_PI_2 + 1e-15
    }
}

/// Coefficients `(a, b, c)` of `A(x₀) = a x₀² + b x₀ + c`.
fn area_quadratic(alpha: f64, theta: f64) -> (f64, f64, f64) {
    let (s, c) = theta.sin_cos();
    let ha = h_unchecked(alpha);
    (
        2.0 * ha,
        4.0 * (s + ha * c),
        -2.0 * c * c * ha + 4.0 * c * s + 2.0 * s * s * h_unchecked(FRAC_PI_2 - alpha),
    )
}

pub fn mask_area(p: &MaskParams) -> f64 {
    let (a, b, c) = area_quadratic(p.alpha, p.theta);
    (a * p.x0 + b) * p.x0 + c
}

pub fn mask_perimeter(p: &MaskParams) -> f64 {
    let (sa, ca) = p.alpha.sin_cos();
    let (st, ct) = p.theta.sin_cos();
    4.0 * (p.alpha * (p.x0 + ct) / sa - p.alpha * st / ca + PI * st / (2.0 * ca))
}

pub fn mask_lambda(p: &MaskParams) -> f64 {
    let (st, ct) = p.theta.sin_cos();
    let ha = h_unchecked(p.alpha);
    2.0 - 4.0 / PI * (2.0 * p.x0 * ha * ct + p.theta + ct * st - ha * ct * ct)
}

/// The root in `[0, cos θ]` of `A(x₀) = π`.
pub fn mask_x0_from_area(alpha: f64, theta: f64) -> Result<f64> {
    mask_x0_ext(alpha, theta, false)
}

fn mask_x0_ext(alpha: f64, theta: f64, extended: bool) -> Result<f64> {
    if !feasible_angles(alpha, theta, extended) {
        return Err(Error::Infeasible(format!("(alpha, theta) = ({alpha}, {theta})")));
    }
    let (a, b, c) = area_quadratic(alpha, theta);
    let c = c - PI;
    let ct = theta.cos();
    let mut roots = Vec::new();
    if a.abs() < 1e-300 {
        if b != 0.0 {
            roots.push(-c / b);
        }
    } else {
        let disc = b * b - 4.0 * a * c;
        if disc >= 0.0 {
            let q = -0.5 * (b + b.signum() * disc.sqrt());
            roots.push(q / a);
            if q != 0.0 {
                roots.push(c / q);
            }
        }
    }
    roots
        .into_iter()
        .filter(|x| *x >= -1e-14 && *x <= ct + 1e-14)
        .map(|x| x.clamp(0.0, ct))
        .next()
        .ok_or_else(|| Error::Infeasible(format!("no x0 in [0, cos theta] at ({alpha}, {theta})")))
}

pub fn mask_geometry(p: &MaskParams) -> Result<MaskGeometry> {
    let (sa, ca) = p.alpha.sin_cos();
    if sa.abs() < 1e-12 || ca.abs() < 1e-12 {
        return Err(Error::Singular(format!("alpha = {}", p.alpha)));
    }
    let (st, ct) = p.theta.sin_cos();
    Ok(MaskGeometry {
        r1: (ct - p.x0) / sa,
        r2: p.x0 / sa,
        r3: st / ca,
        o1: Point::new(0.0, ((p.theta - p.alpha).cos() - p.x0 * ca) / sa),
        o2: Point::new(ct, st - p.x0 * ca / sa),
        o3: Point::new(p.x0 + (p.alpha + p.theta).cos() / ca, 0.0),
    })
}

/// The inner arcs sag by `R₁(1 − cos α)` below their chords at height `sin θ`;
/// past the axis the two halves overlap and the set is not simple.
fn inner_arcs_clear(p: &MaskParams, geo: &MaskGeometry) -> bool {
    geo.r1 * (1.0 - p.alpha.cos()) <= p.theta.sin() + 1e-12
}

fn check(p: &MaskParams, extended: bool) -> Result<MaskGeometry> {
    if !feasible_angles(p.alpha, p.theta, extended) || !(p.x0 >= 0.0 && p.x0 <= p.theta.cos()) {
        return Err(Error::Infeasible(format!("mask parameters {p:?}")));
    }
    let geo = mask_geometry(p)?;
    if geo.r1 < 1e-12 || geo.r3 < 1e-12 {
        return Err(Error::Singular(format!("vanishing radius at {p:?}")));
    }
    if !inner_arcs_clear(p, &geo) {
        return Err(Error::Infeasible(format!("inner arcs cross the axis at {p:?}")));
    }
    Ok(geo)
}

pub fn mask_metrics(p: &MaskParams) -> Result<(FamilyReport, MaskGeometry)> {
    let geo = check(p, true)?;
    let per = mask_perimeter(p);
    let lambda = mask_lambda(p);
    let mut rep = FamilyReport::new("mask", per / (2.0 * PI) - 1.0, lambda);
    rep.perimeter = Some(per);
    rep.area = Some(mask_area(p));
    rep.r0 = Some(geo.r1);
    rep.r1 = Some(geo.r2);
    Ok((rep, geo))
}

/// The eight arcs, counter-clockwise from the right end cap.
pub fn mask_construct(p: &MaskParams) -> Result<ArcRegion> {
    check(p, true)?;
    let (st, ct) = p.theta.sin_cos();
    let (a, x0) = (p.alpha, p.x0);
    let pa = Point::new(ct - x0, st);
    let pb = Point::new(ct + x0, st);
    let refl_y = |q: Point| Point::new(-q.x, q.y);
    let refl_x = |q: Point| Point::new(q.x, -q.y);
    let (pa1, pb1) = (refl_y(pa), refl_y(pb));
    let (pab, pbb) = (refl_x(pa), refl_x(pb));
    let (pab1, pbb1) = (refl_x(pa1), refl_x(pb1));
    let g3 = FRAC_PI_2 - a;
    let chords = [
        (pbb, pb, g3),
        (pb, pa, a),
        (pa, pa1, -a),
        (pa1, pb1, a),
        (pb1, pbb1, g3),
        (pbb1, pab1, a),
        (pab1, pab, -a),
        (pab, pbb, a),
    ];
    // x0 = 0 collapses the arcs inside one ball only
    let edges = chords.iter().filter(|c| c.0.dist(c.1) > 1e-14).map(|&(u, v, t)| cap_edge(u, v, t)).collect();
    Ok(ArcRegion::single(edges))
}

/// `J(α, θ) = (P − 2π)/λ²` with `x₀` eliminated; `None` outside the domain.
pub fn mask_objective(alpha: f64, theta: f64, extended: bool) -> Option<f64> {
    if !(alpha > 0.0 && theta > 0.0) {
        return None;
    }
    let x0 = mask_x0_ext(alpha, theta, extended).ok()?;
    let p = MaskParams { alpha, theta, x0 };
    if x0 <= 0.0 || x0 >= theta.cos() || alpha.cos() < 1e-12 || check(&p, extended).is_err() {
        return None;
    }
    let l = mask_lambda(&p);
    if !(l > 0.0) {
        return None;
    }
    Some((mask_perimeter(&p) - 2.0 * PI) / (l * l))
}

/// Minimize `J` by simplex descent from a lattice of interior starts.
pub fn mask_optimize(cfg: &MaskConfig) -> Result<(MaskParams, FamilyReport)> {
    let n = cfg.lattice.max(1);
    let penalty = 1e6;
    let ext = cfg.extended;
    let f = move |v: &[f64]| mask_objective(v[0], v[1], ext).unwrap_or(penalty);
    let theta_max = if ext { PI } else { FRAC_PI_2 };
    let mut best: Option<(Vec<f64>, f64)> = None;
    for i in 0..n {
        for j in 0..n {
            let alpha = (i as f64 + 0.5) / n as f64 * FRAC_PI_2;
            let theta = (j as f64 + 0.5) / n as f64 * theta_max;
            if f(&[alpha, theta]) >= penalty {
                continue;
            }
            let step = 0.25 / n as f64;
            let simplex = vec![vec![alpha, theta], vec![alpha + step, theta], vec![alpha, theta + step]];
            let (x, v) = nelder_mead(f, simplex, 1e-15, 2000)?;
            if best.as_ref().map_or(true, |b| v < b.1) {
                best = Some((x, v));
            }
        }
    }
    let (mut x, _) = best.ok_or_else(|| Error::Config("no feasible start in the mask lattice".into()))?;
    // restart from the best point until the simplex stops moving
    for _ in 0..5 {
        let s = 1e-4;
        let simplex = vec![x.clone(), vec![x[0] + s, x[1]], vec![x[0], x[1] + s]];
        let (y, _) = nelder_mead(f, simplex, 1e-17, 4000)?;
        let moved = (y[0] - x[0]).hypot(y[1] - x[1]);
        x = y;
        if moved < 1e-9 {
            break;
        }
    }
    let p = MaskParams { alpha: x[0], theta: x[1], x0: mask_x0_ext(x[0], x[1], ext)? };
    let (rep, _) = mask_metrics(&p)?;
    Ok((p, rep))
}
