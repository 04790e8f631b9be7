//! Fraenkel asymmetry, isoperimetric deficit and their quotient.

use crate::error::{Error, Result};
use crate::geometry::{clip_to_ball, crossings_from_clip, ArcRegion, Ball, Point};
use rayon::prelude::*;
use serde::Serialize;
use std::f64::consts::PI;

#[derive(Debug, Clone)]
pub struct SearchConfig {
    /// Grid pitch of the start lattice, in units of the ball radius.
    pub pitch: f64,
    /// Near-ties within `value_tol · |Ω|` of the minimum are reported as optimal.
    pub value_tol: f64,
    /// Distinct centers closer than `spatial_tol · r` are merged.
    pub spatial_tol: f64,
    pub lambda_floor: f64,
    pub max_iters: usize,
    /// Cap on the number of lattice starts (centroids are always used).
    pub max_starts: Option<usize>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            pitch: 0.25,
            value_tol: 1e-7,
            spatial_tol: 1e-5,
            lambda_floor: 1e-6,
            max_iters: 200,
            max_starts: None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AsymmetryResult {
    pub lambda: f64,
    pub optimal_centers: Vec<Point>,
    pub psi_at_optimum: f64,
    pub radius: f64,
    pub area: f64,
}

impl AsymmetryResult {
    pub fn ball(&self) -> Ball {
        Ball::new(self.optimal_centers[0], self.radius)
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct FunctionalResult {
    pub delta: f64,
    pub lambda: f64,
    pub value: f64,
}

/// Radius of the ball with the same area as the region.
pub fn matched_radius(region: &ArcRegion) -> Result<f64> {
    Ok((region.area()? / PI).sqrt())
}

/// `ψ(c) = |Ω Δ B_c|` for the area-matched ball centered at `c`.
pub fn psi(region: &ArcRegion, center: Point) -> Result<f64> {
    let r = matched_radius(region)?;
    Ok(psi_raw(region, center, r))
}

fn psi_raw(region: &ArcRegion, center: Point, r: f64) -> f64 {
    let a = region.signed_area();
    let ball = Ball::new(center, r);
    (a + ball.area() - 2.0 * clip_to_ball(region, &ball).inter_area).max(0.0)
}

/// Gradient of `ψ` from the intersection points.
///
/// With the crossings ordered counter-clockwise on the ball, each arc running from
/// an exit point to the next entry point lies inside `Ω`; moving the ball gains
/// area along those arcs, so `∂ψ/∂y = −2 Σ (x_exit − x_entry)` and
/// `∂ψ/∂x = −2 Σ (y_entry − y_exit)`.
pub fn psi_gradient(region: &ArcRegion, center: Point) -> Result<(f64, f64)> {
    region.check()?;
    let r = matched_radius(region)?;
    let (_, g) = psi_and_gradient(region, center, r)?;
    Ok(g)
}

fn psi_and_gradient(region: &ArcRegion, center: Point, r: f64) -> Result<(f64, (f64, f64))> {
    let ball = Ball::new(center, r);
    let clip = clip_to_ball(region, &ball);
    let xs = crossings_from_clip(&clip)?;
    let value = (region.signed_area() + ball.area() - 2.0 * clip.inter_area).max(0.0);
    if xs.is_empty() {
        return Ok((value, (0.0, 0.0)));
    }
    let n = xs.len();
    let (mut gx, mut gy) = (0.0, 0.0);
    for i in 0..n {
        let a = &xs[i];
        if a.sign >= 0 {
            continue;
        }
        let b = &xs[(i + 1) % n];
        gx += b.point.y - a.point.y;
        gy += a.point.x - b.point.x;
    }
    Ok((value, (-2.0 * gx, -2.0 * gy)))
}

const PERTURB: [(f64, f64); 8] = [
    (1.0, 0.0),
    (0.0, 1.0),
    (-1.0, 0.0),
    (0.0, -1.0),
    (0.6, 0.8),
    (-0.8, 0.6),
    (-0.6, -0.8),
    (0.8, -0.6),
];

/// Value and gradient, nudging the center off non-transversal positions.
fn eval_perturbed(region: &ArcRegion, c: Point, r: f64) -> (Point, f64, (f64, f64)) {
    if let Ok((v, g)) = psi_and_gradient(region, c, r) {
        return (c, v, g);
    }
    for k in 1..=4 {
        for (dx, dy) in PERTURB {
            let step = 1e-7 * r * k as f64;
            let p = Point::new(c.x + step * dx, c.y + step * dy);
            if let Ok((v, g)) = psi_and_gradient(region, p, r) {
                return (p, v, g);
            }
        }
    }
    (c, psi_raw(region, c, r), (0.0, 0.0))
}

/// Quasi-Newton descent on `ψ` with Armijo backtracking.
fn descend(region: &ArcRegion, start: Point, r: f64, max_iters: usize) -> (Point, f64) {
    let (mut x, mut f, mut g) = eval_perturbed(region, start, r);
    let mut best = (x, f);
    let mut hinv = [[0.5, 0.0], [0.0, 0.5]];
    let gtol = 1e-12 * r;
    let mut stalls = 0;
    for _ in 0..max_iters {
        let gn = g.0.hypot(g.1);
        if gn < gtol {
            break;
        }
        let mut p = (-(hinv[0][0] * g.0 + hinv[0][1] * g.1), -(hinv[1][0] * g.0 + hinv[1][1] * g.1));
        let mut slope = p.0 * g.0 + p.1 * g.1;
        if slope >= 0.0 {
            hinv = [[0.5, 0.0], [0.0, 0.5]];
            p = (-0.5 * g.0, -0.5 * g.1);
            slope = p.0 * g.0 + p.1 * g.1;
        }
        let pn = p.0.hypot(p.1);
        if pn > r {
            p = (p.0 * r / pn, p.1 * r / pn);
            slope *= r / pn;
        }
        let mut t = 1.0;
        let mut accepted = None;
        while t > 1e-14 {
            let cand = Point::new(x.x + t * p.0, x.y + t * p.1);
            let fv = psi_raw(region, cand, r);
            if fv <= f + 1e-4 * t * slope {
                accepted = Some(cand);
                break;
            }
            t *= 0.5;
        }
        let Some(cand) = accepted else { break };
        let (xn, fnew, gnew) = eval_perturbed(region, cand, r);
        let s = (xn.x - x.x, xn.y - x.y);
        let y = (gnew.0 - g.0, gnew.1 - g.1);
        let sy = s.0 * y.0 + s.1 * y.1;
        if sy > 1e-18 * r * r {
            // BFGS inverse-Hessian update
            let hy = (hinv[0][0] * y.0 + hinv[0][1] * y.1, hinv[1][0] * y.0 + hinv[1][1] * y.1);
            let yhy = y.0 * hy.0 + y.1 * hy.1;
            let rho = 1.0 / sy;
            let ss = [[s.0 * s.0, s.0 * s.1], [s.1 * s.0, s.1 * s.1]];
            let hys = [[hy.0 * s.0, hy.0 * s.1], [hy.1 * s.0, hy.1 * s.1]];
            for i in 0..2 {
                for j in 0..2 {
                    hinv[i][j] += (1.0 + rho * yhy) * rho * ss[i][j] - rho * (hys[i][j] + hys[j][i]);
                }
            }
        }
        let moved = s.0.hypot(s.1);
        x = xn;
        f = fnew;
        g = gnew;
        // perturbed steps near coincident arcs can cycle; stop once the best stops improving
        if f < best.1 - 1e-11 * r * r {
            stalls = 0;
        } else {
            stalls += 1;
        }
        if f < best.1 {
            best = (x, f);
        }
        if moved < 1e-13 * r {
            break;
        }
        if stalls >= 5 {
            break;
        }
    }
    best
}

/// Deterministic start set: centroid, loop centroids, and a lattice over the
/// bounding box inflated by one ball radius.
pub fn start_points(region: &ArcRegion, r: f64, cfg: &SearchConfig) -> Vec<Point> {
    let mut pts = vec![region.centroid()];
    if region.loops.len() > 1 {
        pts.extend(region.loop_centroids());
    }
    let (lo, hi) = region.bounding_box();
    let pitch = cfg.pitch * r;
    let nx = (((hi.x - lo.x) + 2.0 * r) / pitch).floor() as usize + 1;
    let ny = (((hi.y - lo.y) + 2.0 * r) / pitch).floor() as usize + 1;
    let mut grid = Vec::with_capacity(nx * ny);
    let x0 = 0.5 * (lo.x + hi.x) - 0.5 * (nx - 1) as f64 * pitch;
    let y0 = 0.5 * (lo.y + hi.y) - 0.5 * (ny - 1) as f64 * pitch;
    for j in 0..ny {
        for i in 0..nx {
            grid.push(Point::new(x0 + i as f64 * pitch, y0 + j as f64 * pitch));
        }
    }
    if let Some(cap) = cfg.max_starts {
        if grid.len() > cap && cap > 0 {
            let stride = grid.len().div_ceil(cap);
            grid = grid.into_iter().step_by(stride).collect();
        }
    }
    pts.extend(grid);
    pts
}

/// Global minimization of `ψ` over ball centers.
pub fn optimal_balls(region: &ArcRegion, cfg: &SearchConfig) -> Result<AsymmetryResult> {
    region.check()?;
    let area = region.signed_area();
    if !(area > 0.0) {
        return Err(Error::Degenerate("region has zero area".into()));
    }
    let r = (area / PI).sqrt();
    let starts = start_points(region, r, cfg);
    let disjoint = area + PI * r * r;
    let mut results: Vec<(Point, f64)> = starts
        .par_iter()
        .map(|&s| {
            let v0 = psi_raw(region, s, r);
            if v0 >= disjoint * (1.0 - 1e-15) {
                return (s, v0);
            }
            let (c, v) = descend(region, s, r, cfg.max_iters);
            if v0 <= v {
                (s, v0)
            } else {
                (c, v)
            }
        })
        .collect();
    let best = results.iter().map(|p| p.1).fold(f64::INFINITY, f64::min);
    let vtol = cfg.value_tol * area;
    results.retain(|p| p.1 <= best + vtol);
    results.sort_by(|a, b| a.1.total_cmp(&b.1));
    let mut centers: Vec<(Point, f64)> = Vec::new();
    for (c, v) in results {
        if !centers.iter().any(|(q, _)| q.dist(c) < cfg.spatial_tol * r) {
            centers.push((c, v));
        }
    }
    centers.sort_by(|a, b| a.0.x.total_cmp(&b.0.x).then(a.0.y.total_cmp(&b.0.y)));
    Ok(AsymmetryResult {
        lambda: best / area,
        optimal_centers: centers.into_iter().map(|p| p.0).collect(),
        psi_at_optimum: best,
        radius: r,
        area,
    })
}

/// Fraenkel asymmetry with the ball center fixed by hand.
pub fn asymmetry_at(region: &ArcRegion, center: Point) -> Result<f64> {
    let a = region.area()?;
    Ok(psi(region, center)? / a)
}

/// `(P − 2√(π|Ω|)) / (2√(π|Ω|))`.
pub fn deficit(region: &ArcRegion) -> Result<f64> {
    let a = region.area()?;
    let p = region.perimeter()?;
    let pb = 2.0 * (PI * a).sqrt();
    let d = (p - pb) / pb;
    Ok(if d < 0.0 && d >= -1e-10 { 0.0 } else { d })
}

pub fn functional(region: &ArcRegion, cfg: &SearchConfig) -> Result<FunctionalResult> {
    let delta = deficit(region)?;
    let lambda = optimal_balls(region, cfg)?.lambda;
    assemble(delta, lambda, cfg.lambda_floor)
}

pub fn assemble(delta: f64, lambda: f64, floor: f64) -> Result<FunctionalResult> {
    if lambda <= floor {
        return Err(Error::NearBall(lambda));
    }
    Ok(FunctionalResult { delta, lambda, value: delta / (lambda * lambda) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lens_psi(d: f64) -> f64 {
        let l = 2.0 * (d / 2.0).acos() - (d / 2.0) * (4.0 - d * d).sqrt();
        2.0 * PI - 2.0 * l
    }

    #[test]
    fn psi_of_unit_disk() {
        let d = ArcRegion::disk(Point::default(), 1.0);
        assert!(psi(&d, Point::default()).unwrap().abs() < 1e-12);
        let want = 2.0 * PI / 3.0 + 3f64.sqrt();
        assert!((psi(&d, Point::new(1.0, 0.0)).unwrap() - want).abs() < 1e-12);
        assert!((psi(&d, Point::new(10.0, 0.0)).unwrap() - 2.0 * PI).abs() < 1e-12);
    }

    #[test]
    fn gradient_of_lens() {
        let disk = ArcRegion::disk(Point::default(), 1.0);
        for &d in &[0.3, 1.0, 1.7] {
            let (gx, gy) = psi_gradient(&disk, Point::new(d, 0.0)).unwrap();
            // dψ/dd = 2·sqrt(4 − d²)/... from the lens formula: d/dd lens = −sqrt(4−d²)
            let want = 2.0 * (4.0 - d * d).sqrt();
            assert!((gx - want).abs() < 1e-12, "{gx} vs {want}");
            assert!(gy.abs() < 1e-12);
            let h = 1e-6;
            let fd = (lens_psi(d + h) - lens_psi(d - h)) / (2.0 * h);
            assert!((fd - want).abs() < 1e-6);
        }
        assert_eq!(psi_gradient(&disk, Point::new(5.0, 0.0)).unwrap(), (0.0, 0.0));
    }

    #[test]
    fn disk_has_zero_asymmetry() {
        let d = ArcRegion::disk(Point::new(0.3, 0.2), 1.0);
        let res = optimal_balls(&d, &SearchConfig::default()).unwrap();
        assert!(res.lambda < 1e-9);
        assert_eq!(res.optimal_centers.len(), 1);
        assert!(res.optimal_centers[0].dist(Point::new(0.3, 0.2)) < 1e-6);
        assert!(matches!(functional(&d, &SearchConfig::default()), Err(Error::NearBall(_))));
    }

    #[test]
    fn square_deficit() {
        let s = ArcRegion::rectangle(0.0, 0.0, 1.0, 1.0);
        assert!((deficit(&s).unwrap() - (2.0 / PI.sqrt() - 1.0)).abs() < 1e-14);
        assert!(deficit(&ArcRegion::disk(Point::default(), 3.0)).unwrap().abs() < 1e-12);
    }
}
