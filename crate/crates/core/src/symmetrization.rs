//! Four-cap rearrangement of a region around its optimal ball.
//!
//! The ball boundary splits into the part inside `Ω` (length `γ_OUT`, it bounds
//! `Ω \ B`) and the part outside (length `γ_IN`, it bounds `B \ Ω`). The
//! rearranged set keeps both lengths and both areas but concentrates them into two
//! opposite outer caps on the x-axis and two opposite inner caps on the y-axis.

use crate::error::{Error, Result};
use crate::fraenkel::{optimal_balls, SearchConfig};
use crate::geometry::{clip_to_ball, Arc, ArcRegion, Ball, Edge, Point};
use crate::special::{g, h_inv, h_unchecked};
use serde::Serialize;
use std::f64::consts::{FRAC_PI_2, PI, TAU};

#[derive(Debug, Clone, Copy, Serialize)]
pub struct Decomposition {
    pub gamma_in: f64,
    pub gamma_out: f64,
    /// Length of region boundary running along the ball boundary.
    pub gamma_shared: f64,
    pub area_out: f64,
    pub area_in: f64,
    pub ball: Ball,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Outer,
    Inner,
}

#[derive(Debug, Clone)]
pub struct SymmetrizedSet {
    pub region: ArcRegion,
    pub ball: Ball,
    pub eta_out: f64,
    pub eta_in: f64,
    pub theta_out: f64,
    pub theta_in: f64,
    pub decomposition: Decomposition,
}

pub fn decompose(region: &ArcRegion, ball: &Ball) -> Result<Decomposition> {
    region.check()?;
    let clip = clip_to_ball(region, ball);
    if clip.tangency {
        return Err(Error::Transversality);
    }
    let r = ball.radius;
    let inside: f64 = clip.inside_arcs.iter().map(|(a, b)| r * (b - a)).sum();
    let gamma_in = (TAU * r - inside - clip.shared_length).max(0.0);
    Ok(Decomposition {
        gamma_in,
        gamma_out: TAU * r - gamma_in,
        gamma_shared: clip.shared_length,
        area_out: (region.signed_area() - clip.inter_area).max(0.0),
        area_in: (ball.area() - clip.inter_area).max(0.0),
        ball: *ball,
    })
}

/// Half-angle of the cap over a unit-ball chord of half-angle `eta` enclosing `area`
/// outside (outer) or inside (inner) the ball. A negative inner angle means the cap
/// curves into the ball.
pub fn solve_cap(eta: f64, area: f64, side: Side) -> Result<f64> {
    if !(eta > 0.0 && eta < FRAC_PI_2 + 1e-15) || !(area >= 0.0) {
        return Err(Error::Domain(format!("cap: eta {eta}, area {area}")));
    }
    let s2 = eta.sin().powi(2);
    let y = match side {
        Side::Outer => h_unchecked(eta) + area / s2,
        Side::Inner => h_unchecked(eta) - area / s2,
    };
    if side == Side::Inner && y <= -h_unchecked(PI - 1e-9) {
        return Err(Error::Infeasible(format!("inner cap area {area} too large for eta {eta}")));
    }
    h_inv(y)
}

/// Edge over the chord `p → q` (region on the left) with signed half-angle `theta`:
/// positive bulges to the right of the chord, negative to the left, zero is the chord.
pub fn cap_edge(p: Point, q: Point, theta: f64) -> Edge {
    if theta == 0.0 {
        return Edge::segment(p, q);
    }
    let d = q.sub(p);
    let c = 0.5 * d.norm();
    let right = Point::new(d.y, -d.x).scale(0.5 / c);
    let mid = p.add(q).scale(0.5);
    let t = theta.abs();
    let rho = c / t.sin();
    if theta > 0.0 {
        let center = mid.sub(right.scale(rho * t.cos()));
        Edge::Arc(Arc::new(center, rho, p.sub(center).angle(), 2.0 * t))
    } else {
        let center = mid.add(right.scale(rho * t.cos()));
        Edge::Arc(Arc::new(center, rho, p.sub(center).angle(), -2.0 * t))
    }
}

/// Doubly symmetric set: outer caps of ball half-angle `eta_out` centered on the
/// x-axis, inner caps of half-angle `eta_in` on the y-axis, and ball arcs filling
/// the remaining angle.
pub fn four_cap_region(ball: &Ball, eta_out: f64, theta_out: f64, eta_in: f64, theta_in: f64) -> Result<ArcRegion> {
    let beta = FRAC_PI_2 - eta_out - eta_in;
    if beta < -1e-12 || eta_out < 0.0 || eta_in < 0.0 {
        return Err(Error::Infeasible(format!("cap angles {eta_out} + {eta_in} exceed pi/2")));
    }
    if eta_out >= FRAC_PI_2 || eta_in >= FRAC_PI_2 {
        return Err(Error::Infeasible("a cap chord spans half the circle".into()));
    }
    let (o, r) = (ball.center, ball.radius);
    let at = |phi: f64| o.add(Point::polar(r, phi));
    let mut edges = Vec::new();
    for k in 0..2 {
        let base = k as f64 * PI;
        if eta_out > 0.0 {
            edges.push(cap_edge(at(base - eta_out), at(base + eta_out), theta_out));
        }
        if beta > 1e-14 {
            edges.push(Edge::Arc(Arc::new(o, r, base + eta_out, beta)));
        }
        if eta_in > 0.0 {
            let c = base + FRAC_PI_2;
            edges.push(cap_edge(at(c - eta_in), at(c + eta_in), theta_in));
        }
        if beta > 1e-14 {
            edges.push(Edge::Arc(Arc::new(o, r, base + FRAC_PI_2 + eta_in, beta)));
        }
    }
    if edges.is_empty() {
        return Ok(ball.to_region());
    }
    Ok(ArcRegion::single(edges))
}

/// Build the rearranged set from a decomposition.
pub fn rearrange(d: &Decomposition) -> Result<SymmetrizedSet> {
    let r = d.ball.radius;
    let eta_out = (d.gamma_out - d.gamma_shared) / (4.0 * r);
    let eta_in = d.gamma_in / (4.0 * r);
    let r2 = r * r;
    let theta_out = if eta_out > 0.0 {
        solve_cap(eta_out, 0.5 * d.area_out / r2, Side::Outer)?
    } else if d.area_out > 1e-12 * r2 {
        return Err(Error::Infeasible("outer area without boundary length".into()));
    } else {
        0.0
    };
    let theta_in = if eta_in > 0.0 {
        solve_cap(eta_in, 0.5 * d.area_in / r2, Side::Inner)?
    } else {
        0.0
    };
    let region = four_cap_region(&d.ball, eta_out, theta_out, eta_in, theta_in)?;
    Ok(SymmetrizedSet { region, ball: d.ball, eta_out, eta_in, theta_out, theta_in, decomposition: *d })
}

pub fn symmetrize(region: &ArcRegion, cfg: &SearchConfig) -> Result<SymmetrizedSet> {
    let res = optimal_balls(region, cfg)?;
    let ball = res.ball();
    if res.lambda <= cfg.lambda_floor {
        let d = Decomposition {
            gamma_in: 0.0,
            gamma_out: TAU * ball.radius,
            gamma_shared: TAU * ball.radius,
            area_out: 0.0,
            area_in: 0.0,
            ball,
        };
        return Ok(SymmetrizedSet {
            region: ball.to_region(),
            ball,
            eta_out: 0.0,
            eta_in: 0.0,
            theta_out: 0.0,
            theta_in: 0.0,
            decomposition: d,
        });
    }
    let mut last = Error::Transversality;
    for k in 0..8 {
        let phi = k as f64 * 0.25 * PI;
        let shift = if k == 0 { 0.0 } else { 1e-7 * ball.radius };
        let b = Ball::new(ball.center.add(Point::polar(shift, phi)), ball.radius);
        match decompose(region, &b) {
            Ok(d) => return rearrange(&d),
            Err(e) => last = e,
        }
    }
    Err(last)
}

/// Area of the outer cap region for a unit ball: `sin²η h(θ) − g(η)`.
pub fn cap_area(eta: f64, theta: f64) -> f64 {
    eta.sin().powi(2) * h_unchecked(theta) - g(eta)
}
