//! Deterministic SVG figures of arc regions with their optimal balls.

use crate::error::Result;
use crate::fraenkel::{optimal_balls, SearchConfig};
use crate::geometry::{clip_to_ball, crossings_from_clip, ArcRegion, Ball, Edge, Point};
use crate::symmetrization::SymmetrizedSet;
use std::f64::consts::PI;
use std::fmt::Write;

#[derive(Debug, Clone, Default)]
pub struct Annotations {
    /// Drawn dashed.
    pub balls: Vec<Ball>,
    /// Marked with dots, typically boundary crossings.
    pub points: Vec<Point>,
    /// Center of two dashed symmetry axes.
    pub axes: Option<Point>,
    pub title: Option<String>,
}

fn num(x: f64) -> String {
    let s = format!("{:.6}", x);
    if s == "-0.000000" {
        "0.000000".into()
    } else {
        s
    }
}

fn edge_path(e: &Edge, out: &mut String) {
    match e {
        Edge::Segment { to, .. } => {
            let _ = write!(out, " L {} {}", num(to.x), num(to.y));
        }
        Edge::Arc(a) => {
            let sweep_flag = u8::from(a.sweep > 0.0);
            // full turns are split since an SVG arc cannot close on itself
            let pieces = if a.sweep.abs() > PI { 2 } else { 1 };
            for k in 1..=pieces {
                let phi = a.start + a.sweep * k as f64 / pieces as f64;
                let p = a.at_angle(phi);
                let _ = write!(out, " A {r} {r} 0 0 {sweep_flag} {} {}", num(p.x), num(p.y), r = num(a.radius));
            }
        }
    }
}

/// Boundary points where the region passes in or out of the ball. Falls back to
/// the ends of shared arcs when the boundaries are not transversal.
pub fn crossing_points(region: &ArcRegion, ball: &Ball) -> Vec<Point> {
    let clip = clip_to_ball(region, ball);
    if let Ok(xs) = crossings_from_clip(&clip) {
        return xs.into_iter().map(|x| x.point).collect();
    }
    let mut pts: Vec<Point> = Vec::new();
    for lp in &clip.pieces {
        for (i, p) in lp.iter().enumerate() {
            let prev = &lp[(i + lp.len() - 1) % lp.len()];
            let q = p.edge.start_point();
            if prev.state != p.state && !pts.iter().any(|o| o.dist(q) < 1e-9) {
                pts.push(q);
            }
        }
    }
    pts
}

pub fn render_svg(region: &ArcRegion, ann: &Annotations) -> String {
    let (mut lo, mut hi) = region.bounding_box();
    for b in &ann.balls {
        lo = Point::new(lo.x.min(b.center.x - b.radius), lo.y.min(b.center.y - b.radius));
        hi = Point::new(hi.x.max(b.center.x + b.radius), hi.y.max(b.center.y + b.radius));
    }
    let extent = (hi.x - lo.x).max(hi.y - lo.y).max(1e-9);
    let pad = 0.08 * extent;
    let (x0, y0) = (lo.x - pad, lo.y - pad);
    let (w, h) = (hi.x - lo.x + 2.0 * pad, hi.y - lo.y + 2.0 * pad);
    let stroke = num(0.004 * extent);
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="600" height="{}" viewBox="{} {} {} {}">"#,
        (600.0 * h / w).round() as i64,
        num(x0),
        num(-(y0 + h)),
        num(w),
        num(h)
    );
    if let Some(t) = &ann.title {
        let esc = t.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;");
        let _ = writeln!(s, "<title>{esc}</title>");
    }
    // flip to mathematical orientation; sweep flag 1 is then counter-clockwise
    let _ = writeln!(s, r#"<g transform="scale(1,-1)">"#);
    let mut d = String::new();
    for lp in &region.loops {
        let Some(first) = lp.first() else { continue };
        let p = first.start_point();
        let _ = write!(d, "M {} {}", num(p.x), num(p.y));
        for e in lp {
            edge_path(e, &mut d);
        }
        d.push_str(" Z ");
    }
    let _ = writeln!(
        s,
        r##"<path d="{}" fill="#d9d9d9" fill-rule="evenodd" stroke="#000000" stroke-width="{stroke}"/>"##,
        d.trim_end()
    );
    let dash = format!("{},{}", num(0.02 * extent), num(0.012 * extent));
    for b in &ann.balls {
        let _ = writeln!(
            s,
            r##"<circle cx="{}" cy="{}" r="{}" fill="none" stroke="#1f4e9a" stroke-width="{stroke}" stroke-dasharray="{dash}"/>"##,
            num(b.center.x),
            num(b.center.y),
            num(b.radius)
        );
    }
    if let Some(c) = ann.axes {
        for (a, b) in [
            (Point::new(x0, c.y), Point::new(x0 + w, c.y)),
            (Point::new(c.x, y0), Point::new(c.x, y0 + h)),
        ] {
            let _ = writeln!(
                s,
                r##"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#7f7f7f" stroke-width="{stroke}" stroke-dasharray="{dash}"/>"##,
                num(a.x),
                num(a.y),
                num(b.x),
                num(b.y)
            );
        }
    }
    for p in &ann.points {
        let _ = writeln!(
            s,
            r##"<circle cx="{}" cy="{}" r="{}" fill="#c0392b"/>"##,
            num(p.x),
            num(p.y),
            num(0.012 * extent)
        );
    }
    s.push_str("</g>\n</svg>\n");
    s
}

/// Region with all its optimal balls and their crossing points.
pub fn render_with_optimal_balls(region: &ArcRegion, cfg: &SearchConfig) -> Result<String> {
    let res = optimal_balls(region, cfg)?;
    let balls: Vec<Ball> = res.optimal_centers.iter().map(|&c| Ball::new(c, res.radius)).collect();
    let mut points = Vec::new();
    for b in &balls {
        for p in crossing_points(region, b) {
            if !points.iter().any(|q: &Point| q.dist(p) < 1e-9) {
                points.push(p);
            }
        }
    }
    Ok(render_svg(region, &Annotations { balls, points, axes: None, title: None }))
}

/// Symmetrized set with its ball, crossings and symmetry axes.
pub fn render_symmetrized(sym: &SymmetrizedSet) -> String {
    let points = crossing_points(&sym.region, &sym.ball);
    render_svg(
        &sym.region,
        &Annotations { balls: vec![sym.ball], points, axes: Some(sym.ball.center), title: None },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disk_is_a_single_path_with_split_arc() {
        let d = ArcRegion::disk(Point::default(), 1.0);
        let svg = render_svg(&d, &Annotations::default());
        assert_eq!(svg.matches("<path").count(), 1);
        assert_eq!(svg.matches(" A ").count(), 2);
        assert_eq!(svg, render_svg(&d, &Annotations::default()));
    }

    #[test]
    fn lens_crossings_marked() {
        let d = ArcRegion::disk(Point::new(1.0, 0.0), 1.0);
        let pts = crossing_points(&d, &Ball::new(Point::default(), 1.0));
        assert_eq!(pts.len(), 2);
    }
}
