//! Regions bounded by circular arcs and straight segments.

mod clip;
mod shape_io;
mod validate;

pub use clip::{
    circle_boundary_intersections, clip_to_ball, crossings_from_clip, PieceState, Piece, intersection_area, point_in_region, symm_diff_area,
    BallClip, Crossing,
};
pub use shape_io::{region_from_json, region_to_json, ShapeDoc};
pub use validate::{validate, Violation};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::f64::consts::{PI, TAU};

pub const CLOSURE_TOL: f64 = 1e-9;
pub const TANGENCY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }
    pub fn polar(r: f64, phi: f64) -> Self {
        Point::new(r * phi.cos(), r * phi.sin())
    }
    pub fn dist(self, o: Point) -> f64 {
        (self.x - o.x).hypot(self.y - o.y)
    }
    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }
    pub fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
    pub fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
    pub fn scale(self, s: f64) -> Point {
        Point::new(self.x * s, self.y * s)
    }
    pub fn dot(self, o: Point) -> f64 {
        self.x * o.x + self.y * o.y
    }
    pub fn cross(self, o: Point) -> f64 {
        self.x * o.y - self.y * o.x
    }
    pub fn rotate(self, a: f64) -> Point {
        let (s, c) = a.sin_cos();
        Point::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }
    pub fn angle(self) -> f64 {
        self.y.atan2(self.x)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Ball {
    pub center: Point,
    pub radius: f64,
}

impl Ball {
    pub fn new(center: Point, radius: f64) -> Self {
        Ball { center, radius }
    }
    pub fn area(&self) -> f64 {
        PI * self.radius * self.radius
    }
    /// The ball as a region: one full counter-clockwise arc.
    pub fn to_region(&self) -> ArcRegion {
        ArcRegion::single(vec![Edge::Arc(Arc::new(self.center, self.radius, 0.0, TAU))])
    }
}

/// Circular arc traversed from `start` through the signed angle `sweep`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Arc {
    pub center: Point,
    pub radius: f64,
    pub start: f64,
    pub sweep: f64,
}

impl Arc {
    pub fn new(center: Point, radius: f64, start: f64, sweep: f64) -> Self {
        Arc { center, radius, start, sweep }
    }

    /// Arc from `a` to `b` on the circle `(center, radius)`, turning the given way.
    pub fn between(center: Point, radius: f64, a: Point, b: Point, ccw: bool) -> Self {
        let s = a.sub(center).angle();
        let e = b.sub(center).angle();
        let sweep = if ccw { norm_pos(e - s) } else { -norm_pos(s - e) };
        Arc::new(center, radius, s, sweep)
    }

    pub fn end(&self) -> f64 {
        self.start + self.sweep
    }
    pub fn at_angle(&self, phi: f64) -> Point {
        self.center.add(Point::polar(self.radius, phi))
    }
    pub fn ccw(&self) -> bool {
        self.sweep > 0.0
    }

    /// Parameter in `[0, 1]` of the point at polar angle `phi`, if it lies on the arc.
    pub fn param_of_angle(&self, phi: f64, tol: f64) -> Option<f64> {
        let off = if self.sweep > 0.0 {
            norm_pos0(phi - self.start)
        } else {
            norm_pos0(self.start - phi)
        };
        let span = self.sweep.abs();
        let slack = tol / self.radius;
        if off <= span + slack {
            Some((off / span).min(1.0))
        } else if off >= TAU - slack {
            Some(0.0)
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Edge {
    Arc(Arc),
    Segment { from: Point, to: Point },
}

impl Edge {
    pub fn segment(from: Point, to: Point) -> Edge {
        Edge::Segment { from, to }
    }

    pub fn start_point(&self) -> Point {
        self.point_at(0.0)
    }
    pub fn end_point(&self) -> Point {
        self.point_at(1.0)
    }

    pub fn point_at(&self, s: f64) -> Point {
        match self {
            Edge::Arc(a) => a.at_angle(a.start + s * a.sweep),
            Edge::Segment { from, to } => from.add(to.sub(*from).scale(s)),
        }
    }

    /// Unit tangent in the direction of travel.
    pub fn tangent_at(&self, s: f64) -> Point {
        match self {
            Edge::Arc(a) => {
                let phi = a.start + s * a.sweep;
                let sg = a.sweep.signum();
                Point::new(-phi.sin() * sg, phi.cos() * sg)
            }
            Edge::Segment { from, to } => {
                let d = to.sub(*from);
                d.scale(1.0 / d.norm())
            }
        }
    }

    pub fn length(&self) -> f64 {
        match self {
            Edge::Arc(a) => a.radius * a.sweep.abs(),
            Edge::Segment { from, to } => from.dist(*to),
        }
    }

    /// Sub-edge between parameters `s0 < s1`.
    pub fn sub_edge(&self, s0: f64, s1: f64) -> Edge {
        match self {
            Edge::Arc(a) => Edge::Arc(Arc::new(a.center, a.radius, a.start + s0 * a.sweep, (s1 - s0) * a.sweep)),
            Edge::Segment { .. } => Edge::Segment { from: self.point_at(s0), to: self.point_at(s1) },
        }
    }

    /// `½∮(x dy − y dx)` over the edge.
    pub fn green(&self) -> f64 {
        self.green_about(Point::default())
    }

    /// `green` with coordinates taken relative to `o`; loop sums agree for any `o`.
    pub fn green_about(&self, o: Point) -> f64 {
        match self {
            Edge::Arc(a) => arc_green(a.center.sub(o), a.radius, a.start, a.end()),
            Edge::Segment { from, to } => 0.5 * from.sub(o).cross(to.sub(o)),
        }
    }

    /// `(∮ x²/2 dy, −∮ y²/2 dx)`: first moments of the enclosed area.
    fn moments(&self) -> (f64, f64) {
        match self {
            Edge::Segment { from: p, to: q } => (
                (q.y - p.y) * (p.x * p.x + p.x * q.x + q.x * q.x) / 6.0,
                -(q.x - p.x) * (p.y * p.y + p.y * q.y + q.y * q.y) / 6.0,
            ),
            Edge::Arc(a) => {
                let (cx, cy, r) = (a.center.x, a.center.y, a.radius);
                let fx = |p: f64| {
                    let s = p.sin();
                    cx * cx * s + 2.0 * cx * r * (p / 2.0 + (2.0 * p).sin() / 4.0) + r * r * (s - s * s * s / 3.0)
                };
                let fy = |p: f64| {
                    let c = p.cos();
                    -cy * cy * c + 2.0 * cy * r * (p / 2.0 - (2.0 * p).sin() / 4.0) + r * r * (-c + c * c * c / 3.0)
                };
                let (p0, p1) = (a.start, a.end());
                (0.5 * r * (fx(p1) - fx(p0)), 0.5 * r * (fy(p1) - fy(p0)))
            }
        }
    }

    pub fn transform(&self, rotation: f64, translation: Point) -> Edge {
        match self {
            Edge::Arc(a) => Edge::Arc(Arc::new(
                a.center.rotate(rotation).add(translation),
                a.radius,
                a.start + rotation,
                a.sweep,
            )),
            Edge::Segment { from, to } => Edge::Segment {
                from: from.rotate(rotation).add(translation),
                to: to.rotate(rotation).add(translation),
            },
        }
    }

    pub fn scaled(&self, k: f64) -> Edge {
        match self {
            Edge::Arc(a) => Edge::Arc(Arc::new(a.center.scale(k), a.radius * k, a.start, a.sweep)),
            Edge::Segment { from, to } => Edge::Segment { from: from.scale(k), to: to.scale(k) },
        }
    }

    fn bbox(&self) -> (Point, Point) {
        let p = self.start_point();
        let q = self.end_point();
        let mut lo = Point::new(p.x.min(q.x), p.y.min(q.y));
        let mut hi = Point::new(p.x.max(q.x), p.y.max(q.y));
        if let Edge::Arc(a) = self {
            for k in 0..4 {
                let phi = k as f64 * PI / 2.0;
                if a.param_of_angle(phi, 0.0).is_some() {
                    let e = a.at_angle(phi);
                    lo = Point::new(lo.x.min(e.x), lo.y.min(e.y));
                    hi = Point::new(hi.x.max(e.x), hi.y.max(e.y));
                }
            }
        }
        (lo, hi)
    }
}

pub(crate) fn arc_green(c: Point, r: f64, a0: f64, a1: f64) -> f64 {
    0.5 * (r * r * (a1 - a0) + r * (c.x * (a1.sin() - a0.sin()) - c.y * (a1.cos() - a0.cos())))
}

/// Angle reduced to `(0, 2π]`.
pub fn norm_pos(a: f64) -> f64 {
    let r = a.rem_euclid(TAU);
    if r == 0.0 {
        TAU
    } else {
        r
    }
}

/// Angle reduced to `[0, 2π)`.
pub fn norm_pos0(a: f64) -> f64 {
    let r = a.rem_euclid(TAU);
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// A closed region: one or more counter-clockwise loops of edges.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ArcRegion {
    pub loops: Vec<Vec<Edge>>,
}

impl ArcRegion {
    pub fn new(loops: Vec<Vec<Edge>>) -> Self {
        ArcRegion { loops }
    }
    pub fn single(edges: Vec<Edge>) -> Self {
        ArcRegion { loops: vec![edges] }
    }

    pub fn disk(center: Point, radius: f64) -> Self {
        Ball::new(center, radius).to_region()
    }

    /// Axis-aligned rectangle `[x0, x1] × [y0, y1]`.
    pub fn rectangle(x0: f64, y0: f64, x1: f64, y1: f64) -> Self {
        let p = [Point::new(x0, y0), Point::new(x1, y0), Point::new(x1, y1), Point::new(x0, y1)];
        ArcRegion::single((0..4).map(|i| Edge::segment(p[i], p[(i + 1) % 4])).collect())
    }

    /// Polygon through the given vertices, counter-clockwise.
    pub fn polygon(pts: &[Point]) -> Self {
        let n = pts.len();
        ArcRegion::single((0..n).map(|i| Edge::segment(pts[i], pts[(i + 1) % n])).collect())
    }

    pub fn edges(&self) -> impl Iterator<Item = &Edge> {
        self.loops.iter().flatten()
    }

    pub fn signed_area(&self) -> f64 {
        (0..self.loops.len()).map(|i| self.loop_area(i)).sum()
    }

    /// Taken about the loop's first vertex so far-off loops keep their precision.
    pub fn loop_area(&self, i: usize) -> f64 {
        let Some(first) = self.loops[i].first() else { return 0.0 };
        let o = first.start_point();
        self.loops[i].iter().map(|e| e.green_about(o)).sum()
    }

    /// Area by Green's theorem. Fails on a structurally invalid region.
    pub fn area(&self) -> Result<f64> {
        self.check()?;
        Ok(self.signed_area())
    }

    pub fn perimeter(&self) -> Result<f64> {
        self.check()?;
        Ok(self.edges().map(Edge::length).sum())
    }

    /// Cheap structural check: non-empty loops, closure, positive loop areas.
    pub fn check(&self) -> Result<()> {
        if self.loops.is_empty() || self.loops.iter().any(Vec::is_empty) {
            return Err(Error::Structure("empty loop".into()));
        }
        for (li, lp) in self.loops.iter().enumerate() {
            for (i, e) in lp.iter().enumerate() {
                let next = &lp[(i + 1) % lp.len()];
                let gap = e.end_point().dist(next.start_point());
                if gap > CLOSURE_TOL * (1.0 + e.end_point().norm()) {
                    return Err(Error::Structure(format!("loop {li} open after edge {i} (gap {gap:e})")));
                }
                if let Edge::Arc(a) = e {
                    if !(a.radius > 0.0) || a.sweep == 0.0 || a.sweep.abs() > TAU + 1e-12 {
                        return Err(Error::Structure(format!("loop {li} edge {i}: bad arc")));
                    }
                }
            }
            if !(self.loop_area(li) > 0.0) {
                return Err(Error::Structure(format!("loop {li} has non-positive area")));
            }
        }
        Ok(())
    }

    pub fn centroid(&self) -> Point {
        centroid_of(self.edges())
    }

    pub fn loop_centroids(&self) -> Vec<Point> {
        self.loops.iter().map(|l| centroid_of(l.iter())).collect()
    }

    pub fn bounding_box(&self) -> (Point, Point) {
        let mut lo = Point::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for e in self.edges() {
            let (a, b) = e.bbox();
            lo = Point::new(lo.x.min(a.x), lo.y.min(a.y));
            hi = Point::new(hi.x.max(b.x), hi.y.max(b.y));
        }
        (lo, hi)
    }

    /// Rotation about the origin followed by a translation.
    pub fn rigid_transform(&self, rotation: f64, translation: Point) -> ArcRegion {
        ArcRegion::new(
            self.loops
                .iter()
                .map(|l| l.iter().map(|e| e.transform(rotation, translation)).collect())
                .collect(),
        )
    }

    pub fn scaled(&self, k: f64) -> ArcRegion {
        ArcRegion::new(self.loops.iter().map(|l| l.iter().map(|e| e.scaled(k)).collect()).collect())
    }

    /// Reflection across the x-axis, loops re-oriented counter-clockwise.
    pub fn reflect_x(&self) -> ArcRegion {
        ArcRegion::new(
            self.loops
                .iter()
                .map(|l| {
                    l.iter()
                        .rev()
                        .map(|e| match e {
                            Edge::Arc(a) => Edge::Arc(Arc::new(
                                Point::new(a.center.x, -a.center.y),
                                a.radius,
                                -(a.start + a.sweep),
                                a.sweep,
                            )),
                            Edge::Segment { from, to } => Edge::Segment {
                                from: Point::new(to.x, -to.y),
                                to: Point::new(from.x, -from.y),
                            },
                        })
                        .collect()
                })
                .collect(),
        )
    }

    /// All edge endpoints, loop by loop.
    pub fn vertices(&self) -> Vec<Point> {
        self.edges().map(Edge::start_point).collect()
    }
}

fn centroid_of<'a>(edges: impl Iterator<Item = &'a Edge>) -> Point {
    let (mut a, mut mx, mut my) = (0.0, 0.0, 0.0);
    for e in edges {
        a += e.green();
        let (x, y) = e.moments();
        mx += x;
        my += y;
    }
    Point::new(mx / a, my / a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn half_circles() -> ArcRegion {
        let c = Point::new(0.0, 0.0);
        ArcRegion::single(vec![Edge::Arc(Arc::new(c, 1.0, 0.0, PI)), Edge::Arc(Arc::new(c, 1.0, PI, PI))])
    }

    #[test]
    fn disk_area_perimeter() {
        let d = ArcRegion::disk(Point::new(0.3, -1.0), 2.0);
        assert!((d.area().unwrap() - 4.0 * PI).abs() < 1e-12);
        assert!((d.perimeter().unwrap() - 4.0 * PI).abs() < 1e-12);
        assert!((half_circles().area().unwrap() - PI).abs() < 1e-14);
    }

    #[test]
    fn square_area_perimeter() {
        let s = ArcRegion::rectangle(0.0, 0.0, 1.0, 1.0);
        assert!((s.area().unwrap() - 1.0).abs() < 1e-12);
        assert!((s.perimeter().unwrap() - 4.0).abs() < 1e-12);
    }

    #[test]
    fn centroids() {
        let s = ArcRegion::rectangle(1.0, 2.0, 3.0, 3.0);
        let c = s.centroid();
        assert!((c.x - 2.0).abs() < 1e-14 && (c.y - 2.5).abs() < 1e-14);
        let d = ArcRegion::disk(Point::new(-0.4, 0.7), 0.3);
        let c = d.centroid();
        assert!((c.x + 0.4).abs() < 1e-14 && (c.y - 0.7).abs() < 1e-14);
        // upper half disk: centroid height 4/(3π)
        let o = Point::new(0.0, 0.0);
        let hd = ArcRegion::single(vec![
            Edge::Arc(Arc::new(o, 1.0, 0.0, PI)),
            Edge::segment(Point::new(-1.0, 0.0), Point::new(1.0, 0.0)),
        ]);
        let c = hd.centroid();
        assert!(c.x.abs() < 1e-14 && (c.y - 4.0 / (3.0 * PI)).abs() < 1e-14);
    }

    #[test]
    fn bbox_of_disk() {
        let (lo, hi) = ArcRegion::disk(Point::new(1.0, 1.0), 2.0).bounding_box();
        assert!((lo.x + 1.0).abs() < 1e-12 && (hi.y - 3.0).abs() < 1e-12);
    }

    #[test]
    fn transform_preserves_area() {
        let s = ArcRegion::rectangle(0.0, 0.0, 1.0, 1.0);
        let t = s.rigid_transform(PI / 2.0, Point::new(0.0, 0.0));
        assert!((t.area().unwrap() - 1.0).abs() < 1e-12);
        assert_eq!(s.rigid_transform(0.0, Point::default()), s);
        let r = half_circles().reflect_x();
        assert!((r.area().unwrap() - PI).abs() < 1e-14);
    }

    #[test]
    fn open_loop_rejected() {
        let c = Point::new(0.0, 0.0);
        let bad = ArcRegion::single(vec![
            Edge::Arc(Arc::new(c, 1.0, 0.0, PI)),
            Edge::Arc(Arc::new(c, 1.0, PI + 1e-3, PI - 1e-3)),
        ]);
        assert!(matches!(bad.area(), Err(Error::Structure(_))));
    }

    #[test]
    fn arc_between_and_params() {
        let a = Arc::between(Point::new(0.0, 0.0), 1.0, Point::new(1.0, 0.0), Point::new(0.0, 1.0), true);
        assert!((a.sweep - PI / 2.0).abs() < 1e-15);
        let b = Arc::between(Point::new(0.0, 0.0), 1.0, Point::new(1.0, 0.0), Point::new(0.0, 1.0), false);
        assert!((b.sweep + 3.0 * PI / 2.0).abs() < 1e-15);
        assert!((a.param_of_angle(PI / 4.0, 0.0).unwrap() - 0.5).abs() < 1e-15);
        assert!(a.param_of_angle(PI, 0.0).is_none());
        assert!((b.param_of_angle(PI, 0.0).unwrap() - 2.0 / 3.0).abs() < 1e-15);
    }
}
