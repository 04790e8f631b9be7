use super::{norm_pos0, Arc, ArcRegion, Edge, Point, CLOSURE_TOL};
use serde::Serialize;
use std::f64::consts::TAU;

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    EmptyLoop { loop_index: usize },
    BadEdge { loop_index: usize, edge: usize, reason: String },
    OpenLoop { loop_index: usize, edge: usize, gap: f64 },
    SelfIntersection { first: (usize, usize), second: (usize, usize), at: (f64, f64) },
    NegativeArea { loop_index: usize, area: f64 },
}

/// Structural diagnostics. An empty list means the region is valid.
pub fn validate(region: &ArcRegion) -> Vec<Violation> {
    let mut v = Vec::new();
    if region.loops.is_empty() {
        v.push(Violation::EmptyLoop { loop_index: 0 });
        return v;
    }
    for (li, lp) in region.loops.iter().enumerate() {
        if lp.is_empty() {
            v.push(Violation::EmptyLoop { loop_index: li });
            continue;
        }
        for (i, e) in lp.iter().enumerate() {
            match e {
                Edge::Arc(a) => {
                    if !(a.radius > 0.0 && a.radius.is_finite()) {
                        v.push(bad(li, i, "non-positive radius"));
                    } else if !(a.sweep != 0.0 && a.sweep.abs() <= TAU + 1e-12) {
                        v.push(bad(li, i, "sweep outside (0, 2pi]"));
                    }
                }
                Edge::Segment { from, to } => {
                    if from.dist(*to) <= CLOSURE_TOL {
                        v.push(bad(li, i, "zero-length segment"));
                    }
                }
            }
            let next = &lp[(i + 1) % lp.len()];
            let gap = e.end_point().dist(next.start_point());
            if gap > CLOSURE_TOL * (1.0 + e.end_point().norm()) {
                v.push(Violation::OpenLoop { loop_index: li, edge: i, gap });
            }
        }
        let area = region.loop_area(li);
        if !(area > 0.0) {
            v.push(Violation::NegativeArea { loop_index: li, area });
        }
    }
    if v.iter().any(|x| !matches!(x, Violation::NegativeArea { .. })) {
        return v;
    }
    let all: Vec<(usize, usize, &Edge)> = region
        .loops
        .iter()
        .enumerate()
        .flat_map(|(li, l)| l.iter().enumerate().map(move |(i, e)| (li, i, e)))
        .collect();
    for a in 0..all.len() {
        for b in a + 1..all.len() {
            let (l1, i1, e1) = all[a];
            let (l2, i2, e2) = all[b];
            let n = region.loops[l1].len();
            let next = l1 == l2 && (i1 + 1) % n == i2;
            let prev = l1 == l2 && (i2 + 1) % n == i1;
            for (s, t, p) in edge_pairs(e1, e2) {
                let tol = 1e-9;
                // tangent joints put numerical roots about sqrt(eps) away from the shared vertex
                let near = |q: Point| p.dist(q) <= 1e-7 * (1.0 + q.norm());
                let joint = (next && ((s > 1.0 - tol && t < tol) || near(e1.end_point())))
                    || (prev && ((s < tol && t > 1.0 - tol) || near(e1.start_point())));
                if !joint {
                    v.push(Violation::SelfIntersection { first: (l1, i1), second: (l2, i2), at: (p.x, p.y) });
                    break;
                }
            }
        }
    }
    v
}

fn bad(loop_index: usize, edge: usize, reason: &str) -> Violation {
    Violation::BadEdge { loop_index, edge, reason: reason.into() }
}

/// Intersections `(s, t, point)` between two edges, with overlaps reported by their endpoints.
fn edge_pairs(e1: &Edge, e2: &Edge) -> Vec<(f64, f64, Point)> {
    let mut out = Vec::new();
    let tol = 1e-9;
    match (e1, e2) {
        (Edge::Segment { from: p, to: q }, Edge::Segment { from: r, to: s }) => {
            let d1 = q.sub(*p);
            let d2 = s.sub(*r);
            let den = d1.cross(d2);
            let w = r.sub(*p);
            if den.abs() < 1e-14 * d1.norm() * d2.norm() {
                if (w.cross(d1)).abs() > tol * d1.norm() {
                    return out;
                }
                // collinear: overlap test along d1
                let l2 = d1.dot(d1);
                let t0 = w.dot(d1) / l2;
                let t1 = s.sub(*p).dot(d1) / l2;
                let (lo, hi) = (t0.min(t1).max(0.0), t0.max(t1).min(1.0));
                if hi - lo > tol {
                    out.push((0.5 * (lo + hi), 0.5, p.add(d1.scale(0.5 * (lo + hi)))));
                } else if hi - lo > -tol {
                    let sp = 0.5 * (lo + hi);
                    let pt = p.add(d1.scale(sp));
                    out.push((sp, project_seg(r, s, pt), pt));
                }
                return out;
            }
            let a = w.cross(d2) / den;
            let b = w.cross(d1) / den;
            if (-tol..=1.0 + tol).contains(&a) && (-tol..=1.0 + tol).contains(&b) {
                out.push((a, b, p.add(d1.scale(a))));
            }
        }
        (Edge::Segment { from, to }, Edge::Arc(arc)) => {
            for (s, pt) in seg_circle(*from, *to, arc.center, arc.radius) {
                if let Some(t) = arc.param_of_angle(pt.sub(arc.center).angle(), tol) {
                    out.push((s, t, pt));
                }
            }
        }
        (Edge::Arc(_), Edge::Segment { .. }) => {
            for (s, t, p) in edge_pairs(e2, e1) {
                out.push((t, s, p));
            }
        }
        (Edge::Arc(a1), Edge::Arc(a2)) => arc_arc(a1, a2, tol, &mut out),
    }
    out
}

fn project_seg(r: &Point, s: &Point, p: Point) -> f64 {
    let d = s.sub(*r);
    p.sub(*r).dot(d) / d.dot(d)
}

fn seg_circle(p: Point, q: Point, c: Point, r: f64) -> Vec<(f64, Point)> {
    let d = q.sub(p);
    let f = p.sub(c);
    let a = d.dot(d);
    let b = 2.0 * f.dot(d);
    let cc = f.dot(f) - r * r;
    let disc = b * b - 4.0 * a * cc;
    let tol = 1e-9;
    let mut out = Vec::new();
    if disc < -tol * a {
        return out;
    }
    let sq = disc.max(0.0).sqrt();
    for s in [(-b - sq) / (2.0 * a), (-b + sq) / (2.0 * a)] {
        if (-tol..=1.0 + tol).contains(&s) {
            out.push((s, p.add(d.scale(s))));
        }
    }
    if sq == 0.0 {
        out.truncate(1);
    }
    out
}

fn arc_arc(a1: &Arc, a2: &Arc, tol: f64, out: &mut Vec<(f64, f64, Point)>) {
    let d = a2.center.sub(a1.center);
    let dn = d.norm();
    if dn < tol && (a1.radius - a2.radius).abs() < tol {
        let (s1, w1) = ccw_range(a1);
        let (s2, w2) = ccw_range(a2);
        let o12 = norm_pos0(s2 - s1);
        let o21 = norm_pos0(s1 - s2);
        let ov_a = if o12 < w1 { (w1 - o12).min(w2) } else { 0.0 };
        let ov_b = if o21 < w2 { (w2 - o21).min(w1) } else { 0.0 };
        if ov_a.max(ov_b) > tol {
            let phi = if ov_a >= ov_b { s2 + 0.5 * ov_a } else { s1 + 0.5 * ov_b };
            out.push((0.5, 0.5, a1.at_angle(phi)));
        } else {
            for phi in [s1, s1 + w1, s2, s2 + w2] {
                if let (Some(s), Some(t)) = (a1.param_of_angle(phi, tol), a2.param_of_angle(phi, tol)) {
                    if !out.iter().any(|o: &(f64, f64, Point)| (o.0 - s).abs() < tol) {
                        out.push((s, t, a1.at_angle(phi)));
                    }
                }
            }
        }
        return;
    }
    if dn < tol || dn > a1.radius + a2.radius + tol || dn < (a1.radius - a2.radius).abs() - tol {
        return;
    }
    let x = ((dn * dn + a1.radius * a1.radius - a2.radius * a2.radius) / (2.0 * dn * a1.radius)).clamp(-1.0, 1.0);
    let delta = x.acos();
    let base = d.angle();
    let phis: &[f64] = if delta < 1e-12 { &[base] } else { &[base - delta, base + delta] };
    for &phi in phis {
        let p = a1.at_angle(phi);
        if let (Some(s), Some(t)) = (a1.param_of_angle(phi, tol), a2.param_of_angle(p.sub(a2.center).angle(), tol)) {
            out.push((s, t, p));
        }
    }
}

fn ccw_range(a: &Arc) -> (f64, f64) {
    if a.sweep > 0.0 {
        (norm_pos0(a.start), a.sweep)
    } else {
        (norm_pos0(a.end()), -a.sweep)
    }
}
