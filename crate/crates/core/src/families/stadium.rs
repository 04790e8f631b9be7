//! Stadia of area `π`: a `2L × 2r` rectangle capped by two half-disks of radius `r`.

use crate::error::Result;
use crate::fraenkel::{assemble, asymmetry_at, deficit, FunctionalResult};
use crate::geometry::{Arc, ArcRegion, Edge, Point};
use crate::optim::golden_section;
use std::f64::consts::{FRAC_PI_2, PI};

#[derive(Debug, Clone)]
pub struct StadiumConfig {
    pub lo: f64,
    pub hi: f64,
    pub tol: f64,
}

impl Default for StadiumConfig {
    fn default() -> Self {
        // r = 1 is the disk; keep the interval away from it
        StadiumConfig { lo: 0.2, hi: 0.95, tol: 1e-8 }
    }
}

/// Half-length of the straight part for cap radius `r` at area `π`.
pub fn stadium_half_length(r: f64) -> f64 {
    (PI - PI * r * r) / (4.0 * r)
}

pub fn stadium_construct(r: f64) -> Result<ArcRegion> {
    stadium_with(stadium_half_length(r), r)
}

pub fn stadium_with(l: f64, r: f64) -> Result<ArcRegion> {
    if !(r > 0.0 && l >= 0.0) {
        return Err(crate::Error::Domain(format!("stadium (L, r) = ({l}, {r})")));
    }
    let mut edges = Vec::new();
    if l > 0.0 {
        edges.push(Edge::segment(Point::new(-l, -r), Point::new(l, -r)));
    }
    edges.push(Edge::Arc(Arc::new(Point::new(l, 0.0), r, -FRAC_PI_2, PI)));
    if l > 0.0 {
        edges.push(Edge::segment(Point::new(l, r), Point::new(-l, r)));
    }
    edges.push(Edge::Arc(Arc::new(Point::new(-l, 0.0), r, FRAC_PI_2, PI)));
    Ok(ArcRegion::single(edges))
}

/// Quotient with the optimal ball pinned at the center of symmetry.
pub fn stadium_functional(r: f64) -> Result<FunctionalResult> {
    let s = stadium_construct(r)?;
    assemble(deficit(&s)?, asymmetry_at(&s, Point::default())?, 1e-6)
}

/// Golden-section search over the cap radius; returns `(r, F)`.
pub fn stadium_optimize(cfg: &StadiumConfig) -> Result<(f64, f64)> {
    let f = |r: f64| stadium_functional(r).map(|v| v.value).unwrap_or(f64::INFINITY);
    golden_section(f, cfg.lo, cfg.hi, cfg.tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_perimeter_and_area() {
        let r = 0.6;
        let l = stadium_half_length(r);
        let s = stadium_construct(r).unwrap();
        assert!((s.area().unwrap() - PI).abs() < 1e-12);
        assert!((s.perimeter().unwrap() - (4.0 * l + 2.0 * PI * r)).abs() < 1e-12);
        let want = (4.0 * l + 2.0 * PI * r) / (2.0 * PI) - 1.0;
        assert!((deficit(&s).unwrap() - want).abs() < 1e-12);
    }

    #[test]
    fn optimum_value() {
        let (r, v) = stadium_optimize(&StadiumConfig::default()).unwrap();
        assert!((v - 0.405585).abs() < 1e-3, "r = {r}, F = {v}");
    }
}
