//! Four-cap sets shrinking to the unit ball.

use super::FamilyReport;
use crate::error::{Error, Result};
use crate::geometry::{ArcRegion, Ball, Point};
use crate::special::f_defect;
use crate::symmetrization::{four_cap_region, solve_cap, Side};
use serde::{Deserialize, Serialize};
use std::f64::consts::{FRAC_PI_2, PI};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OvalParams {
    pub eta1: f64,
    pub eta2: f64,
    /// A quarter of `|Ω Δ B|`.
    pub eps: f64,
}

impl OvalParams {
    pub fn new(eta1: f64, eta2: f64, eps: f64) -> Self {
        OvalParams { eta1, eta2, eps }
    }

    fn check(&self) -> Result<()> {
        let ok = |e: f64| e > 0.0 && e <= FRAC_PI_2;
        if !ok(self.eta1) || !ok(self.eta2) || self.eta1 + self.eta2 > FRAC_PI_2 + 1e-15 {
            return Err(Error::Domain(format!("oval angles ({}, {})", self.eta1, self.eta2)));
        }
        if self.eps == 0.0 {
            return Err(Error::Degenerate("eps = 0 is the ball".into()));
        }
        if !(self.eps > 0.0) {
            return Err(Error::Domain(format!("eps {}", self.eps)));
        }
        Ok(())
    }

    /// Cap half-angles `(θ₁, θ₂)`; `θ₂ < 0` means the inner caps curve inward.
    pub fn thetas(&self) -> Result<(f64, f64)> {
        self.check()?;
        Ok((solve_cap(self.eta1, self.eps, Side::Outer)?, solve_cap(self.eta2, self.eps, Side::Inner)?))
    }
}

pub fn oval_metrics(p: &OvalParams) -> Result<FamilyReport> {
    let (t1, t2) = p.thetas()?;
    let s1 = p.eta1.sin();
    let s2 = p.eta2.sin();
    let delta = 2.0 / PI * (f_defect(p.eta1, p.eps / (s1 * s1))? + f_defect(p.eta2, -p.eps / (s2 * s2))?);
    let lambda = 4.0 * p.eps / PI;
    let mut rep = FamilyReport::new("oval", delta, lambda);
    rep.r0 = Some(s1 / t1.sin());
    rep.r1 = Some(s2 / t2.sin());
    rep.area = Some(PI);
    rep.perimeter = Some(2.0 * PI * (1.0 + delta));
    Ok(rep)
}

pub fn oval_construct(p: &OvalParams) -> Result<ArcRegion> {
    let (t1, t2) = p.thetas()?;
    four_cap_region(&Ball::new(Point::default(), 1.0), p.eta1, t1, p.eta2, t2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fraenkel::asymmetry_at;
    use crate::special::limit_case_a;

    #[test]
    fn approaches_the_limit_constant() {
        let lim = limit_case_a(PI / 4.0, PI / 4.0).unwrap();
        let mut prev = f64::INFINITY;
        for &eps in &[1e-2, 1e-3, 1e-4] {
            let v = oval_metrics(&OvalParams::new(PI / 4.0, PI / 4.0, eps)).unwrap().value.unwrap();
            let err = (v - lim).abs();
            assert!(err < prev);
            prev = err;
        }
        assert!(prev < 1e-3);
    }

    #[test]
    fn build_and_measure() {
        let p = OvalParams::new(PI / 3.0, PI / 6.0, 1e-3);
        let rep = oval_metrics(&p).unwrap();
        let r = oval_construct(&p).unwrap();
        assert!((r.area().unwrap() - PI).abs() < 1e-8);
        let d = r.perimeter().unwrap() / (2.0 * PI) - 1.0;
        assert!((d - rep.delta).abs() < 1e-8);
        assert!((asymmetry_at(&r, Point::default()).unwrap() - rep.lambda).abs() < 1e-10);
    }

    #[test]
    fn zero_eps_is_degenerate() {
        assert!(matches!(oval_metrics(&OvalParams::new(0.5, 0.5, 0.0)), Err(Error::Degenerate(_))));
    }
}
