//! Numerical evidence for the region lemmas excluding one-ball minimizers.
//!
//! Sign lemmas (on `𝒜₀ − 𝒜₁`, the non-connected area residual, `𝒜₁` or `Φ`) are
//! checked on a uniform `(θ, α)` grid. Lemmas on `𝓕` or `Q` concern minimizers,
//! which have area `π`; they are checked on the curve where the area constraint
//! holds, found for each grid value of `α` by a sign scan in `θ`. Curve points
//! violating the accompanying inequality (`𝒜₀ ≤ π/N`, resp. `λ < 2`) are not
//! admissible and are skipped.

use super::rotsym::{
    alpha_root, connected_metrics, connected_residual, nonconnected_metrics, nonconnected_residual, phi, pieces,
    RotSymParams,
};
use super::FamilyReport;
use crate::error::{Error, Result};
use crate::optim::scan_roots;
use rayon::prelude::*;
use serde::Serialize;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

const INSET: f64 = 1e-4;
const THRESHOLD: f64 = 0.406;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LemmaId {
    L44,
    L45,
    L47,
    L48,
    L49,
    L411i,
    L411ii,
    L412(u8),
    L413,
    L415,
    L416,
    L417,
    L418,
    L419(u8),
}

impl LemmaId {
    pub fn all() -> Vec<LemmaId> {
        use LemmaId::*;
        let mut v = vec![L44, L45, L47, L48, L49, L411i, L411ii];
        v.extend((1..=5).map(L412));
        v.extend([L413, L415, L416, L417, L418]);
        v.extend((1..=5).map(L419));
        v
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LemmaId::L411i => write!(f, "L411(i)"),
            LemmaId::L411ii => write!(f, "L411(ii)"),
            LemmaId::L412(k) => write!(f, "L412({k})"),
            LemmaId::L419(k) => write!(f, "L419({k})"),
            other => write!(f, "{other:?}"),
        }
    }
}

impl FromStr for LemmaId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let key: String = s.chars().filter(|c| c.is_ascii_alphanumeric()).collect::<String>().to_ascii_uppercase();
        let id = match key.as_str() {
            "L44" => LemmaId::L44,
            "L45" => LemmaId::L45,
            "L47" => LemmaId::L47,
            "L48" => LemmaId::L48,
            "L49" => LemmaId::L49,
            "L411I" => LemmaId::L411i,
            "L411II" => LemmaId::L411ii,
            "L413" => LemmaId::L413,
            "L415" => LemmaId::L415,
            "L416" => LemmaId::L416,
            "L417" => LemmaId::L417,
            "L418" => LemmaId::L418,
            k if k.len() == 5 && (k.starts_with("L412") || k.starts_with("L419")) => {
                let d = k.as_bytes()[4];
                if !(b'1'..=b'5').contains(&d) {
                    return Err(Error::Config(format!("unknown lemma {s}")));
                }
                if k.starts_with("L412") {
                    LemmaId::L412(d - b'0')
                } else {
                    LemmaId::L419(d - b'0')
                }
            }
            _ => return Err(Error::Config(format!("unknown lemma {s}"))),
        };
        Ok(id)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Quantity {
    ConnectedResidual,
    NonconnectedResidual,
    NegNonconnectedResidual,
    A1MinusC,
    NegPhi,
    FunctionalMargin,
    NegQ,
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Method {
    Grid,
    Curve,
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum R0Filter {
    None,
    AtMost(f64),
    AtLeast(f64),
}

struct Region {
    connected: bool,
    ns: (u32, u32),
    quantity: Quantity,
    method: Method,
    filter: R0Filter,
}

type Interval = (f64, f64);

impl Region {
    fn alpha_range(&self, id: LemmaId, n: u32) -> Result<Interval> {
        use LemmaId::*;
        let c = PI / n as f64;
        Ok(match id {
            L44 => (c, PI),
            L45 => (c, PI / 2.0),
            L47 => (PI / 2.0, PI / 2.0 + c),
            L48 | L411i => (3.0 * PI / 4.0, PI),
            L49 | L411ii => (PI / 2.0 + c, 3.0 * PI / 4.0),
            L412(1) => (PI / 3.0, PI / 2.0),
            L412(2) => (PI / 2.0, 5.0 * PI / 6.0),
            L412(3) | L412(4) => (5.0 * PI / 6.0, PI),
            L412(_) => (PI / 3.0, PI),
            L413 => (PI / 2.0, PI),
            L415 | L419(1) => (alpha_root(n)?, PI),
            L416 => (c / 2.0, PI),
            L417 => (c, alpha_root(n)?),
            L418 => (0.0, c),
            L419(2) => (PI / 4.0, PI / 2.0),
            L419(3) => (0.0, PI / 6.0),
            L419(_) => (PI / 6.0, alpha_root(2)?),
        })
    }

    fn theta_range(&self, id: LemmaId, n: u32, alpha: f64) -> Interval {
        use LemmaId::*;
        let c = PI / n as f64;
        let (lo, hi) = match id {
            L44 => (c / 2.0, c),
            L412(1) | L412(2) => (0.0, PI / 6.0),
            L412(3) => (0.0, PI / 12.0),
            L412(4) => (PI / 12.0, PI / 6.0),
            L412(5) => (PI / 6.0, PI / 3.0),
            L413 => (0.0, PI / 2.0),
            L415 | L419(1) => (0.0, c),
            L416 => (c / 2.0, c),
            L419(2) => (PI / 4.0, PI / 2.0),
            L419(3) => (0.0, PI / 2.0),
            L419(_) => (0.0, PI / 4.0),
            _ => (0.0, c / 2.0),
        };
        if self.connected {
            (lo, hi)
        } else {
            // theta < alpha in the non-connected family
            (lo, hi.min(alpha))
        }
    }
}

fn region(id: LemmaId) -> Region {
    use LemmaId::*;
    use Method::*;
    use Quantity::*;
    let conn = |ns, quantity, method| Region { connected: true, ns, quantity, method, filter: R0Filter::None };
    let non = |ns, quantity, method| Region { connected: false, ns, quantity, method, filter: R0Filter::None };
    match id {
        L44 => conn((4, 40), ConnectedResidual, Grid),
        L45 => conn((4, 40), FunctionalMargin, Curve),
        L47 => conn((4, 40), NegQ, Curve),
        L48 => conn((17, 40), FunctionalMargin, Curve),
        L49 => conn((8, 40), FunctionalMargin, Curve),
        L411i => conn((4, 16), NegQ, Curve),
        L411ii => conn((5, 7), NegQ, Curve),
        L412(1) => conn((3, 3), FunctionalMargin, Curve),
        L412(2) | L412(4) => conn((3, 3), NegQ, Curve),
        L412(3) => conn((3, 3), A1MinusC, Grid),
        L412(_) => conn((3, 3), ConnectedResidual, Grid),
        L413 => conn((2, 2), NegQ, Curve),
        L415 => non((2, 40), NegPhi, Grid),
        L416 => non((3, 40), NonconnectedResidual, Grid),
        L417 | L418 => non((3, 40), FunctionalMargin, Curve),
        L419(1) => non((2, 2), NegPhi, Grid),
        L419(2) => non((2, 2), NonconnectedResidual, Grid),
        L419(3) => non((2, 2), FunctionalMargin, Curve),
        L419(4) => Region { filter: R0Filter::AtMost(0.45), ..non((2, 2), NegNonconnectedResidual, Grid) },
        L419(_) => Region { filter: R0Filter::AtLeast(0.45), ..non((2, 2), FunctionalMargin, Curve) },
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanPoint {
    pub n: u32,
    pub theta: f64,
    pub alpha: f64,
    pub margin: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanReport {
    pub lemma_id: String,
    pub grid: usize,
    pub n_range: (u32, u32),
    pub method: String,
    pub evaluated: usize,
    /// Constraint-curve points discarded as inadmissible.
    pub skipped: usize,
    pub worst_margin: Option<f64>,
    pub worst_point: Option<ScanPoint>,
    pub failures: Vec<ScanPoint>,
    pub pass: bool,
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let (a, b) = (lo + INSET, hi - INSET);
    if n <= 1 || b <= a {
        return if b >= a { vec![0.5 * (a + b)] } else { vec![] };
    }
    (0..n).map(|i| a + (b - a) * i as f64 / (n - 1) as f64).collect()
}

fn r0_ok(filter: R0Filter, n: u32, theta: f64, alpha: f64) -> bool {
    let r0 = pieces(n, theta, alpha).r0;
    match filter {
        R0Filter::None => true,
        R0Filter::AtMost(b) => r0 <= b,
        R0Filter::AtLeast(b) => r0 >= b,
    }
}

fn margin(q: Quantity, connected: bool, n: u32, theta: f64, alpha: f64) -> f64 {
    let c = PI / n as f64;
    match q {
        Quantity::ConnectedResidual => connected_residual(n, theta, alpha),
        Quantity::NonconnectedResidual => nonconnected_residual(n, theta, alpha),
        Quantity::NegNonconnectedResidual => -nonconnected_residual(n, theta, alpha),
        Quantity::A1MinusC => pieces(n, theta, alpha).a1 - c,
        Quantity::NegPhi => -phi(n, theta, alpha),
        Quantity::FunctionalMargin | Quantity::NegQ => {
            let Some(rep) = report(connected, n, theta, alpha) else {
                return f64::NAN;
            };
            if q == Quantity::NegQ {
                -rep.q.unwrap_or(f64::NAN)
            } else {
                rep.value.map_or(f64::NAN, |v| v - THRESHOLD)
            }
        }
    }
}

fn report(connected: bool, n: u32, theta: f64, alpha: f64) -> Option<FamilyReport> {
    if connected {
        connected_metrics(&RotSymParams::connected(n, theta, alpha)).ok()
    } else {
        nonconnected_metrics(&RotSymParams::nonconnected(n, theta, alpha)).ok()
    }
}

fn admissible(connected: bool, n: u32, theta: f64, alpha: f64) -> bool {
    if connected {
        pieces(n, theta, alpha).a0 <= PI / n as f64
    } else {
        report(false, n, theta, alpha).map_or(false, |r| r.lambda < 2.0)
    }
}

struct Slice {
    points: Vec<ScanPoint>,
    skipped: usize,
}

fn scan_slice(id: LemmaId, reg: &Region, n: u32, grid: usize) -> Result<Slice> {
    let (alo, ahi) = reg.alpha_range(id, n)?;
    let mut points = Vec::new();
    let mut skipped = 0;
    for alpha in linspace(alo, ahi, grid) {
        let (tlo, thi) = reg.theta_range(id, n, alpha);
        match reg.method {
            Method::Grid => {
                for theta in linspace(tlo, thi, grid) {
                    if !r0_ok(reg.filter, n, theta, alpha) {
                        continue;
                    }
                    points.push(ScanPoint { n, theta, alpha, margin: margin(reg.quantity, reg.connected, n, theta, alpha) });
                }
            }
            Method::Curve => {
                let (a, b) = (tlo + INSET, thi - INSET);
                if b <= a {
                    continue;
                }
                let res = |t: f64| {
                    if reg.connected {
                        connected_residual(n, t, alpha)
                    } else {
                        nonconnected_residual(n, t, alpha)
                    }
                };
                for theta in scan_roots(res, a, b, 8 * grid, 1e-15) {
                    if !r0_ok(reg.filter, n, theta, alpha) {
                        continue;
                    }
                    if !admissible(reg.connected, n, theta, alpha) {
                        skipped += 1;
                        continue;
                    }
                    points.push(ScanPoint { n, theta, alpha, margin: margin(reg.quantity, reg.connected, n, theta, alpha) });
                }
            }
        }
    }
    Ok(Slice { points, skipped })
}

/// Evaluate the lemma's predicate over its region at `grid` points per axis and `N` slice.
pub fn lemma_scan(id: LemmaId, grid: usize) -> Result<ScanReport> {
    if grid < 2 {
        return Err(Error::Config(format!("grid {grid} < 2")));
    }
    let reg = region(id);
    let slices: Vec<Slice> =
        (reg.ns.0..=reg.ns.1).into_par_iter().map(|n| scan_slice(id, &reg, n, grid)).collect::<Result<_>>()?;
    let mut evaluated = 0;
    let mut skipped = 0;
    let mut worst: Option<ScanPoint> = None;
    let mut failures = Vec::new();
    for s in slices {
        skipped += s.skipped;
        evaluated += s.points.len();
        for p in s.points {
            if !(p.margin > 0.0) {
                failures.push(p.clone());
            }
            if worst.as_ref().map_or(true, |w| !(p.margin >= w.margin)) {
                worst = Some(p);
            }
        }
    }
    let worst_margin = worst.as_ref().map(|w| w.margin);
    Ok(ScanReport {
        lemma_id: id.to_string(),
        grid,
        n_range: reg.ns,
        method: match reg.method {
            Method::Grid => "grid".into(),
            Method::Curve => "area-constraint curve".into(),
        },
        evaluated,
        skipped,
        pass: failures.is_empty() && worst_margin.map_or(true, |m| m > 0.0),
        worst_margin,
        worst_point: worst,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_ids() {
        for id in LemmaId::all() {
            assert_eq!(id.to_string().parse::<LemmaId>().unwrap(), id);
        }
        assert_eq!("L412-3".parse::<LemmaId>().unwrap(), LemmaId::L412(3));
        assert_eq!("l411ii".parse::<LemmaId>().unwrap(), LemmaId::L411ii);
        assert!("L46".parse::<LemmaId>().is_err());
        assert!("L412(7)".parse::<LemmaId>().is_err());
    }

    #[test]
    fn small_scans_pass() {
        for id in [LemmaId::L413, LemmaId::L412(5), LemmaId::L419(4)] {
            let r = lemma_scan(id, 12).unwrap();
            assert!(r.pass && r.evaluated > 0, "{r:?}");
        }
    }
}
