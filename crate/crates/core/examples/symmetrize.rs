//! Four-cap rearrangement of a slightly bumped disk.

use qisop::fraenkel::{functional, SearchConfig};
use qisop::geometry::{Arc, ArcRegion, Edge, Point};
use qisop::symmetrization::{cap_edge, symmetrize, SymmetrizedSet};
use std::f64::consts::PI;

/// Unit disk with one outward and one inward cap of height about `eps`.
pub fn bumped_disk(eps: f64) -> ArcRegion {
    let at = |phi: f64| Point::polar(1.0, phi);
    let w = 0.4;
    let t = (eps / w).atan() * 2.0;
    ArcRegion::single(vec![
        cap_edge(at(-w), at(w), w + t),
        Edge::Arc(Arc::new(Point::default(), 1.0, w, 2.0 - 2.0 * w)),
        cap_edge(at(2.0 - w), at(2.0 + w), w - t),
        Edge::Arc(Arc::new(Point::default(), 1.0, 2.0 + w, 2.0 * PI - 2.0 - 2.0 * w)),
    ])
}

pub fn run(eps: f64) -> qisop::Result<(SymmetrizedSet, f64, f64)> {
    let cfg = SearchConfig::default();
    let region = bumped_disk(eps);
    let before = functional(&region, &cfg)?;
    let sym = symmetrize(&region, &cfg)?;
    let after = functional(&sym.region, &cfg)?;
    println!("eta   out/in = {:.6} / {:.6}", sym.eta_out, sym.eta_in);
    println!("theta out/in = {:.6} / {:.6}", sym.theta_out, sym.theta_in);
    println!("area  before/after = {:.10} / {:.10}", region.area()?, sym.region.area()?);
    println!("F     before/after = {:.6} / {:.6}", before.value, after.value);
    Ok((sym, before.value, after.value))
}

#[allow(dead_code)]
fn main() -> qisop::Result<()> {
    for eps in [1e-2, 1e-3] {
        println!("eps = {eps:.0e}");
        run(eps)?;
    }
    Ok(())
}
