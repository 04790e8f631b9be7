//! Optimal balls of a shape file (or of a built-in lens) and the gradient of
//! the symmetric-difference area.
//!
//! ```text
//! cargo run --example fraenkel_asymmetry -- shape.json
//! ```

use qisop::fraenkel::{deficit, optimal_balls, psi_gradient, SearchConfig};
use qisop::geometry::{region_from_json, Arc, ArcRegion, Edge, Point};
use std::f64::consts::PI;

pub fn lens() -> ArcRegion {
    // two unit arcs meeting at (0, ±√3/2)
    ArcRegion::single(vec![
        Edge::Arc(Arc::new(Point::new(-0.5, 0.0), 1.0, -PI / 3.0, 2.0 * PI / 3.0)),
        Edge::Arc(Arc::new(Point::new(0.5, 0.0), 1.0, 2.0 * PI / 3.0, 2.0 * PI / 3.0)),
    ])
}

pub fn run(region: &ArcRegion) -> qisop::Result<f64> {
    let res = optimal_balls(region, &SearchConfig::default())?;
    println!("area        = {:.9}", res.area);
    println!("delta       = {:.9}", deficit(region)?);
    println!("lambda      = {:.9}", res.lambda);
    for c in &res.optimal_centers {
        println!("ball center = ({:.9}, {:.9})", c.x, c.y);
    }
    let probe = Point::new(res.optimal_centers[0].x + 0.1 * res.radius, res.optimal_centers[0].y);
    if let Ok(g) = psi_gradient(region, probe) {
        println!("grad psi at center + 0.1 r = ({:.6}, {:.6})", g.0, g.1);
    }
    Ok(res.lambda)
}

#[allow(dead_code)]
fn main() -> qisop::Result<()> {
    let region = match std::env::args().nth(1) {
        Some(path) => region_from_json(&std::fs::read_to_string(path).expect("readable shape file"))?,
        None => lens(),
    };
    run(&region).map(|_| ())
}
