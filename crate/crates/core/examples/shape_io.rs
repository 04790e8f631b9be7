//! Building, validating and serializing arc regions.

use qisop::geometry::{region_from_json, region_to_json, validate, Arc, ArcRegion, Edge, Point};
use std::f64::consts::PI;

/// A unit square with a half-disk glued on its right side, plus a separate small disk.
pub fn sample() -> ArcRegion {
    let outer = vec![
        Edge::segment(Point::new(0.0, 0.0), Point::new(1.0, 0.0)),
        Edge::Arc(Arc::new(Point::new(1.0, 0.5), 0.5, -PI / 2.0, PI)),
        Edge::segment(Point::new(1.0, 1.0), Point::new(0.0, 1.0)),
        Edge::segment(Point::new(0.0, 1.0), Point::new(0.0, 0.0)),
    ];
    let island = vec![Edge::Arc(Arc::new(Point::new(-1.0, 0.5), 0.3, 0.0, 2.0 * PI))];
    ArcRegion::new(vec![outer, island])
}

pub fn run() -> qisop::Result<String> {
    let region = sample();
    println!("violations = {:?}", validate(&region));
    println!("area       = {:.9}", region.area()?);
    println!("perimeter  = {:.9}", region.perimeter()?);
    let json = region_to_json(&region);
    let back = region_from_json(&json)?;
    println!("round trip area = {:.9}", back.area()?);
    let bad = ArcRegion::single(vec![
        Edge::segment(Point::new(0.0, 0.0), Point::new(1.0, 1.0)),
        Edge::segment(Point::new(1.0, 1.0), Point::new(1.0, 0.0)),
        Edge::segment(Point::new(1.0, 0.0), Point::new(0.0, 1.0)),
        Edge::segment(Point::new(0.0, 1.0), Point::new(0.0, 0.0)),
    ]);
    println!("bow tie    = {:?}", validate(&bad));
    Ok(json)
}

#[allow(dead_code)]
fn main() -> qisop::Result<()> {
    println!("{}", run()?);
    Ok(())
}
