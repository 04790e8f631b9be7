//! JSON shape documents: `{"loops": [[edge, ...], ...]}`.

use super::{norm_pos, Arc, ArcRegion, Edge, Point};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum EdgeDoc {
    Arc { center: [f64; 2], radius: f64, start: f64, end: f64, ccw: bool },
    Segment { from: [f64; 2], to: [f64; 2] },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ShapeDoc {
    pub loops: Vec<Vec<EdgeDoc>>,
}

impl From<&Edge> for EdgeDoc {
    fn from(e: &Edge) -> Self {
        match e {
            Edge::Arc(a) => EdgeDoc::Arc {
                center: [a.center.x, a.center.y],
                radius: a.radius,
                start: a.start,
                end: a.end(),
                ccw: a.sweep > 0.0,
            },
            Edge::Segment { from, to } => EdgeDoc::Segment { from: [from.x, from.y], to: [to.x, to.y] },
        }
    }
}

impl From<&EdgeDoc> for Edge {
    fn from(d: &EdgeDoc) -> Self {
        match *d {
            EdgeDoc::Arc { center, radius, start, end, ccw } => {
                // end - start of a full turn can round just past 2π; a near-zero arc means a full one
                let turn = |d: f64| {
                    let s = norm_pos(d);
                    if s < 1e-12 { TAU } else { s }
                };
                let sweep = if ccw { turn(end - start) } else { -turn(start - end) };
                Edge::Arc(Arc::new(Point::new(center[0], center[1]), radius, start, sweep))
            }
            EdgeDoc::Segment { from, to } => {
                Edge::Segment { from: Point::new(from[0], from[1]), to: Point::new(to[0], to[1]) }
            }
        }
    }
}

impl From<&ArcRegion> for ShapeDoc {
    fn from(r: &ArcRegion) -> Self {
        ShapeDoc { loops: r.loops.iter().map(|l| l.iter().map(EdgeDoc::from).collect()).collect() }
    }
}

impl From<&ShapeDoc> for ArcRegion {
    fn from(d: &ShapeDoc) -> Self {
        ArcRegion::new(d.loops.iter().map(|l| l.iter().map(Edge::from).collect()).collect())
    }
}

pub fn region_to_json(r: &ArcRegion) -> String {
    serde_json::to_string_pretty(&ShapeDoc::from(r)).expect("shape serializes")
}

pub fn region_from_json(s: &str) -> Result<ArcRegion> {
    let doc: ShapeDoc = serde_json::from_str(s).map_err(|e| Error::Structure(format!("shape JSON: {e}")))?;
    Ok(ArcRegion::from(&doc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn round_trip() {
        let c = Point::new(0.5, -0.25);
        let r = ArcRegion::single(vec![
            Edge::Arc(Arc::new(c, 1.0, 0.0, PI)),
            Edge::segment(Point::new(-0.5, -0.25), Point::new(1.5, -0.25)),
        ]);
        let back = region_from_json(&region_to_json(&r)).unwrap();
        assert!((back.area().unwrap() - r.area().unwrap()).abs() < 1e-15);
        let full = ArcRegion::disk(c, 2.0);
        let back = region_from_json(&region_to_json(&full)).unwrap();
        assert!((back.area().unwrap() - 4.0 * PI).abs() < 1e-12);
    }

    #[test]
    fn parse_schema() {
        let s = r#"{"loops":[[{"type":"arc","center":[0,0],"radius":1,"start":0,"end":0,"ccw":true}]]}"#;
        let r = region_from_json(s).unwrap();
        assert!((r.area().unwrap() - PI).abs() < 1e-14);
        assert!(region_from_json("{\"loops\": 3}").is_err());
    }
}
