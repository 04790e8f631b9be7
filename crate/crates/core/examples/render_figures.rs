//! SVG figures: the conjectured optimal mask with both balls, a set with its
//! symmetrization, and the optimal stadium.
//!
//! ```text
//! cargo run --release --example render_figures -- out/
//! ```

use qisop::families::{mask_construct, mask_x0_from_area, stadium_construct, MaskParams};
use qisop::fraenkel::SearchConfig;
use qisop::geometry::{Arc, ArcRegion, Edge, Point};
use qisop::render::{render_symmetrized, render_with_optimal_balls};
use qisop::symmetrization::{cap_edge, symmetrize};
use std::path::Path;

fn wobbly() -> ArcRegion {
    let at = |phi: f64| Point::polar(1.0, phi);
    ArcRegion::single(vec![
        cap_edge(at(-0.5), at(0.3), 1.1),
        Edge::Arc(Arc::new(Point::default(), 1.0, 0.3, 1.7)),
        cap_edge(at(2.0), at(2.9), 0.1),
        Edge::Arc(Arc::new(Point::default(), 1.0, 2.9, 1.2)),
        cap_edge(at(4.1), at(4.6), 0.9),
        Edge::Arc(Arc::new(Point::default(), 1.0, 4.6, 1.183_185_307_179_586)),
    ])
}

pub fn run(dir: &Path) -> qisop::Result<Vec<String>> {
    let cfg = SearchConfig::default();
    let (alpha, theta) = (0.2686247, 0.5285017);
    let mask = mask_construct(&MaskParams { alpha, theta, x0: mask_x0_from_area(alpha, theta)? })?;
    let figures = vec![
        ("mask.svg", render_with_optimal_balls(&mask, &cfg)?),
        ("symmetrization_before.svg", render_with_optimal_balls(&wobbly(), &cfg)?),
        ("symmetrization_after.svg", render_symmetrized(&symmetrize(&wobbly(), &cfg)?)),
        ("stadium.svg", render_with_optimal_balls(&stadium_construct(0.543857)?, &cfg)?),
    ];
    std::fs::create_dir_all(dir).expect("output directory");
    let mut names = Vec::new();
    for (name, svg) in figures {
        let path = dir.join(name);
        std::fs::write(&path, &svg).expect("writable output");
        println!("wrote {}", path.display());
        names.push(svg);
    }
    Ok(names)
}

#[allow(dead_code)]
fn main() -> qisop::Result<()> {
    let dir = std::env::args().nth(1).unwrap_or_else(|| "figures".into());
    run(Path::new(&dir)).map(|_| ())
}
