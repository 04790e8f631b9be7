#![allow(dead_code)]

use qisop::families::soak::generate;
use qisop::families::{mask_construct, mask_x0_from_area, MaskParams, ShapeKind};
use qisop::geometry::ArcRegion;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Valid random region of one of the generator kinds, cycling with `seed`.
pub fn random_region(seed: u64) -> ArcRegion {
    let kind = ShapeKind::RANDOM[(seed % 4) as usize];
    generate(kind, &mut rng(seed), 0.5).expect("generator yields a valid shape")
}

pub fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-300)
}

use qisop::geometry::{Arc, Edge, Point};
use qisop::symmetrization::cap_edge;
use rand::Rng;
use std::f64::consts::{FRAC_PI_2, PI, TAU};

/// Unit disk with three to five caps of height about `eps`, alternately bulging
/// out and in.
pub fn bumpy_disk(rng: &mut ChaCha8Rng, eps: f64) -> ArcRegion {
    let k = rng.gen_range(3..=5);
    let slot = TAU / k as f64;
    let phase = rng.gen_range(0.0..slot);
    let at = |phi: f64| Point::polar(1.0, phi);
    let mut edges = Vec::new();
    for i in 0..k {
        let mid = phase + slot * (i as f64 + 0.5) + rng.gen_range(-0.1..0.1) * slot;
        let w = rng.gen_range(0.15..0.35) * slot;
        let height = eps * rng.gen_range(0.5..1.0);
        let t = 2.0 * (height / w).atan();
        let theta = if i % 2 == 0 { w + t } else { w - t };
        let start = phase + slot * i as f64;
        edges.push(Edge::Arc(Arc::new(Point::default(), 1.0, start, mid - w - start)));
        edges.push(cap_edge(at(mid - w), at(mid + w), theta));
        edges.push(Edge::Arc(Arc::new(Point::default(), 1.0, mid + w, start + slot - mid - w)));
    }
    ArcRegion::single(edges)
}

/// Mask parameters uniform on the part of the triangle `α + θ ≤ π/2` where the
/// area equation has a root `x₀ ∈ [0, cos θ]` and the set is simple.
pub fn mask_point(rng: &mut ChaCha8Rng) -> MaskParams {
    loop {
        let alpha: f64 = rng.gen_range(0.0..FRAC_PI_2);
        let theta: f64 = rng.gen_range(0.0..FRAC_PI_2);
        if alpha + theta >= FRAC_PI_2 || alpha < 1e-3 || theta < 1e-3 {
            continue;
        }
        let Ok(x0) = mask_x0_from_area(alpha, theta) else { continue };
        let p = MaskParams { alpha, theta, x0 };
        if mask_construct(&p).is_ok() {
            return p;
        }
    }
}

/// Random center near the region where the matched ball crosses its boundary.
pub fn crossing_center(rng: &mut ChaCha8Rng, region: &ArcRegion) -> Point {
    let r = (region.area().unwrap() / PI).sqrt();
    region.centroid().add(Point::polar(rng.gen_range(0.0..0.8) * r, rng.gen_range(0.0..TAU)))
}
