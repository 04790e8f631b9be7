//! Each example compiled as a module and run with small arguments.

#[path = "../examples/fraenkel_asymmetry.rs"]
mod fraenkel_asymmetry;
#[path = "../examples/lemma_scans.rs"]
mod lemma_scans;
#[path = "../examples/mask_conjecture.rs"]
mod mask_conjecture;
#[path = "../examples/oval_limit.rs"]
mod oval_limit;
#[path = "../examples/render_figures.rs"]
mod render_figures;
#[path = "../examples/rotsym_conditions.rs"]
mod rotsym_conditions;
#[path = "../examples/shape_io.rs"]
mod shape_io;
#[path = "../examples/soak.rs"]
mod soak;
#[path = "../examples/stadium.rs"]
mod stadium;
#[path = "../examples/symmetrize.rs"]
mod symmetrize;

use std::f64::consts::PI;

#[test]
fn mask_conjecture() {
    let (p, value) = mask_conjecture::run(4).unwrap();
    assert!((value - 0.3931397).abs() < 1e-5);
    assert!((p.alpha - 0.2686247).abs() < 1e-3);
}

#[test]
fn stadium() {
    let (r, pinned, searched) = stadium::run().unwrap();
    assert!((pinned - 0.405585).abs() < 1e-3);
    assert!((searched - pinned).abs() < 1e-6);
    assert!(r > 0.5 && r < 0.6);
}

#[test]
fn oval_limit() {
    let (values, eta) = oval_limit::run().unwrap();
    let lim = PI / (8.0 * (4.0 - PI));
    assert!((values.last().unwrap() - lim).abs() < 1e-3);
    assert!((eta[0] - PI / 4.0).abs() < 1e-6 && (eta[1] - PI / 4.0).abs() < 1e-6);
}

#[test]
fn fraenkel_asymmetry() {
    let l = fraenkel_asymmetry::run(&fraenkel_asymmetry::lens()).unwrap();
    assert!((l - 0.304723355).abs() < 1e-8);
}

#[test]
fn symmetrize() {
    let (sym, before, after) = symmetrize::run(1e-3).unwrap();
    assert!((sym.region.area().unwrap() - symmetrize::bumped_disk(1e-3).area().unwrap()).abs() < 1e-8);
    assert!(after <= before + 1e-2);
}

#[test]
fn lemma_scans() {
    assert!(lemma_scans::run(8).unwrap().iter().all(|r| r.pass));
}

#[test]
fn rotsym_conditions() {
    assert!(!rotsym_conditions::run(4).unwrap().is_empty());
}

#[test]
fn soak() {
    let rep = soak::run(8, 1).unwrap();
    assert_eq!(rep.count, 8);
}

#[test]
fn shape_io() {
    let json = shape_io::run().unwrap();
    assert!(qisop::geometry::region_from_json(&json).is_ok());
}

#[test]
fn render_figures() {
    let dir = std::env::temp_dir().join(format!("qisop-figs-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let files = render_figures::run(&dir).unwrap();
    assert_eq!(files.len(), 4);
}
