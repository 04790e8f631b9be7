//! Minimize the quotient over the two-ball mask family.
//!
//! ```text
//! cargo run --release --example mask_conjecture
//! ```

use qisop::families::{mask_metrics, mask_optimize, MaskConfig, MaskParams};

pub fn run(lattice: usize) -> qisop::Result<(MaskParams, f64)> {
    let (p, rep) = mask_optimize(&MaskConfig { lattice, extended: false })?;
    let value = rep.value.expect("mask optimum has positive asymmetry");
    let (_, geo) = mask_metrics(&p)?;
    println!("alpha = {:.7}  theta = {:.7}  x0 = {:.7}", p.alpha, p.theta, p.x0);
    println!("F     = {value:.7}");
    println!("c*    = {:.7}", 1.0 / value);
    println!("radii = {:.6} {:.6} {:.6}", geo.r1, geo.r2, geo.r3);
    Ok((p, value))
}

#[allow(dead_code)]
fn main() -> qisop::Result<()> {
    run(16).map(|_| ())
}
