//! Ovals collapsing onto the ball and the limit of the quotient.

use qisop::families::{oval_metrics, OvalParams};
use qisop::special::minimize_limit_case_a;
use std::f64::consts::{FRAC_PI_4, PI};

pub fn run() -> qisop::Result<(Vec<f64>, [f64; 2])> {
    let target = PI / (8.0 * (4.0 - PI));
    let mut values = Vec::new();
    for eps in [1e-2, 1e-3, 1e-4] {
        let v = oval_metrics(&OvalParams::new(FRAC_PI_4, FRAC_PI_4, eps))?.value.unwrap_or(f64::NAN);
        println!("eps = {eps:.0e}  F = {v:.9}  gap = {:.2e}", v - target);
        values.push(v);
    }
    // admissible angles satisfy eta1 + eta2 <= pi/2
    let (a, b, fx) = minimize_limit_case_a(0.01)?;
    println!("limit minimized at ({a:.9}, {b:.9}), value {fx:.12}");
    println!("pi/(8(4-pi))         = {target:.12}");
    Ok((values, [a, b]))
}

#[allow(dead_code)]
fn main() -> qisop::Result<()> {
    run().map(|_| ())
}
