//! N-fold symmetric candidates: the root α(N), the area-constraint curve and
//! the residual of the first-order condition along it.

use qisop::families::{alpha_root, connected_critical_points, constraint_curve};

pub fn run(max_n: u32) -> qisop::Result<Vec<(u32, f64, f64, usize)>> {
    let mut rows = Vec::new();
    for n in 2..=max_n {
        let a = alpha_root(n)?;
        let curve: Vec<_> = constraint_curve(n, 200).into_iter().flatten().collect();
        // 1/R0 + 1/R1 - 8 delta/lambda, the largest value along the curve
        let top = curve.iter().map(|p| p.residual_ii).fold(f64::NEG_INFINITY, f64::max);
        let crit = connected_critical_points(n, 200).len();
        println!("N = {n:>2}  alpha(N) = {a:.6}  curve pts {:>3}  max residual (ii) = {top:.4}  critical = {crit}", curve.len());
        rows.push((n, a, top, crit));
    }
    Ok(rows)
}

#[allow(dead_code)]
fn main() -> qisop::Result<()> {
    run(12).map(|_| ())
}
