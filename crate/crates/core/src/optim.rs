//! Thin wrappers over `argmin` solvers for closures.

use crate::error::{Error, Result};
use argmin::core::{CostFunction, Executor, State};
use argmin::solver::brent::BrentRoot;
use argmin::solver::goldensectionsearch::GoldenSectionSearch;
use argmin::solver::neldermead::NelderMead;

struct Scalar<F>(F);

impl<F: Fn(f64) -> f64> CostFunction for Scalar<F> {
    type Param = f64;
    type Output = f64;
    fn cost(&self, x: &f64) -> std::result::Result<f64, argmin::core::Error> {
        Ok((self.0)(*x))
    }
}

struct Vector<F>(F);

impl<F: Fn(&[f64]) -> f64> CostFunction for Vector<F> {
    type Param = Vec<f64>;
    type Output = f64;
    fn cost(&self, x: &Vec<f64>) -> std::result::Result<f64, argmin::core::Error> {
        Ok((self.0)(x))
    }
}

fn numeric(e: argmin::core::Error) -> Error {
    Error::Numeric(e.to_string())
}

/// Golden-section minimization on `[a, b]`; returns `(x, f(x))`.
pub fn golden_section(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> Result<(f64, f64)> {
    let solver = GoldenSectionSearch::new(a, b).map_err(numeric)?.with_tolerance(tol).map_err(numeric)?;
    let res = Executor::new(Scalar(f), solver)
        .configure(|s| s.param(0.5 * (a + b)).max_iters(500))
        .run()
        .map_err(numeric)?;
    let st = res.state();
    let x = *st.get_best_param().ok_or_else(|| Error::Numeric("golden section: no iterate".into()))?;
    Ok((x, st.get_best_cost()))
}

/// Nelder–Mead from an explicit simplex; returns `(x, f(x))`.
pub fn nelder_mead(f: impl Fn(&[f64]) -> f64, simplex: Vec<Vec<f64>>, sd_tol: f64, max_iters: u64) -> Result<(Vec<f64>, f64)> {
    let solver = NelderMead::new(simplex).with_sd_tolerance(sd_tol).map_err(numeric)?;
    let res = Executor::new(Vector(f), solver).configure(|s| s.max_iters(max_iters)).run().map_err(numeric)?;
    let st = res.state();
    let x = st.get_best_param().cloned().ok_or_else(|| Error::Numeric("simplex: no iterate".into()))?;
    Ok((x, st.get_best_cost()))
}

/// Root of `f` bracketed by `[a, b]` (Brent's method).
pub fn brent_root(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> Result<f64> {
    let (fa, fb) = (f(a), f(b));
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::Numeric(format!("no sign change on [{a}, {b}]")));
    }
    let res = Executor::new(Scalar(f), BrentRoot::new(a, b, tol))
        .configure(|s| s.param(0.5 * (a + b)).max_iters(200))
        .run()
        .map_err(numeric)?;
    res.state().get_best_param().copied().ok_or_else(|| Error::Numeric("brent: no iterate".into()))
}

/// All roots of `f` on `[a, b]` located by a sign scan on `n` subintervals.
pub fn scan_roots(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize, tol: f64) -> Vec<f64> {
    let mut roots = Vec::new();
    let step = (b - a) / n as f64;
    let mut x0 = a;
    let mut f0 = f(a);
    for i in 1..=n {
        let x1 = if i == n { b } else { a + i as f64 * step };
        let f1 = f(x1);
        if f0 == 0.0 {
            roots.push(x0);
        } else if f0.is_finite() && f1.is_finite() && f0.signum() != f1.signum() && f1 != 0.0 {
            if let Ok(r) = brent_root(&f, x0, x1, tol) {
                roots.push(r);
            }
        }
        x0 = x1;
        f0 = f1;
    }
    if f0 == 0.0 {
        roots.push(b);
    }
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solvers() {
        let (x, _) = golden_section(|x| (x - 0.3).powi(2), 0.0, 1.0, 1e-10).unwrap();
        assert!((x - 0.3).abs() < 1e-8);
        let r = brent_root(|x| x.cos() - x, 0.0, 1.0, 1e-15).unwrap();
        assert!((r - 0.739_085_133_215_160_6).abs() < 1e-14);
        assert!(brent_root(|x| x * x + 1.0, -1.0, 1.0, 1e-12).is_err());
        let (p, _) = nelder_mead(
            |p| (1.0 - p[0]).powi(2) + 100.0 * (p[1] - p[0] * p[0]).powi(2),
            vec![vec![-1.0, 1.0], vec![-0.9, 1.0], vec![-1.0, 1.1]],
            1e-15,
            5000,
        )
        .unwrap();
        assert!((p[0] - 1.0).abs() < 1e-5 && (p[1] - 1.0).abs() < 1e-5);
        let rs = scan_roots(|x| x.sin(), 0.5, 10.0, 100, 1e-14);
        assert_eq!(rs.len(), 3);
    }
}
