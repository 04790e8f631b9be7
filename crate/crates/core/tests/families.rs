mod common;

use common::{mask_point, rng};
use qisop::families::mask::mask_lambda;
use qisop::families::rotsym::solve_theta;
use qisop::families::*;
use qisop::fraenkel::{asymmetry_at, optimal_balls, SearchConfig};
use qisop::geometry::{validate, Point};
use rand::Rng;
use std::f64::consts::{FRAC_PI_2, PI};

fn mask_at(alpha: f64, theta: f64) -> MaskParams {
    MaskParams { alpha, theta, x0: mask_x0_from_area(alpha, theta).unwrap() }
}

#[test]
fn mask_closed_forms_match_measurements() {
    let mut r = rng(21);
    for _ in 0..150 {
        let p = mask_point(&mut r);
        let Ok(region) = mask_construct(&p) else { continue };
        assert!(validate(&region).is_empty(), "{p:?}");
        let (rep, _) = mask_metrics(&p).unwrap();
        assert!((region.area().unwrap() - rep.area.unwrap()).abs() < 1e-8, "{p:?}");
        assert!((region.perimeter().unwrap() - rep.perimeter.unwrap()).abs() < 1e-8, "{p:?}");
        // the closed-form asymmetry is the symmetric difference with the ball at (x0, 0)
        let at = asymmetry_at(&region, Point::new(p.x0, 0.0)).unwrap();
        assert!((at - rep.lambda).abs() < 1e-9, "{p:?}");
    }
}

#[test]
fn mask_closed_form_lambda_is_optimal() {
    let mut r = rng(22);
    let cfg = SearchConfig::default();
    let mut checked = 0;
    while checked < 100 {
        let p = mask_point(&mut r);
        let Ok(region) = mask_construct(&p) else { continue };
        let closed = mask_lambda(&p);
        let numeric = optimal_balls(&region, &cfg).unwrap().lambda;
        assert!((numeric - closed).abs() < 1e-5, "{p:?}: {numeric} vs {closed}");
        checked += 1;
    }
}

#[test]
fn thin_masks_that_overlap_themselves_are_rejected() {
    // the inner arcs sag past the axis: the closed forms would count the overlap twice
    let p = mask_at(1.5621, 0.0045);
    assert!(matches!(mask_construct(&p), Err(qisop::Error::Infeasible(_))));
    assert!(mask_metrics(&p).is_err());
}

#[test]
fn oval_closed_forms_match_measurements() {
    let mut r = rng(23);
    let cfg = SearchConfig::default();
    for i in 0..100 {
        let e1 = r.gen_range(0.05..FRAC_PI_2 - 0.1);
        let e2 = r.gen_range(0.05..FRAC_PI_2 - e1);
        let eps = 10f64.powf(r.gen_range(-4.0..-1.5));
        let p = OvalParams::new(e1, e2, eps);
        let (Ok(rep), Ok(region)) = (oval_metrics(&p), oval_construct(&p)) else { continue };
        assert!((region.area().unwrap() - PI).abs() < 1e-9, "{p:?}");
        assert!((region.perimeter().unwrap() - rep.perimeter.unwrap()).abs() < 1e-9, "{p:?}");
        assert!((asymmetry_at(&region, Point::default()).unwrap() - rep.lambda).abs() < 1e-9);
        if i % 10 == 0 {
            let l = optimal_balls(&region, &cfg).unwrap().lambda;
            assert!((l - rep.lambda).abs() < 1e-6, "{p:?}");
        }
    }
}

#[test]
fn rotsym_closed_forms_match_measurements() {
    let mut r = rng(24);
    let mut checked = 0;
    for _ in 0..300 {
        let n = r.gen_range(2..=8u32);
        let c = PI / n as f64;
        let alpha = r.gen_range(c + 0.01..PI - 0.01);
        let connected = r.gen_bool(0.5);
        let Ok(theta) = solve_theta(n, alpha, connected) else { continue };
        let p = if connected {
            RotSymParams::connected(n, theta, alpha)
        } else {
            RotSymParams::nonconnected(n, theta, alpha)
        };
        let (rep, region) = if connected {
            (connected_metrics(&p), connected_construct(&p))
        } else {
            (nonconnected_metrics(&p), nonconnected_construct(&p))
        };
        let (Ok(rep), Ok(region)) = (rep, region) else { continue };
        if !validate(&region).is_empty() {
            continue;
        }
        let area = region.area().unwrap();
        assert!((area - rep.area.unwrap()).abs() < 1e-8, "{p:?}");
        assert!((region.perimeter().unwrap() - rep.perimeter.unwrap()).abs() < 1e-8, "{p:?}");
        // area constraint: the set has the area of the unit ball
        assert!((area - PI).abs() < 1e-8, "{p:?}");
        assert!((asymmetry_at(&region, Point::default()).unwrap() - rep.lambda).abs() < 1e-8, "{p:?}");
        checked += 1;
    }
    assert!(checked >= 100, "{checked}");
}

#[test]
fn stadium_family_has_unit_ball_area() {
    let mut r = rng(25);
    for _ in 0..100 {
        let rr = r.gen_range(0.1..1.0);
        let s = stadium_construct(rr).unwrap();
        assert!((s.area().unwrap() - PI).abs() < 1e-12);
        let l = (PI - PI * rr * rr) / (4.0 * rr);
        assert!((s.perimeter().unwrap() - (4.0 * l + 2.0 * PI * rr)).abs() < 1e-12);
    }
}

#[test]
fn alpha_roots() {
    assert!((alpha_root(2).unwrap() - 1.22).abs() < 0.01);
    for n in 6..=20 {
        assert!(alpha_root(n).unwrap() < 1.0);
    }
}

#[test]
fn constraint_curve_satisfies_the_area_equation() {
    for n in 2..=6 {
        let pts: Vec<_> = constraint_curve(n, 100).into_iter().flatten().collect();
        assert!(!pts.is_empty());
        assert!(pts.iter().all(|p| p.residual_i.abs() < 1e-10));
    }
}

/// Connected-family points satisfying both first-order conditions.
/// Along the whole constraint curve the second residual stays negative, so there
/// are none to check.
#[test]
#[ignore = "no connected critical points exist; see constraint_curve_second_residual_is_negative"]
fn connected_critical_points_satisfy_all_conditions() {
    for n in 2..=12 {
        let pts = connected_critical_points(n, 200);
        assert!(!pts.is_empty(), "N = {n}: no critical points");
        for p in pts {
            assert!(p.residual_i.abs() < 1e-6 && p.residual_ii.abs() < 1e-6);
        }
    }
}

#[test]
fn constraint_curve_second_residual_is_negative() {
    for n in 2..=12 {
        let worst = constraint_curve(n, 200)
            .into_iter()
            .flatten()
            .map(|p| p.residual_ii)
            .fold(f64::NEG_INFINITY, f64::max);
        assert!(worst < 0.0, "N = {n}: {worst}");
        assert!(connected_critical_points(n, 200).is_empty());
    }
}

#[test]
fn lemma_scans_pass_at_coarse_resolution() {
    for id in LemmaId::all() {
        let rep = lemma_scan(id, 12).unwrap();
        assert!(rep.pass, "{id}: {:?}", rep.failures.first());
    }
}
