//! Parametrized candidate families with closed-form metrics and constructors.
//!
//! Closed forms are normalized by the unit ball: `δ = P/2π − 1` and
//! `λ = |Ω Δ B|/π` with `B` the unit ball of the family. They coincide with the
//! true deficit and asymmetry when the family member has area `π` and `B` is optimal.

pub mod lemmas;
pub mod mask;
pub mod oval;
pub mod rotsym;
pub mod soak;
pub mod stadium;

use serde::Serialize;

pub use lemmas::{lemma_scan, LemmaId, ScanReport};
pub use mask::{mask_construct, mask_metrics, mask_optimize, mask_x0_from_area, MaskConfig, MaskParams};
pub use oval::{oval_construct, oval_metrics, OvalParams};
pub use rotsym::{
    alpha_root, condition_check, connected_construct, connected_critical_points, connected_metrics, constraint_curve,
    nonconnected_construct,
    nonconnected_metrics, Conditions, CurvePoint, RotSymParams,
};
pub use soak::{soak, soak_random, soak_shape, ShapeKind, SoakConfig, SoakReport, SoakSample};
pub use stadium::{stadium_construct, stadium_optimize, StadiumConfig};

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct FamilyReport {
    pub family: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r0: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r1: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a0: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a1: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub perimeter: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub area: Option<f64>,
    pub delta: f64,
    pub lambda: f64,
    pub value: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phi: Option<f64>,
}

impl FamilyReport {
    pub(crate) fn new(family: &str, delta: f64, lambda: f64) -> Self {
        FamilyReport {
            family: family.into(),
            delta,
            lambda,
            value: (lambda > 0.0).then(|| delta / (lambda * lambda)),
            ..Default::default()
        }
    }
}
