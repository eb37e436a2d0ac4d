//! Closed-form formulas and finite numeric checks behind the bounds:
//! the degree-25 star quadratic, the ternary-tree shrink limit f(q), the
//! K_8 distance recurrence f(n), the K_8 region partition, and the
//! K_{2,m} sector arithmetic.

use crate::geometry::Point;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum AnalysisError {
    #[error("argument out of domain: {0}")]
    Domain(String),
}

/// Roots of the quadratic the degree-25 star argument runs into: with leaf
/// angle alpha, an empty-ply layout forces q <= lower/3 or q >= upper/3
/// (in units where the inner ring has radius 3). No real roots when
/// 16 cos^2(alpha) < 12.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct QuadraticBounds {
    pub alpha: f64,
    pub lower: Option<f64>,
    pub upper: Option<f64>,
    /// Whether [3, 3*sqrt(2)] intersects the allowed set
    /// (-inf, lower] U [upper, +inf); false means no valid ring radius.
    pub feasible: bool,
}

pub fn k25_bounds(alpha: f64) -> Result<QuadraticBounds, AnalysisError> {
    if !(0.0..std::f64::consts::FRAC_PI_2).contains(&alpha) {
        return Err(AnalysisError::Domain(format!(
            "alpha must lie in [0, pi/2), got {alpha}"
        )));
    }
    let c = alpha.cos();
    let disc = 16.0 * c * c - 12.0;
    if disc < 0.0 {
        return Ok(QuadraticBounds { alpha, lower: None, upper: None, feasible: false });
    }
    let lower = 4.0 * c - disc.sqrt();
    let upper = 4.0 * c + disc.sqrt();
    let feasible = lower >= 3.0 || upper <= 3.0 * 2.0f64.sqrt();
    Ok(QuadraticBounds { alpha, lower: Some(lower), upper: Some(upper), feasible })
}

/// The shrink-factor obstruction for orthogonal ternary trees: distances
/// from v1 and v3 to the limit point w of the spiral path, and
/// f(q) = |v1 w| - 1/2, which is negative throughout (0,1).
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct ShrinkLimit {
    pub q: f64,
    pub f: f64,
    pub dist_v1_w: f64,
    pub dist_v3_w: f64,
}

pub fn shrink_limit(q: f64) -> Result<ShrinkLimit, AnalysisError> {
    if !(0.0 < q && q < 1.0) {
        return Err(AnalysisError::Domain(format!("q must lie in (0,1), got {q}")));
    }
    let s = (1.0 + q * q).sqrt();
    let g = q.powi(3) / (1.0 - q * q);
    let dist_v3_w = g * s;
    let dist_v1_w = (q - g) * s;
    Ok(ShrinkLimit { q, f: dist_v1_w - 0.5, dist_v1_w, dist_v3_w })
}

/// The K_8 chain-distance recurrence: f(1) = sqrt(3),
/// cos(alpha) = (6 - (f/2)^2) / (4 sqrt(2)), and
/// f(n) = sqrt(6 - 4 sqrt(2) (3/4 cos(alpha) - sqrt(7)/4 sin(alpha))),
/// which climbs monotonically toward the limit 2.
pub fn fn_recurrence(n: usize) -> Result<f64, AnalysisError> {
    if n < 1 {
        return Err(AnalysisError::Domain("n must be >= 1".into()));
    }
    let mut f = 3.0f64.sqrt();
    for _ in 1..n {
        let cos_a = (6.0 - (f / 2.0) * (f / 2.0)) / (4.0 * 2.0f64.sqrt());
        let sin_a = (1.0 - cos_a * cos_a).max(0.0).sqrt();
        f = (6.0 - 4.0 * 2.0f64.sqrt() * (0.75 * cos_a - 7.0f64.sqrt() / 4.0 * sin_a)).sqrt();
    }
    Ok(f)
}

/// Label in the K_8 two-center partition; `side` is + for y >= 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RegionLabel {
    A { plus: bool },
    B { plus: bool },
    C { plus: bool },
    D { plus: bool },
    Outside,
}

/// Classify a point in the fixed frame x1 = (0,0), x2 = (2,0) by its two
/// distances. The printed strict/non-strict interval mix is normalized to
/// closed intervals with first-match precedence A, B, C, D.
pub fn k8_region(p: Point) -> RegionLabel {
    let d1 = p.dist(&Point::new(0.0, 0.0));
    let d2 = p.dist(&Point::new(2.0, 0.0));
    let s2 = 2.0f64.sqrt();
    let plus = p.y >= 0.0;
    let mid = |d: f64| (s2..=2.0).contains(&d);
    let inner = |d: f64| (1.0..=s2).contains(&d);
    if mid(d1) && mid(d2) {
        RegionLabel::A { plus }
    } else if inner(d1) && mid(d2) {
        RegionLabel::B { plus }
    } else if mid(d1) && inner(d2) {
        RegionLabel::C { plus }
    } else if inner(d1) && inner(d2) {
        RegionLabel::D { plus }
    } else {
        RegionLabel::Outside
    }
}

/// Sector arithmetic of the K_{2,m} upper bound: the minimum angular
/// distance alpha_d between leaves seen from a hub, the aperture beta_2 of
/// the far region and beta_1 of the near region, and the resulting leaf
/// capacities.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct SectorAnalysis {
    pub alpha_d: f64,
    pub beta1: f64,
    pub beta2: f64,
    pub outer_capacity: usize,
    pub inner_capacity_per_half: usize,
    pub combined_bound: usize,
}

pub fn k2m_analysis() -> SectorAnalysis {
    let alpha_d = (5.0 / (4.0 * 2.0f64.sqrt())).acos();
    // hubs at distance 1; a point on their bisector at distance 2 from a
    // hub is seen from that hub at elevation atan2(sqrt(4 - 1/4), 1/2)
    let half = (4.0f64 - 0.25).sqrt().atan2(0.5);
    let beta2 = 2.0 * half;
    // aperture of the near region as stated (its derivation is only
    // sketched in the source argument)
    let beta1 = 41.41f64.to_radians();
    let outer_capacity = (2.0 * beta2 / alpha_d).floor() as usize;
    let inner_capacity_per_half = (2.0 * beta1 / alpha_d).ceil() as usize;
    // far region holds <= 10 with <= 4 nearby, or <= 9 with <= 5
    let combined_bound = (10 + 4).max(9 + 5);
    SectorAnalysis {
        alpha_d,
        beta1,
        beta2,
        outer_capacity,
        inner_capacity_per_half,
        combined_bound,
    }
}
