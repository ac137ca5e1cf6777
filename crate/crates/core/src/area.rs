//! Oriented hyperbolic area (curvature -1) of triangles and closed geodesic cycles.
//!
//! Counterclockwise boundaries in the chart have positive area.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::disc::{is_positive_cycle, CycleOrientation, ProjPoint};
use crate::isometry::SpecialUnitary;

/// Oriented area of the geodesic triangle `p1 p2 p3` by the angle defect.
///
/// Ideal vertices have angle 0. Coincident or collinear vertices give 0.
pub fn triangle_area(p1: &ProjPoint, p2: &ProjPoint, p3: &ProjPoint) -> f64 {
    let pts = [*p1, *p2, *p3];
    for k in 0..3 {
        if pts[k].coincides(&pts[(k + 1) % 3]) {
            return 0.0;
        }
    }
    let mut angles = [0.0f64; 3];
    let mut interior = false;
    for k in 0..3 {
        let Ok(m) = SpecialUnitary::moving_to_origin(&pts[k]) else {
            continue;
        };
        interior = true;
        let next = m.apply(&pts[(k + 1) % 3]).chart();
        let prev = m.apply(&pts[(k + 2) % 3]).chart();
        angles[k] = signed_angle(next, prev);
    }
    if !interior {
        return match is_positive_cycle(&pts) {
            Ok(CycleOrientation::Positive) => PI,
            Ok(CycleOrientation::Negative) => -PI,
            _ => 0.0,
        };
    }
    let orientation: f64 = angles.iter().map(|t| t.sin()).sum();
    if orientation == 0.0 {
        return 0.0;
    }
    let defect = (PI - angles.iter().map(|t| t.abs()).sum::<f64>()).max(0.0);
    defect.copysign(orientation)
}

/// Angle from direction `from` to direction `to`, in `(-pi, pi]`.
fn signed_angle(from: Complex64, to: Complex64) -> f64 {
    (to * from.conj()).arg()
}

/// Fan sum `sum_k Area(c, p_k, p_{k+1})` over the closed cycle of `vertices`.
pub fn polygon_area(vertices: &[ProjPoint], basepoint: &ProjPoint) -> f64 {
    let n = vertices.len();
    (0..n)
        .map(|k| triangle_area(basepoint, &vertices[k], &vertices[(k + 1) % n]))
        .sum()
}

/// Interior angle at `vertex` between the geodesics to `prev` and `next`, in `[0, pi]`.
pub fn interior_angle(prev: &ProjPoint, vertex: &ProjPoint, next: &ProjPoint) -> Option<f64> {
    let m = SpecialUnitary::moving_to_origin(vertex).ok()?;
    let a = m.apply(prev).chart();
    let b = m.apply(next).chart();
    Some(signed_angle(a, b).abs())
}
