//! Maximal representations from boundary points, and back.
//!
//! A maximal relation of length `n` is conjugated so that its i-cycle starts
//! with `-1, 1` and `q_i = 0`; the remaining `2n - 6` cycle points lie on the
//! open upper semicircle and determine the relation.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use crate::area::interior_angle;
use crate::disc::{
    geodesic_through, intersect_geodesics, is_positive_cycle, CycleOrientation, Geodesic, ProjPoint,
};
use crate::error::{Error, Result};
use crate::isometry::{extract_reflection_center, reflection_product, Sign, SpecialUnitary};
use crate::representation::Representation;

/// Boundary angles (radians) of `v^i` and `w^i` in the normalized i-cycle.
pub const SECTION_START: (f64, f64) = (PI, 0.0);

/// `2n - 6` points of the open upper semicircle that, after `-1, 1`, form a positive cycle.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryCoordinates {
    n: usize,
    z: Vec<ProjPoint>,
}

impl BoundaryCoordinates {
    pub fn new(n: usize, z: Vec<ProjPoint>) -> Result<Self> {
        if n < 5 {
            return Err(Error::BadLength(n));
        }
        if z.len() != 2 * n - 6 {
            return Err(Error::Format(format!(
                "length {n} needs {} boundary points, got {}",
                2 * n - 6,
                z.len()
            )));
        }
        if z.iter().any(|p| !p.is_isotropic()) {
            return Err(Error::NotIsotropic);
        }
        if z.iter()
            .any(|p| p.chart().im.is_nan() || p.chart().im <= 0.0)
        {
            return Err(Error::NotPositiveCycle);
        }
        let mut cycle = vec![
            ProjPoint::on_boundary(SECTION_START.0),
            ProjPoint::on_boundary(SECTION_START.1),
        ];
        cycle.extend_from_slice(&z);
        match is_positive_cycle(&cycle) {
            Ok(CycleOrientation::Positive) => Ok(Self { n, z }),
            Ok(_) | Err(Error::DegenerateCycle) => Err(Error::NotPositiveCycle),
            Err(e) => Err(e),
        }
    }

    pub fn from_degrees(n: usize, degrees: &[f64]) -> Result<Self> {
        Self::new(
            n,
            degrees
                .iter()
                .map(|&d| ProjPoint::on_boundary_deg(d))
                .collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> &[ProjPoint] {
        &self.z
    }

    pub fn degrees(&self) -> Vec<f64> {
        self.z.iter().map(|p| p.angle().to_degrees()).collect()
    }
}

fn crossing(
    a: &ProjPoint,
    b: &ProjPoint,
    c: &ProjPoint,
    d: &ProjPoint,
    k: usize,
) -> Result<ProjPoint> {
    let g1 = Geodesic::new(*a, *b)?;
    let g2 = Geodesic::new(*c, *d)?;
    intersect_geodesics(&g1, &g2)?.ok_or(Error::IntersectionMissing(k))
}

/// The maximal relation with base center `q_0 = 0` whose normalized 0-cycle is
/// `-1, 1, z_1, ..., z_{2n-6}`.
pub fn from_boundary(coords: &BoundaryCoordinates) -> Result<Representation> {
    let n = coords.n;
    let z = &coords.z;
    let minus = ProjPoint::on_boundary(PI);
    let plus = ProjPoint::on_boundary(0.0);
    let mut q = Vec::with_capacity(n);
    q.push(ProjPoint::ORIGIN);
    q.push(crossing(&minus, &z[0], &plus, &z[1], 1)?);
    for k in 2..=n - 3 {
        q.push(crossing(
            &z[2 * k - 4],
            &z[2 * k - 2],
            &z[2 * k - 3],
            &z[2 * k - 1],
            k,
        )?);
    }
    q.push(crossing(
        &z[2 * n - 8],
        &minus,
        &z[2 * n - 7],
        &plus,
        n - 2,
    )?);
    // The last reflection must undo the product so far: R^x = ε P^{-1}.
    let partial = reflection_product(&q)?;
    let (x, epsilon) =
        extract_reflection_center(&partial.inverse()).map_err(|_| Error::ClosingCenterOffAxis)?;
    let c = x.chart();
    if c.im.abs() > 1e-8 || c.re >= 0.0 {
        return Err(Error::ClosingCenterOffAxis);
    }
    q.push(x);
    Representation::from_centers(q, epsilon)
}

/// Conjugator taking `v^i, w^i` to `v_to, w_to` and `q_i` to the origin.
/// `v_to` and `w_to` must be antipodal.
pub fn normalizing_conjugator(
    rho: &Representation,
    i: usize,
    v_to: &ProjPoint,
    w_to: &ProjPoint,
) -> Result<SpecialUnitary> {
    let cycle = rho.i_cycle(i)?;
    let (v, w) = (cycle.points[0], cycle.points[1]);
    let here = SpecialUnitary::frame_at(&Geodesic::new(v, w)?, &rho.centers()[i])?;
    let there = SpecialUnitary::frame_at(&Geodesic::new(*v_to, *w_to)?, &ProjPoint::ORIGIN)?;
    Ok(there * here.inverse())
}

/// Coordinates of a maximal relation with respect to base index `i`, and the
/// conjugator used. Relations of negative area have a negative i-cycle; use
/// [`Representation::reverse`] for them.
pub fn to_boundary(
    rho: &Representation,
    i: usize,
) -> Result<(BoundaryCoordinates, SpecialUnitary)> {
    if !rho.is_maximal() {
        return Err(Error::NotMaximal);
    }
    let n = rho.len();
    let conj = normalizing_conjugator(
        rho,
        i,
        &ProjPoint::on_boundary(SECTION_START.0),
        &ProjPoint::on_boundary(SECTION_START.1),
    )?;
    let cycle = rho.i_cycle(i)?;
    let z: Vec<ProjPoint> = cycle.points[2..].iter().map(|p| conj.apply(p)).collect();
    debug_assert_eq!(z.len(), 2 * n - 6);
    let coords = BoundaryCoordinates::new(n, z)?;
    Ok((coords, conj))
}

/// Right-angled regular `n`-gon centered at the origin; vertices counterclockwise from angle 0.
pub fn regular_polygon(n: usize) -> Result<Representation> {
    if n < 5 {
        return Err(Error::BadLength(n));
    }
    let r = regular_radius(n);
    let centers: Vec<ProjPoint> = (0..n)
        .map(|k| {
            ProjPoint::from_chart(num_complex::Complex64::from_polar(
                r,
                TAU * k as f64 / n as f64,
            ))
        })
        .collect();
    let product = reflection_product(&centers)?;
    let epsilon = if product.a().re >= 0.0 {
        Sign::Plus
    } else {
        Sign::Minus
    };
    Representation::from_centers(centers, epsilon)
}

/// Chart radius of the regular right-angled `n`-gon, by bisection on the vertex angle.
pub fn regular_radius(n: usize) -> f64 {
    let angle = |r: f64| {
        let p = |k: f64| {
            ProjPoint::from_chart(num_complex::Complex64::from_polar(r, TAU * k / n as f64))
        };
        interior_angle(&p(-1.0), &p(0.0), &p(1.0)).expect("vertex is a disc point")
    };
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if angle(mid) > FRAC_PI_2 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Interior angles of the closed polygon through `vertices`.
pub fn polygon_angles(vertices: &[ProjPoint]) -> Vec<f64> {
    let n = vertices.len();
    (0..n)
        .map(|k| {
            interior_angle(
                &vertices[(k + n - 1) % n],
                &vertices[k],
                &vertices[(k + 1) % n],
            )
            .expect("polygon vertices are disc points")
        })
        .collect()
}

/// Equally spaced upper-semicircle angles, the default sample for length `n`.
pub fn equally_spaced(n: usize) -> Result<BoundaryCoordinates> {
    let m = 2 * n.max(5) - 6;
    let degrees: Vec<f64> = (1..=m).map(|k| 180.0 * k as f64 / (m + 1) as f64).collect();
    BoundaryCoordinates::from_degrees(n, &degrees)
}

/// The geodesic through the base center along which the closing center lies.
pub fn section_axis() -> Geodesic {
    geodesic_through(
        &ProjPoint::on_boundary(SECTION_START.0),
        &ProjPoint::on_boundary(SECTION_START.1),
    )
    .expect("distinct ideal points")
}
