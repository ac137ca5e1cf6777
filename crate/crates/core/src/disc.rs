//! Points of the Riemann–Poincaré sphere and geodesics of the disc.
//!
//! `V = C^2` carries the Hermitian form `<v, w> = v1 conj(w1) - v2 conj(w2)`.
//! Negative points are the Poincaré disc (chart `z = v1 / v2`, `|z| < 1`),
//! isotropic points its absolute and positive points the outside.
//!
//! Representatives are normalized on construction: negative points satisfy
//! `<p, p> = -1` with `v2` real positive, isotropic points have `v2 = 1` and
//! `|v1| = 1`, positive points satisfy `<p, p> = 1` with `v1` real positive.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::config::tolerances;
use crate::error::{Error, Result};
use crate::isometry::SpecialUnitary;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PointKind {
    Negative,
    Isotropic,
    Positive,
}

/// A point of the projectivized Hermitian plane, stored through a normalized representative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProjPoint {
    v1: Complex64,
    v2: Complex64,
    kind: PointKind,
    /// `v1 / v2` of the representative given at construction, so chart
    /// inputs are returned bit for bit.
    z: Complex64,
}

impl ProjPoint {
    /// The chart origin, `(0, 1)`.
    pub const ORIGIN: ProjPoint = ProjPoint {
        v1: Complex64::new(0.0, 0.0),
        v2: Complex64::new(1.0, 0.0),
        kind: PointKind::Negative,
        z: Complex64::new(0.0, 0.0),
    };

    /// Builds a point from any nonzero representative and normalizes it.
    pub fn new(v1: Complex64, v2: Complex64) -> Result<Self> {
        if !(v1.is_finite() && v2.is_finite()) {
            return Err(Error::NonFinite);
        }
        let scale = v1.norm_sqr() + v2.norm_sqr();
        if scale == 0.0 {
            return Err(Error::ZeroVector);
        }
        let form = v1.norm_sqr() - v2.norm_sqr();
        let rel = form / scale;
        let z = if v2 == Complex64::new(0.0, 0.0) {
            Complex64::new(f64::INFINITY, 0.0)
        } else {
            v1 / v2
        };
        let tol = tolerances().iso;
        if rel < -tol {
            let k = (-form).sqrt() * v2.norm();
            let phase = v2.conj();
            Ok(Self {
                v1: v1 * phase / k,
                v2: Complex64::new(v2.norm() * v2.norm() / k, 0.0),
                kind: PointKind::Negative,
                z,
            })
        } else if rel > tol {
            let k = form.sqrt() * v1.norm();
            let phase = v1.conj();
            Ok(Self {
                v1: Complex64::new(v1.norm() * v1.norm() / k, 0.0),
                v2: v2 * phase / k,
                kind: PointKind::Positive,
                z,
            })
        } else {
            let unit = z / z.norm();
            Ok(Self {
                v1: unit,
                v2: Complex64::new(1.0, 0.0),
                kind: PointKind::Isotropic,
                z: unit,
            })
        }
    }

    /// The point with chart coordinate `z`. Panics on non-finite input.
    pub fn from_chart(z: Complex64) -> Self {
        Self::try_from_chart(z).expect("finite chart coordinate")
    }

    pub fn try_from_chart(z: Complex64) -> Result<Self> {
        Self::new(z, Complex64::new(1.0, 0.0))
    }

    /// Chart point `re + i im`.
    pub fn disc(re: f64, im: f64) -> Self {
        Self::from_chart(Complex64::new(re, im))
    }

    /// The isotropic point `e^{i theta}`.
    pub fn on_boundary(theta: f64) -> Self {
        let unit = Complex64::from_polar(1.0, theta);
        Self {
            v1: unit,
            v2: Complex64::new(1.0, 0.0),
            kind: PointKind::Isotropic,
            z: unit,
        }
    }

    /// The isotropic point at `degrees` around the absolute.
    pub fn on_boundary_deg(degrees: f64) -> Self {
        Self::on_boundary(degrees.to_radians())
    }

    pub fn coords(&self) -> (Complex64, Complex64) {
        (self.v1, self.v2)
    }

    pub fn kind(&self) -> PointKind {
        self.kind
    }

    pub fn is_negative(&self) -> bool {
        self.kind == PointKind::Negative
    }

    pub fn is_isotropic(&self) -> bool {
        self.kind == PointKind::Isotropic
    }

    /// Chart coordinate `v1 / v2` (infinite for the point `(1, 0)`).
    pub fn chart(&self) -> Complex64 {
        self.z
    }

    /// Argument of the chart coordinate in `[0, 2 pi)`.
    pub fn angle(&self) -> f64 {
        let a = self.chart().arg();
        if a < 0.0 {
            a + TAU
        } else {
            a
        }
    }

    /// Separation used by coincidence tests: hyperbolic distance for two disc
    /// points, Fubini–Study chordal distance otherwise.
    pub fn separation(&self, other: &ProjPoint) -> f64 {
        if self.is_negative() && other.is_negative() {
            chart_distance(self.chart(), other.chart())
        } else {
            // |v ^ w| / (|v| |w|), not sqrt(1 - cos^2) which loses half the digits
            let wedge = self.v1 * other.v2 - self.v2 * other.v1;
            let n1 = self.v1.norm_sqr() + self.v2.norm_sqr();
            let n2 = other.v1.norm_sqr() + other.v2.norm_sqr();
            wedge.norm() / (n1 * n2).sqrt()
        }
    }

    /// Projective equality within `tol_sep`.
    pub fn coincides(&self, other: &ProjPoint) -> bool {
        self.separation(other) < tolerances().sep
    }
}

/// Hyperbolic distance between two chart points of the open disc.
fn chart_distance(z: Complex64, w: Complex64) -> f64 {
    let ratio = ((z - w) / (Complex64::new(1.0, 0.0) - w.conj() * z)).norm();
    2.0 * ratio.min(1.0).atanh()
}

/// The Hermitian form `<p, q>` on the stored representatives.
pub fn pairing(p: &ProjPoint, q: &ProjPoint) -> Complex64 {
    p.v1 * q.v1.conj() - p.v2 * q.v2.conj()
}

/// Sign class of `<p, p>` (fixed at normalization, with the `tol_iso` band).
pub fn classify_point(p: &ProjPoint) -> PointKind {
    p.kind
}

/// `<p,q><q,p> / (<p,p><q,q>)`; equals `cosh^2(dist / 2)` for disc points.
pub fn tance(p: &ProjPoint, q: &ProjPoint) -> Result<f64> {
    if p.is_isotropic() || q.is_isotropic() {
        return Err(Error::IsotropicArgument);
    }
    let pq = pairing(p, q);
    Ok(pq.norm_sqr() / (pairing(p, p).re * pairing(q, q).re))
}

/// Hyperbolic distance, `2 arccosh(sqrt(tance))`, evaluated in the chart for accuracy.
pub fn distance(p: &ProjPoint, q: &ProjPoint) -> Result<f64> {
    if !(p.is_negative() && q.is_negative()) {
        return Err(Error::NotInDisc);
    }
    Ok(chart_distance(p.chart(), q.chart()))
}

/// An oriented geodesic, given by its ideal endpoints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Geodesic {
    src: ProjPoint,
    dst: ProjPoint,
}

impl Geodesic {
    pub fn new(src: ProjPoint, dst: ProjPoint) -> Result<Self> {
        if !(src.is_isotropic() && dst.is_isotropic()) {
            return Err(Error::NotIsotropic);
        }
        if src.coincides(&dst) {
            return Err(Error::CoincidentPoints);
        }
        Ok(Self { src, dst })
    }

    /// The diameter from `-1` to `1`.
    pub fn real_axis() -> Self {
        Self {
            src: ProjPoint::on_boundary(PI),
            dst: ProjPoint::on_boundary(0.0),
        }
    }

    pub fn src(&self) -> ProjPoint {
        self.src
    }

    pub fn dst(&self) -> ProjPoint {
        self.dst
    }

    pub fn reversed(&self) -> Self {
        Self {
            src: self.dst,
            dst: self.src,
        }
    }

    /// Same point set, either orientation.
    pub fn same_line(&self, other: &Geodesic) -> bool {
        (self.src.coincides(&other.src) && self.dst.coincides(&other.dst))
            || (self.src.coincides(&other.dst) && self.dst.coincides(&other.src))
    }

    /// Signed incidence measure `sin arg <x,dst><dst,src><src,x>`: positive on
    /// the left of travel, zero on the line, `±1` at ideal points off the line.
    pub fn side_value(&self, x: &ProjPoint) -> f64 {
        let t = pairing(x, &self.dst) * pairing(&self.dst, &self.src) * pairing(&self.src, x);
        let m = t.norm();
        if m == 0.0 {
            0.0
        } else {
            t.im / m
        }
    }
}

/// The geodesic through `p` and `q`, oriented so that it meets `p` before `q`.
pub fn geodesic_through(p: &ProjPoint, q: &ProjPoint) -> Result<Geodesic> {
    for x in [p, q] {
        if x.kind == PointKind::Positive {
            return Err(Error::NotInDisc);
        }
    }
    if p.coincides(q) {
        return Err(Error::CoincidentPoints);
    }
    match (p.is_negative(), q.is_negative()) {
        (false, false) => Geodesic::new(*p, *q),
        (true, _) => {
            let to0 = SpecialUnitary::moving_to_origin(p)?;
            let back = to0.inverse();
            let image = to0.apply(q).chart();
            let dir = image / image.norm();
            Geodesic::new(
                back.apply(&ProjPoint::on_boundary((-dir).arg())),
                back.apply(&ProjPoint::on_boundary(dir.arg())),
            )
        }
        (false, true) => {
            let to0 = SpecialUnitary::moving_to_origin(q)?;
            let back = to0.inverse();
            let dir = to0.apply(p).chart();
            Geodesic::new(*p, back.apply(&ProjPoint::on_boundary((-dir).arg())))
        }
    }
}

/// Whether `x` lies on the point set of `g`, within `tol_geo`.
pub fn on_geodesic(x: &ProjPoint, g: &Geodesic) -> bool {
    if x.is_isotropic() && (x.coincides(&g.src) || x.coincides(&g.dst)) {
        return true;
    }
    g.side_value(x).abs() <= tolerances().geo
}

/// Which half-space of an oriented geodesic a point lies in. `Plus` is the
/// left of travel from `src` to `dst`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Plus,
    Minus,
    On,
}

impl Side {
    pub fn opposite(self) -> Self {
        match self {
            Side::Plus => Side::Minus,
            Side::Minus => Side::Plus,
            Side::On => Side::On,
        }
    }
}

pub fn side_of(x: &ProjPoint, g: &Geodesic) -> Side {
    side_with_margin(x, g, tolerances().geo)
}

pub(crate) fn side_with_margin(x: &ProjPoint, g: &Geodesic, margin: f64) -> Side {
    if x.is_isotropic() && (x.coincides(&g.src) || x.coincides(&g.dst)) {
        return Side::On;
    }
    let v = g.side_value(x);
    if v > margin {
        Side::Plus
    } else if v < -margin {
        Side::Minus
    } else {
        Side::On
    }
}

/// Interior intersection of two geodesics, `None` when they are ultraparallel
/// or asymptotic.
pub fn intersect_geodesics(g1: &Geodesic, g2: &Geodesic) -> Result<Option<ProjPoint>> {
    if g1.same_line(g2) {
        return Err(Error::SameGeodesic);
    }
    let s_src = side_of(&g2.src, g1);
    let s_dst = side_of(&g2.dst, g1);
    let separated = matches!(
        (s_src, s_dst),
        (Side::Plus, Side::Minus) | (Side::Minus, Side::Plus)
    );
    if !separated {
        return Ok(None);
    }
    // Put g1 on the real diameter and solve Im <x,b><b,a><a,x> = 0 for x = (t, 1).
    let frame = SpecialUnitary::frame(&g1.src, &g1.dst)?;
    let inv = frame.inverse();
    let a = inv.apply(&g2.src).chart();
    let b = inv.apply(&g2.dst).chart();
    let one = Complex64::new(1.0, 0.0);
    let k = b * a.conj() - one;
    let c2 = (k * b.conj() * a).im;
    let c1 = (k * (-b.conj() - a)).im;
    let c0 = k.im;
    let t = solve_interior_root(c2, c1, c0).ok_or(Error::Inconsistent(
        "separated geodesics without an interior crossing".into(),
    ))?;
    Ok(Some(frame.apply(&ProjPoint::disc(t, 0.0))))
}

/// Root of `c2 t^2 + c1 t + c0` in `(-1, 1)`.
fn solve_interior_root(c2: f64, c1: f64, c0: f64) -> Option<f64> {
    let scale = c2.abs().max(c1.abs()).max(c0.abs());
    if scale == 0.0 {
        return None;
    }
    let (c2, c1, c0) = (c2 / scale, c1 / scale, c0 / scale);
    let mut roots = Vec::with_capacity(2);
    if c2.abs() < 1e-14 {
        if c1.abs() > 0.0 {
            roots.push(-c0 / c1);
        }
    } else {
        let disc = c1 * c1 - 4.0 * c2 * c0;
        if disc < 0.0 {
            return None;
        }
        let q = -0.5 * (c1 + c1.signum() * disc.sqrt());
        if q != 0.0 {
            roots.push(c0 / q);
        }
        roots.push(q / c2);
    }
    roots
        .into_iter()
        .filter(|t| t.abs() < 1.0)
        .min_by(|x, y| x.abs().total_cmp(&y.abs()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum CycleOrientation {
    Positive,
    Negative,
    Neither,
}

/// Cyclic orientation of distinct ideal points listed in order.
pub fn is_positive_cycle(points: &[ProjPoint]) -> Result<CycleOrientation> {
    if points.len() < 3 {
        return Err(Error::DegenerateCycle);
    }
    if points.iter().any(|p| !p.is_isotropic()) {
        return Err(Error::NotIsotropic);
    }
    let tol = tolerances().sep;
    for (k, p) in points.iter().enumerate() {
        for q in &points[k + 1..] {
            if p.separation(q) < tol {
                return Err(Error::DegenerateCycle);
            }
        }
    }
    let angles: Vec<f64> = points.iter().map(ProjPoint::angle).collect();
    let m = angles.len();
    let descents = (0..m).filter(|&k| angles[(k + 1) % m] < angles[k]).count();
    Ok(match descents {
        1 => CycleOrientation::Positive,
        d if d == m - 1 => CycleOrientation::Negative,
        _ => CycleOrientation::Neither,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn pairing_on_basis_vectors() {
        let e1 = ProjPoint::new(c(1.0, 0.0), c(0.0, 0.0)).unwrap();
        let e2 = ProjPoint::ORIGIN;
        assert_eq!(pairing(&e2, &e2), c(-1.0, 0.0));
        assert_eq!(pairing(&e1, &e2), c(0.0, 0.0));
        let half = ProjPoint::new(c(0.5, 0.0), c(1.0, 0.0)).unwrap();
        // normalized representative of (1/2, 1) is (1/2, 1) / sqrt(3/4)
        let expected = -1.0 / 0.75f64.sqrt();
        assert!((pairing(&half, &e2) - c(expected, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify_point(&ProjPoint::ORIGIN), PointKind::Negative);
        let iso = ProjPoint::new(c(1.0, 0.0), c(1.0, 0.0)).unwrap();
        assert_eq!(classify_point(&iso), PointKind::Isotropic);
        let pos = ProjPoint::new(c(1.0, 0.0), c(0.0, 0.0)).unwrap();
        assert_eq!(classify_point(&pos), PointKind::Positive);
    }

    #[test]
    fn zero_vector_is_rejected() {
        assert!(matches!(
            ProjPoint::new(c(0.0, 0.0), c(0.0, 0.0)),
            Err(Error::ZeroVector)
        ));
    }

    #[test]
    fn tance_examples() {
        let p = ProjPoint::disc(0.3, -0.2);
        assert!((tance(&p, &p).unwrap() - 1.0).abs() < 1e-14);
        let q = ProjPoint::disc(0.6, 0.0);
        assert!((tance(&ProjPoint::ORIGIN, &q).unwrap() - 1.5625).abs() < 1e-14);
        assert!(matches!(
            tance(&ProjPoint::on_boundary(0.0), &q),
            Err(Error::IsotropicArgument)
        ));
    }

    #[test]
    fn distance_from_origin() {
        let d = distance(&ProjPoint::ORIGIN, &ProjPoint::disc(0.5, 0.0)).unwrap();
        assert!((d - 2.0 * (4.0f64 / 3.0).sqrt().acosh()).abs() < 1e-14);
        assert!(matches!(
            distance(&ProjPoint::ORIGIN, &ProjPoint::on_boundary(1.0)),
            Err(Error::NotInDisc)
        ));
    }

    #[test]
    fn diameters() {
        let g = geodesic_through(&ProjPoint::ORIGIN, &ProjPoint::disc(0.5, 0.0)).unwrap();
        assert!((g.src().chart() - c(-1.0, 0.0)).norm() < 1e-14);
        assert!((g.dst().chart() - c(1.0, 0.0)).norm() < 1e-14);
        let g = geodesic_through(&ProjPoint::ORIGIN, &ProjPoint::disc(0.0, 0.5)).unwrap();
        assert!((g.src().chart() - c(0.0, -1.0)).norm() < 1e-14);
        assert!((g.dst().chart() - c(0.0, 1.0)).norm() < 1e-14);
    }

    #[test]
    fn geodesic_with_ideal_endpoint() {
        let p = ProjPoint::disc(0.2, 0.3);
        let u = ProjPoint::on_boundary(2.0);
        let g = geodesic_through(&u, &p).unwrap();
        assert!(g.src().coincides(&u));
        assert!(on_geodesic(&p, &g));
        let g = geodesic_through(&p, &u).unwrap();
        assert!(g.dst().coincides(&u));
    }

    #[test]
    fn coincident_points_have_no_geodesic() {
        let p = ProjPoint::disc(0.1, 0.1);
        assert!(matches!(
            geodesic_through(&p, &p),
            Err(Error::CoincidentPoints)
        ));
    }

    #[test]
    fn membership() {
        let g = Geodesic::real_axis();
        assert!(!on_geodesic(&ProjPoint::disc(0.0, 0.5), &g));
        assert!(on_geodesic(&ProjPoint::disc(-0.7, 0.0), &g));
        assert!(on_geodesic(&g.src(), &g));
        assert!(on_geodesic(&g.dst(), &g));
    }

    #[test]
    fn left_is_plus() {
        let g = Geodesic::real_axis();
        let x = ProjPoint::disc(0.0, 0.5);
        assert_eq!(side_of(&x, &g), Side::Plus);
        assert_eq!(side_of(&x, &g.reversed()), Side::Minus);
        assert_eq!(side_of(&ProjPoint::disc(0.3, 0.0), &g), Side::On);
    }

    #[test]
    fn intersection_examples() {
        let real = Geodesic::real_axis();
        let imag = Geodesic::new(
            ProjPoint::on_boundary_deg(270.0),
            ProjPoint::on_boundary_deg(90.0),
        )
        .unwrap();
        let x = intersect_geodesics(&real, &imag).unwrap().unwrap();
        assert!(x.chart().norm() < 1e-14);

        let upper = Geodesic::new(
            ProjPoint::on_boundary_deg(30.0),
            ProjPoint::on_boundary_deg(60.0),
        )
        .unwrap();
        assert!(intersect_geodesics(&real, &upper).unwrap().is_none());

        let crossing = Geodesic::new(
            ProjPoint::on_boundary_deg(-45.0),
            ProjPoint::on_boundary_deg(45.0),
        )
        .unwrap();
        let x = intersect_geodesics(&real, &crossing).unwrap().unwrap();
        assert!(x.chart().im.abs() < 1e-14 && x.chart().re > 0.0 && x.chart().re < 1.0);
        assert!(on_geodesic(&x, &real) && on_geodesic(&x, &crossing));

        assert!(matches!(
            intersect_geodesics(&real, &real.reversed()),
            Err(Error::SameGeodesic)
        ));
    }

    #[test]
    fn asymptotic_geodesics_do_not_intersect() {
        let real = Geodesic::real_axis();
        let g = Geodesic::new(
            ProjPoint::on_boundary(0.0),
            ProjPoint::on_boundary_deg(100.0),
        )
        .unwrap();
        assert!(intersect_geodesics(&real, &g).unwrap().is_none());
    }

    #[test]
    fn cycle_examples() {
        let pts = |degs: &[f64]| {
            degs.iter()
                .map(|&d| ProjPoint::on_boundary_deg(d))
                .collect::<Vec<_>>()
        };
        assert_eq!(
            is_positive_cycle(&pts(&[0.0, 90.0, 180.0, 270.0])).unwrap(),
            CycleOrientation::Positive
        );
        assert_eq!(
            is_positive_cycle(&pts(&[0.0, 270.0, 180.0, 90.0])).unwrap(),
            CycleOrientation::Negative
        );
        assert_eq!(
            is_positive_cycle(&pts(&[0.0, 180.0, 90.0, 270.0])).unwrap(),
            CycleOrientation::Neither
        );
        assert!(matches!(
            is_positive_cycle(&pts(&[10.0, 10.0, 50.0])),
            Err(Error::DegenerateCycle)
        ));
        assert!(matches!(
            is_positive_cycle(&[
                ProjPoint::ORIGIN,
                ProjPoint::on_boundary(0.0),
                ProjPoint::on_boundary(1.0)
            ]),
            Err(Error::NotIsotropic)
        ));
    }
}
