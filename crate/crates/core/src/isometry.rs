//! `SU(1,1)` lifts of orientation-preserving disc isometries.
//!
//! Matrices have the shape `[[a, b], [conj(b), conj(a)]]` with
//! `|a|^2 - |b|^2 = 1`, so they are stored as the pair `(a, b)`. Products keep
//! the sign of the lift; nothing is silently projectivized.

use std::ops::{Mul, Neg};

use num_complex::Complex64;

use crate::config::tolerances;
use crate::disc::{pairing, Geodesic, ProjPoint};
use crate::error::{Error, Result};

/// Sign `±1` of a relation or of a lift.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_i8(v: i8) -> Option<Self> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpecialUnitary {
    a: Complex64,
    b: Complex64,
}

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

impl SpecialUnitary {
    pub const IDENTITY: SpecialUnitary = SpecialUnitary { a: ONE, b: ZERO };

    /// Checked constructor: `|a|^2 - |b|^2` must be 1 within `1e-9` (relative).
    pub fn new(a: Complex64, b: Complex64) -> Result<Self> {
        let det = a.norm_sqr() - b.norm_sqr();
        if !(a.is_finite() && b.is_finite()) {
            return Err(Error::NonFinite);
        }
        if (det - 1.0).abs() > 1e-9 * (a.norm_sqr() + b.norm_sqr()).max(1.0) {
            return Err(Error::NotSpecialUnitary(det));
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> Complex64 {
        self.a
    }

    pub fn b(&self) -> Complex64 {
        self.b
    }

    pub fn matrix(&self) -> [[Complex64; 2]; 2] {
        [[self.a, self.b], [self.b.conj(), self.a.conj()]]
    }

    /// `a + conj(a)`, always real.
    pub fn trace(&self) -> f64 {
        2.0 * self.a.re
    }

    pub fn inverse(&self) -> Self {
        Self {
            a: self.a.conj(),
            b: -self.b,
        }
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn distance(&self, other: &SpecialUnitary) -> f64 {
        (self.a - other.a).norm().max((self.b - other.b).norm())
    }

    /// Entrywise distance to `sign * Id`.
    pub fn distance_to_scalar(&self, sign: Sign) -> f64 {
        let s = sign.value();
        (self.a - s).norm().max(self.b.norm())
    }

    pub fn apply(&self, p: &ProjPoint) -> ProjPoint {
        let (v1, v2) = p.coords();
        let w1 = self.a * v1 + self.b * v2;
        let w2 = self.b.conj() * v1 + self.a.conj() * v2;
        ProjPoint::new(w1, w2).expect("invertible matrix maps nonzero vectors to nonzero vectors")
    }

    pub fn apply_geodesic(&self, g: &Geodesic) -> Geodesic {
        Geodesic::new(self.apply(&g.src()), self.apply(&g.dst()))
            .expect("isometries preserve distinct ideal points")
    }

    /// Conjugate `self * m * self^{-1}`.
    pub fn conjugate(&self, m: &SpecialUnitary) -> SpecialUnitary {
        *self * *m * self.inverse()
    }

    /// Chart rotation `z -> e^{i phi} z`.
    pub fn rotation(phi: f64) -> Self {
        Self {
            a: Complex64::from_polar(1.0, phi / 2.0),
            b: ZERO,
        }
    }

    /// Translation by hyperbolic distance `d` along the real diameter, towards `+1`.
    pub fn translation(d: f64) -> Self {
        Self {
            a: Complex64::new((d / 2.0).cosh(), 0.0),
            b: Complex64::new((d / 2.0).sinh(), 0.0),
        }
    }

    /// The transvection taking a disc point to the chart origin.
    pub fn moving_to_origin(p: &ProjPoint) -> Result<Self> {
        if !p.is_negative() {
            return Err(Error::NotInDisc);
        }
        // With <p,p> = -1 and v2 > 0 the matrix is [[v2, -v1], [-conj(v1), v2]].
        let (v1, v2) = p.coords();
        Ok(Self { a: v2, b: -v1 })
    }

    /// An isometry taking `-1` to `u` and `1` to `w`, i.e. the real diameter
    /// onto the oriented geodesic from `u` to `w`.
    pub fn frame(u: &ProjPoint, w: &ProjPoint) -> Result<Self> {
        if !(u.is_isotropic() && w.is_isotropic()) {
            return Err(Error::NotIsotropic);
        }
        if u.coincides(w) {
            return Err(Error::CoincidentPoints);
        }
        let alpha = u.angle();
        let beta = w.angle();
        let delta = (alpha - beta).rem_euclid(std::f64::consts::TAU);
        let theta = (std::f64::consts::PI - delta) / 2.0;
        let s = (theta / 2.0).tan();
        let k = 1.0 / (1.0 - s * s).sqrt();
        let tilt = Self {
            a: Complex64::new(k, 0.0),
            b: Complex64::new(0.0, s * k),
        };
        Ok(Self::rotation(beta - theta) * tilt)
    }

    /// Frame of `g` that also takes the origin to `p`, a point of `g`.
    pub fn frame_at(g: &Geodesic, p: &ProjPoint) -> Result<Self> {
        let f = Self::frame(&g.src(), &g.dst())?;
        let t = f.inverse().apply(p).chart().re;
        let d = 2.0 * t.clamp(-1.0, 1.0).atanh();
        Ok(f * Self::translation(d))
    }
}

impl Mul for SpecialUnitary {
    type Output = SpecialUnitary;
    fn mul(self, rhs: SpecialUnitary) -> SpecialUnitary {
        SpecialUnitary {
            a: self.a * rhs.a + self.b * rhs.b.conj(),
            b: self.a * rhs.b + self.b * rhs.a.conj(),
        }
    }
}

impl Neg for SpecialUnitary {
    type Output = SpecialUnitary;
    fn neg(self) -> SpecialUnitary {
        SpecialUnitary {
            a: -self.a,
            b: -self.b,
        }
    }
}

pub fn apply(m: &SpecialUnitary, p: &ProjPoint) -> ProjPoint {
    m.apply(p)
}

/// `alpha Id + (conj(alpha) - alpha) p p^* J / <p,p>`: the rotation about
/// `center` with parameter `alpha`.
pub fn elliptic(center: &ProjPoint, alpha: Complex64) -> Result<SpecialUnitary> {
    if !center.is_negative() {
        return Err(Error::NotInDisc);
    }
    if (alpha.norm() - 1.0).abs() > 1e-9 {
        return Err(Error::BadParameter(format!(
            "|alpha| = {} is not 1",
            alpha.norm()
        )));
    }
    if (alpha - ONE).norm() < 1e-9 || (alpha + ONE).norm() < 1e-9 {
        return Err(Error::BadParameter("alpha = ±1 gives a scalar".into()));
    }
    let (p1, p2) = center.coords();
    let n = pairing(center, center).re;
    let c = alpha.conj() - alpha;
    Ok(SpecialUnitary {
        a: alpha + c * p1.norm_sqr() / n,
        b: -c * p1 * p2.conj() / n,
    })
}

/// The lift `elliptic(center, i)` of the half-turn about `center`; it squares to `-Id`.
pub fn reflection(center: &ProjPoint) -> Result<SpecialUnitary> {
    elliptic(center, I)
}

/// Product `R^{q_k} ... R^{q_1}` of reflections in the listed order.
pub fn reflection_product<'a>(
    centers: impl IntoIterator<Item = &'a ProjPoint>,
) -> Result<SpecialUnitary> {
    let mut m = SpecialUnitary::IDENTITY;
    for q in centers {
        m = reflection(q)? * m;
    }
    Ok(m)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IsometryKind {
    Identity,
    Elliptic,
    Parabolic,
    Hyperbolic,
}

pub fn classify_isometry(m: &SpecialUnitary) -> IsometryKind {
    let tol = tolerances().cls;
    if m.distance_to_scalar(Sign::Plus) < tol || m.distance_to_scalar(Sign::Minus) < tol {
        return IsometryKind::Identity;
    }
    let t = m.trace().abs();
    if t < 2.0 - tol {
        IsometryKind::Elliptic
    } else if t > 2.0 + tol {
        IsometryKind::Hyperbolic
    } else {
        IsometryKind::Parabolic
    }
}

/// `(attractor, repeller)` of a hyperbolic element.
pub fn hyperbolic_fixed_points(m: &SpecialUnitary) -> Result<(ProjPoint, ProjPoint)> {
    if classify_isometry(m) != IsometryKind::Hyperbolic {
        return Err(Error::NotHyperbolic);
    }
    let t = m.trace();
    let root = (t * t - 4.0).sqrt();
    // Stable pair of real eigenvalues with product 1.
    let big = (t + t.signum() * root) / 2.0;
    let small = 1.0 / big;
    if (big.abs() - small.abs()).abs() < 1e-9 {
        return Err(Error::NotHyperbolic);
    }
    let eigvec = |lambda: f64| -> Result<ProjPoint> {
        let l = Complex64::new(lambda, 0.0);
        let c1 = (m.b, l - m.a);
        let c2 = (l - m.a.conj(), m.b.conj());
        let n1 = c1.0.norm_sqr() + c1.1.norm_sqr();
        let n2 = c2.0.norm_sqr() + c2.1.norm_sqr();
        let (v1, v2) = if n1 >= n2 { c1 } else { c2 };
        let p = ProjPoint::new(v1, v2)?;
        if p.is_isotropic() {
            Ok(p)
        } else {
            Err(Error::NotHyperbolic)
        }
    };
    Ok((eigvec(big)?, eigvec(small)?))
}

/// Solves `m = sign * reflection(center)`.
pub fn extract_reflection_center(m: &SpecialUnitary) -> Result<(ProjPoint, Sign)> {
    let alpha = m.a.im;
    if alpha == 0.0 || m.a.re.abs() > 1e-6 * m.a.norm().max(1.0) {
        return Err(Error::NotAReflection);
    }
    let sign = if alpha > 0.0 { Sign::Plus } else { Sign::Minus };
    let z = I * sign.value() * m.b / (1.0 + alpha.abs());
    if z.norm() >= 1.0 {
        return Err(Error::NotAReflection);
    }
    let center = ProjPoint::from_chart(z);
    let r = reflection(&center)?;
    let check = if sign == Sign::Plus { r } else { -r };
    if check.distance(m) > 1e-8 * m.a.norm().max(1.0) {
        return Err(Error::NotAReflection);
    }
    Ok((center, sign))
}
