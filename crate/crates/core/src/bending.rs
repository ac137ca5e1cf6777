//! Bendings: sliding a consecutive pair of centers along their common geodesic.
//!
//! `B(s)` translates by signed hyperbolic distance `s` along `G<q_i, q_{i+1}>`
//! oriented from `q_i` to `q_{i+1}`. It commutes with `R^{q_{i+1}} R^{q_i}`,
//! so replacing the pair by its image keeps the relation.

use serde::{Deserialize, Serialize};

use crate::disc::{geodesic_through, on_geodesic, Geodesic, ProjPoint};
use crate::error::{Error, Result};
use crate::isometry::SpecialUnitary;
use crate::representation::Representation;

/// Bend the pair `(q_index, q_{index+1})` (indices mod n) by `s`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BendingMove {
    pub index: usize,
    pub s: f64,
}

impl BendingMove {
    pub fn new(index: usize, s: f64) -> Self {
        Self { index, s }
    }
}

/// Which center of the pair [`bend_to_target`] places on the target.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Which {
    /// `q_i`
    Lower,
    /// `q_{i+1}`
    Upper,
}

/// Translation by `s` along `G<q1, q2>`, positive towards `q2`.
pub fn bending_group(q1: &ProjPoint, q2: &ProjPoint, s: f64) -> Result<SpecialUnitary> {
    let g = geodesic_through(q1, q2)?;
    Ok(translation_along(&g, s))
}

pub(crate) fn translation_along(g: &Geodesic, s: f64) -> SpecialUnitary {
    let f = SpecialUnitary::frame(&g.src(), &g.dst())
        .expect("geodesic endpoints are distinct ideal points");
    f * SpecialUnitary::translation(s) * f.inverse()
}

/// Signed arclength coordinate of a point of `g`, measured from the
/// foot of the frame origin.
pub(crate) fn axis_coordinate(g: &Geodesic, x: &ProjPoint) -> f64 {
    let f = SpecialUnitary::frame(&g.src(), &g.dst())
        .expect("geodesic endpoints are distinct ideal points");
    let t = f.inverse().apply(x).chart().re;
    2.0 * t.clamp(-1.0, 1.0).atanh()
}

/// The point of `g` at signed coordinate `c`.
pub(crate) fn axis_point(g: &Geodesic, c: f64) -> ProjPoint {
    let f = SpecialUnitary::frame(&g.src(), &g.dst())
        .expect("geodesic endpoints are distinct ideal points");
    f.apply(&ProjPoint::disc((c / 2.0).tanh(), 0.0))
}

fn pair_indices(rho: &Representation, index: usize) -> Result<(usize, usize)> {
    let n = rho.len();
    if index >= n {
        return Err(Error::BadIndex { index, len: n });
    }
    if n == 2 {
        return Err(Error::CoincidentPoints);
    }
    Ok((index, (index + 1) % n))
}

/// Replaces `q_i, q_{i+1}` by `B(s) q_i, B(s) q_{i+1}`; the wrap pair
/// `(q_{n-1}, q_0)` is bent in place.
pub fn apply_bending(rho: &Representation, mv: BendingMove) -> Result<Representation> {
    let (i, j) = pair_indices(rho, mv.index)?;
    if mv.s == 0.0 {
        return Ok(rho.clone());
    }
    let b = bending_group(&rho.centers()[i], &rho.centers()[j], mv.s)?;
    let mut centers = rho.centers().to_vec();
    centers[i] = b.apply(&centers[i]);
    centers[j] = b.apply(&centers[j]);
    Representation::relation(centers, rho.epsilon())
}

/// Applies moves in order.
pub fn apply_moves(rho: &Representation, moves: &[BendingMove]) -> Result<Representation> {
    moves
        .iter()
        .try_fold(rho.clone(), |r, &mv| apply_bending(&r, mv))
}

/// The bending of pair `i` that puts the selected center on `target`.
pub fn bend_to_target(
    rho: &Representation,
    i: usize,
    target: &ProjPoint,
    which: Which,
) -> Result<(Representation, BendingMove)> {
    let (a, b) = pair_indices(rho, i)?;
    let (qa, qb) = (rho.centers()[a], rho.centers()[b]);
    let g = geodesic_through(&qa, &qb)?;
    if !target.is_negative() || !on_geodesic(target, &g) {
        return Err(Error::TargetOffGeodesic);
    }
    let selected = match which {
        Which::Lower => qa,
        Which::Upper => qb,
    };
    let s = axis_coordinate(&g, target) - axis_coordinate(&g, &selected);
    let mv = BendingMove::new(i, s);
    let mut out = apply_bending(rho, mv)?;
    // Land exactly on the target; the move is within rounding of doing so.
    let slot = if which == Which::Lower { a } else { b };
    let mut centers = out.centers().to_vec();
    if centers[slot].separation(target) < 1e-8 {
        centers[slot] = *target;
        out = Representation::relation(centers, rho.epsilon())?;
    }
    Ok((out, mv))
}
