//! Random instances: boundary coordinates, maximal relations, bendings, isometries.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::Rng;

use crate::bending::{apply_bending, BendingMove};
use crate::disc::ProjPoint;
use crate::error::Result;
use crate::isometry::SpecialUnitary;
use crate::representation::{concatenate, Representation};
use crate::teichmuller::{from_boundary, BoundaryCoordinates};

/// Centers produced by [`scramble`] stay within this chart radius
/// (or within the input's own radius when that is larger).
pub const SCRAMBLE_RADIUS: f64 = 0.95;

/// A point uniformly distributed in the chart disc of radius `radius`.
pub fn disc_point<R: Rng + ?Sized>(rng: &mut R, radius: f64) -> ProjPoint {
    let r = radius * rng.random::<f64>().sqrt();
    ProjPoint::from_chart(Complex64::from_polar(r, TAU * rng.random::<f64>()))
}

pub fn boundary_point<R: Rng + ?Sized>(rng: &mut R) -> ProjPoint {
    ProjPoint::on_boundary(TAU * rng.random::<f64>())
}

/// `2n - 6` upper-semicircle angles with random gaps, no gap below half the mean.
pub fn random_boundary<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Result<BoundaryCoordinates> {
    let m = 2 * n - 6;
    let slots = m + 1;
    let floor = 180.0 / slots as f64 / 2.0;
    let weights: Vec<f64> = (0..slots)
        .map(|_| -(1.0 - rng.random::<f64>()).ln())
        .collect();
    let total: f64 = weights.iter().sum();
    let spare = 180.0 - floor * slots as f64;
    let mut angle = 0.0;
    let mut degrees = Vec::with_capacity(m);
    for w in &weights[..m] {
        angle += floor + spare * w / total;
        degrees.push(angle);
    }
    BoundaryCoordinates::from_degrees(n, &degrees)
}

/// A maximal relation of length `n` with random coordinates.
pub fn random_maximal<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Result<Representation> {
    from_boundary(&random_boundary(rng, n)?)
}

/// A random element of `SU(1,1)`: a rotation followed by a transvection of length below `reach`.
pub fn random_isometry<R: Rng + ?Sized>(rng: &mut R, reach: f64) -> SpecialUnitary {
    let d = reach * rng.random::<f64>();
    let phi = TAU * rng.random::<f64>();
    let psi = TAU * rng.random::<f64>();
    SpecialUnitary::rotation(phi) * SpecialUnitary::translation(d) * SpecialUnitary::rotation(psi)
}

pub fn random_cancellation<R: Rng + ?Sized>(rng: &mut R, radius: f64) -> Result<Representation> {
    Representation::cancellation(disc_point(rng, radius))
}

fn max_radius(rho: &Representation) -> f64 {
    rho.centers()
        .iter()
        .map(|q| q.chart().norm())
        .fold(0.0, f64::max)
}

/// One random bending with `|s| <= max_s` that keeps the centers within the
/// scramble radius; `None` if no attempt qualifies.
pub fn random_move<R: Rng + ?Sized>(
    rng: &mut R,
    rho: &Representation,
    max_s: f64,
) -> Option<(Representation, BendingMove)> {
    let n = rho.len();
    if n < 3 {
        return None;
    }
    let bound = SCRAMBLE_RADIUS.max(max_radius(rho));
    let mut scale = max_s;
    for _ in 0..64 {
        let index = rng.random_range(0..n);
        let s = scale * (2.0 * rng.random::<f64>() - 1.0);
        let mv = BendingMove::new(index, s);
        if let Ok(next) = apply_bending(rho, mv) {
            if max_radius(&next) <= bound {
                return Some((next, mv));
            }
        }
        scale *= 0.9;
    }
    None
}

/// Applies up to `count` random bendings.
pub fn scramble<R: Rng + ?Sized>(
    rng: &mut R,
    rho: &Representation,
    count: usize,
    max_s: f64,
) -> (Representation, Vec<BendingMove>) {
    let mut cur = rho.clone();
    let mut moves = Vec::with_capacity(count);
    for _ in 0..count {
        if let Some((next, mv)) = random_move(rng, &cur, max_s) {
            cur = next;
            moves.push(mv);
        }
    }
    (cur, moves)
}

/// `cancellation ⊙_0 core` with a random cancellation center.
pub fn cancellation_with_core<R: Rng + ?Sized>(
    rng: &mut R,
    core: &Representation,
) -> Result<Representation> {
    let c = random_cancellation(rng, 0.6)?;
    concatenate(&c, core, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn boundary_samples_are_valid() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for n in 5..=10 {
            let c = random_boundary(&mut rng, n).unwrap();
            assert_eq!(c.points().len(), 2 * n - 6);
        }
    }

    #[test]
    fn scramble_keeps_the_relation() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        let rho = random_maximal(&mut rng, 6).unwrap();
        let (out, moves) = scramble(&mut rng, &rho, 20, 1.0);
        assert!(!moves.is_empty());
        assert!(out.residual() < 1e-8);
        assert!((out.area() - rho.area()).abs() < 1e-6);
    }
}
