//! Signed reflection relations `R^{q_{n-1}} ... R^{q_0} = ε`.
//!
//! Centers are indexed from 0 and indices are taken mod `n`. Length 2 relations
//! are cancellations `R^p R^p = -1`; otherwise a public representation has
//! length at least 5. Length 4 relations are allowed only as intermediate
//! states of concatenation and reduction.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::area::polygon_area;
use crate::config::tolerances;
use crate::disc::{geodesic_through, is_positive_cycle, CycleOrientation, Geodesic, ProjPoint};
use crate::error::{Error, Result};
use crate::isometry::{
    hyperbolic_fixed_points, reflection, reflection_product, Sign, SpecialUnitary,
};
use crate::reduction::{reduce_once, ReductionCertificate};

#[derive(Debug, Clone, PartialEq)]
pub struct Representation {
    centers: Vec<ProjPoint>,
    epsilon: Sign,
}

/// Interior basepoints tried in order for the area cycle.
const BASEPOINTS: [(f64, f64); 4] = [
    (0.0, 0.0),
    (0.123, 0.0457),
    (-0.0871, 0.1613),
    (0.0312, -0.2087),
];

impl Representation {
    /// Validated constructor for lengths 2 and `>= 5`.
    pub fn from_centers(centers: Vec<ProjPoint>, epsilon: Sign) -> Result<Self> {
        match centers.len() {
            0 | 1 | 3 | 4 => return Err(Error::BadLength(centers.len())),
            2 if epsilon == Sign::Plus => return Err(Error::SignMismatch),
            _ => {}
        }
        Self::relation(centers, epsilon)
    }

    /// Same as [`from_centers`](Self::from_centers) from chart coordinates.
    pub fn from_chart(centers: &[Complex64], epsilon: Sign) -> Result<Self> {
        let pts = centers
            .iter()
            .map(|&z| ProjPoint::try_from_chart(z))
            .collect::<Result<Vec<_>>>()?;
        Self::from_centers(pts, epsilon)
    }

    /// Any checked relation of length `>= 2`, including length 4.
    pub(crate) fn relation(centers: Vec<ProjPoint>, epsilon: Sign) -> Result<Self> {
        if centers.len() < 2 {
            return Err(Error::BadLength(centers.len()));
        }
        if centers.iter().any(|q| !q.is_negative()) {
            return Err(Error::NotInDisc);
        }
        let rho = Self { centers, epsilon };
        let residual = rho.residual();
        if residual.is_nan() || residual > tolerances().rel {
            return Err(Error::RelationViolated { residual });
        }
        Ok(rho)
    }

    /// The cancellation `R^p R^p = -1`.
    pub fn cancellation(p: ProjPoint) -> Result<Self> {
        Self::from_centers(vec![p, p], Sign::Minus)
    }

    pub fn len(&self) -> usize {
        self.centers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.centers.is_empty()
    }

    pub fn centers(&self) -> &[ProjPoint] {
        &self.centers
    }

    /// Center `q_{i mod n}`.
    pub fn center(&self, i: isize) -> ProjPoint {
        self.centers[i.rem_euclid(self.len() as isize) as usize]
    }

    pub fn chart_centers(&self) -> Vec<Complex64> {
        self.centers.iter().map(ProjPoint::chart).collect()
    }

    pub fn epsilon(&self) -> Sign {
        self.epsilon
    }

    pub fn is_cancellation(&self) -> bool {
        self.len() == 2
    }

    pub fn product(&self) -> SpecialUnitary {
        reflection_product(&self.centers).expect("centers are disc points")
    }

    /// Entrywise distance of the product from `ε Id`.
    pub fn residual(&self) -> f64 {
        self.product().distance_to_scalar(self.epsilon)
    }

    /// `c_0, c_1 = R^{q_0} c_0, ..., c_{n-1} = R^{q_{n-2}} c_{n-2}`.
    pub fn cycle_of(&self, c0: &ProjPoint) -> Vec<ProjPoint> {
        let mut cycle = Vec::with_capacity(self.len());
        let mut c = *c0;
        cycle.push(c);
        for q in &self.centers[..self.len() - 1] {
            c = reflection(q).expect("disc center").apply(&c);
            cycle.push(c);
        }
        cycle
    }

    /// Oriented area of the cycle of `c0`.
    pub fn area_from(&self, c0: &ProjPoint) -> f64 {
        polygon_area(&self.cycle_of(c0), c0)
    }

    /// Area of the representation, measured from a fixed interior basepoint.
    pub fn area(&self) -> f64 {
        let c0 = BASEPOINTS
            .iter()
            .map(|&(re, im)| ProjPoint::disc(re, im))
            .find(|c| self.centers.iter().all(|q| !q.coincides(c)))
            .expect("finitely many centers cannot cover every fallback basepoint");
        self.area_from(&c0)
    }

    /// Centers reversed. The area changes sign.
    ///
    /// Inverting the relation gives `R^{q_0} ... R^{q_{n-1}} = (-1)^n ε`
    /// because each lift satisfies `(R^q)^{-1} = -R^q`, so odd lengths flip the sign.
    pub fn reverse(&self) -> Self {
        let mut centers = self.centers.clone();
        centers.reverse();
        let epsilon = if self.len().is_multiple_of(2) {
            self.epsilon
        } else {
            -self.epsilon
        };
        Self { centers, epsilon }
    }

    /// Conjugate by `m`, i.e. every center moved by `m`.
    pub fn conjugate(&self, m: &SpecialUnitary) -> Self {
        Self {
            centers: self.centers.iter().map(|q| m.apply(q)).collect(),
            epsilon: self.epsilon,
        }
    }

    /// Cyclic relabeling starting at `q_k`; the relation is conjugated, so
    /// the sign is unchanged.
    pub fn rotate(&self, k: usize) -> Self {
        let mut centers = self.centers.clone();
        centers.rotate_left(k % self.len());
        Self {
            centers,
            epsilon: self.epsilon,
        }
    }

    /// The geodesic `G<q_{k-1}, q_k>`.
    pub fn side_geodesic(&self, k: isize) -> Result<Geodesic> {
        geodesic_through(&self.center(k - 1), &self.center(k))
    }

    /// First `j` with `q_j = q_{j+1}` (indices mod n).
    pub fn adjacent_coincidence(&self) -> Option<usize> {
        let n = self.len();
        (0..n).find(|&j| self.centers[j].coincides(&self.centers[(j + 1) % n]))
    }

    /// The i-cycle `v^i, w^i, ..., v^{i+n-3}, w^{i+n-3}` from the pair `(q_{i-1}, q_i)`.
    pub fn i_cycle(&self, i: usize) -> Result<ICycle> {
        let n = self.len();
        if n < 5 {
            return Err(Error::BadLength(n));
        }
        if i >= n {
            return Err(Error::BadIndex { index: i, len: n });
        }
        if let Some(j) = self.adjacent_coincidence() {
            return Err(Error::ConsecutiveCoincidence(j));
        }
        let i = i as isize;
        let pair = reflection(&self.center(i))? * reflection(&self.center(i - 1))?;
        let (attractor, repeller) = hyperbolic_fixed_points(&pair)?;
        let (mut v, mut w) = (repeller, attractor);
        let mut points = Vec::with_capacity(2 * n - 4);
        points.push(v);
        points.push(w);
        for j in i + 1..=i + n as isize - 3 {
            let r = reflection(&self.center(j))?;
            v = r.apply(&v);
            w = r.apply(&w);
            points.push(v);
            points.push(w);
        }
        Ok(ICycle {
            base: i as usize,
            points,
        })
    }

    /// `|area| = (n - 4) π` within `tol_area * n`.
    pub fn is_maximal(&self) -> bool {
        let n = self.len();
        n >= 5 && (self.area().abs() - (n as f64 - 4.0) * PI).abs() <= tolerances().maximal_area(n)
    }

    /// Discreteness verdict with both the area and the i-cycle evidence.
    pub fn is_discrete_faithful(&self) -> Result<DiscreteFaithfulReport> {
        let n = self.len();
        if n < 5 {
            return Err(Error::BadLength(n));
        }
        let area = self.area();
        let maximal = self.is_maximal();
        let icycle = match self.i_cycle(0) {
            Ok(c) => Some(c.orientation()),
            Err(Error::ConsecutiveCoincidence(_)) => None,
            Err(e) => return Err(e),
        };
        if let Some(o) = icycle {
            if (o != CycleOrientation::Neither) != maximal {
                return Err(Error::Inconsistent(format!(
                    "area {area} (maximal: {maximal}) disagrees with i-cycle verdict {o:?}"
                )));
            }
        }
        Ok(DiscreteFaithfulReport {
            discrete_faithful: maximal,
            area,
            maximal,
            icycle,
        })
    }

    /// Basic iff maximal; otherwise a reduction certificate witnesses a cancellation.
    pub fn is_basic(&self) -> Result<Basicness> {
        if self.is_maximal() {
            return Ok(Basicness::Basic);
        }
        match reduce_once(self) {
            Ok(cert) => Ok(Basicness::NotBasic(Box::new(cert))),
            Err(Error::AlreadyMaximal) => Ok(Basicness::Basic),
            Err(e) => Err(e),
        }
    }
}

/// Splices `rho1` into `rho2` after its first `i` centers:
/// `q_{n-1} ... q_i p_{m-1} ... p_0 q_{i-1} ... q_0`, with sign `ε1 ε2`.
pub fn concatenate(
    rho1: &Representation,
    rho2: &Representation,
    i: usize,
) -> Result<Representation> {
    if i > rho2.len() {
        return Err(Error::BadIndex {
            index: i,
            len: rho2.len(),
        });
    }
    let mut centers = Vec::with_capacity(rho1.len() + rho2.len());
    centers.extend_from_slice(&rho2.centers[..i]);
    centers.extend_from_slice(&rho1.centers);
    centers.extend_from_slice(&rho2.centers[i..]);
    Representation::relation(centers, rho1.epsilon * rho2.epsilon)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ICycle {
    pub base: usize,
    pub points: Vec<ProjPoint>,
}

impl ICycle {
    /// Cyclic orientation; coincident points count as neither.
    pub fn orientation(&self) -> CycleOrientation {
        match is_positive_cycle(&self.points) {
            Ok(o) => o,
            Err(_) => CycleOrientation::Neither,
        }
    }

    /// `(v^j, w^j)` pairs in order.
    pub fn pairs(&self) -> impl Iterator<Item = (ProjPoint, ProjPoint)> + '_ {
        self.points.chunks_exact(2).map(|c| (c[0], c[1]))
    }
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct DiscreteFaithfulReport {
    pub discrete_faithful: bool,
    pub area: f64,
    pub maximal: bool,
    /// Orientation of the 0-cycle, absent when two consecutive centers coincide.
    pub icycle: Option<CycleOrientation>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Basicness {
    Basic,
    NotBasic(Box<ReductionCertificate>),
}

impl Basicness {
    pub fn is_basic(&self) -> bool {
        matches!(self, Basicness::Basic)
    }
}
