//! Reducing non-basic relations by bendings until two adjacent centers coincide.
//!
//! Side geodesics are labelled by their upper index: label `k` is
//! `G<q_{k-1}, q_k>`. Labels `a`, `b` are neighboring when `b - a` is
//! `-1`, `0` or `1` mod n.
//!
//! [`reduce_once`] tries, in order: an existing adjacent coincidence, a crossing
//! of non-neighboring side geodesics, two centers on opposite sides of a pair
//! geodesic, and finally a search over bendings guided by the first failing
//! i-cycle prefix, which runs until one of the first three detectors fires.

use serde::{Deserialize, Serialize};

use crate::bending::{
    apply_bending, apply_moves, axis_coordinate, axis_point, bend_to_target, BendingMove, Which,
};
use crate::config::tolerances;
use crate::disc::{
    geodesic_through, intersect_geodesics, side_of, side_with_margin, CycleOrientation, Geodesic,
    ProjPoint, Side,
};
use crate::error::{Error, ReductionFailure, Result};
use crate::representation::Representation;

/// Loop guard for the bending search, per unit of relation length.
pub const MAX_ROUNDS_PER_CENTER: usize = 10;

/// Crossings this close to the absolute are ignored as numerically useless.
const DEPTH_LIMIT: f64 = 0.999_999;

/// Offsets (hyperbolic distance past a crossing) tried when a center has to change sides.
const SIDE_OFFSETS: [f64; 5] = [0.5, 0.25, 1.0, 2.0, 0.1];

/// Bending parameters tried by the search, in increasing magnitude.
const SEARCH_GRID: [f64; 8] = [0.05, 0.1, 0.2, 0.4, 0.8, 1.6, 3.2, 6.4];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Detector {
    Coincidence,
    NonNeighboring,
    OppositeHalfSpace,
    TheoremCase,
    FourCycle,
}

/// Where `q_{i+k+1}` sits relative to the positive prefix of the i-cycle,
/// following the case analysis for non-maximal relations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Region {
    /// Beyond `G<v^i, w^{i+k}>`: would extend the positive prefix.
    A,
    /// The far side geodesic crosses `G<q_{i-1}, q_i>`.
    B,
    /// Outside the two half-planes bounding the prefix.
    C,
    /// The bounded region between them.
    D,
}

/// A replayable witness that a relation reduces by one cancellation.
#[derive(Debug, Clone, PartialEq)]
pub struct ReductionCertificate {
    pub moves: Vec<BendingMove>,
    /// `q_j = q_{j+1}` after the moves.
    pub cancel_index: usize,
    /// The relation with `q_j, q_{j+1}` removed; its sign is flipped.
    pub reduced: Representation,
    pub detector: Detector,
    /// Crossing gaps visited by the non-neighboring reducer, strictly decreasing.
    pub gaps: Vec<usize>,
}

impl ReductionCertificate {
    /// Replays the moves on `input` and checks coincidence and the reduced relation.
    pub fn verify(&self, input: &Representation) -> Result<()> {
        let bent = apply_moves(input, &self.moves)?;
        let n = bent.len();
        if self.cancel_index >= n {
            return Err(Error::BadIndex {
                index: self.cancel_index,
                len: n,
            });
        }
        let j = self.cancel_index;
        let sep = bent.centers()[j].separation(&bent.centers()[(j + 1) % n]);
        if sep > 1e-7 {
            return Err(Error::Inconsistent(format!(
                "replayed centers {j} and {} are {sep:.3e} apart",
                (j + 1) % n
            )));
        }
        let expected = remove_pair(&bent, j)?;
        if expected.epsilon() != self.reduced.epsilon() || expected.len() != self.reduced.len() {
            return Err(Error::Inconsistent(
                "reduced relation does not match the replay".into(),
            ));
        }
        let drift = expected
            .centers()
            .iter()
            .zip(self.reduced.centers())
            .map(|(p, q)| p.separation(q))
            .fold(0.0, f64::max);
        if drift > 1e-7 {
            return Err(Error::Inconsistent(format!(
                "reduced centers drift by {drift:.3e}"
            )));
        }
        Ok(())
    }

    /// The common center of the removed pair.
    pub fn cancelled_center(&self, input: &Representation) -> Result<ProjPoint> {
        let bent = apply_moves(input, &self.moves)?;
        Ok(bent.centers()[self.cancel_index])
    }
}

/// Output of [`decompose`]: `ρ = δ_1 ⊙_0 ... ⊙_0 δ_ℓ ⊙_0 ρ_0` up to bendings.
#[derive(Debug, Clone, PartialEq)]
pub struct Decomposition {
    pub cancellations: Vec<Representation>,
    /// Maximal remainder, or `None` when everything cancelled.
    pub core: Option<Representation>,
    pub steps: Vec<ReductionCertificate>,
    /// Area of the input followed by the area after every step.
    pub areas: Vec<f64>,
}

impl Decomposition {
    pub fn core_len(&self) -> usize {
        self.core.as_ref().map_or(0, Representation::len)
    }

    /// Every bending applied, in order.
    pub fn moves_log(&self) -> impl Iterator<Item = &BendingMove> {
        self.steps.iter().flat_map(|s| s.moves.iter())
    }
}

/// Drops `q_j, q_{j+1}` (indices mod n) and flips the sign.
pub fn remove_pair(rho: &Representation, j: usize) -> Result<Representation> {
    let n = rho.len();
    let k = (j + 1) % n;
    let centers: Vec<ProjPoint> = rho
        .centers()
        .iter()
        .enumerate()
        .filter(|&(m, _)| m != j && m != k)
        .map(|(_, q)| *q)
        .collect();
    Representation::relation(centers, -rho.epsilon())
}

pub fn find_adjacent_coincidence(rho: &Representation) -> Option<usize> {
    rho.adjacent_coincidence()
}

/// A crossing of side geodesics `lower` and `upper = lower + gap`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Crossing {
    pub lower: usize,
    pub upper: usize,
    pub point: ProjPoint,
}

impl Crossing {
    pub fn gap(&self, n: usize) -> usize {
        (self.upper + n - self.lower) % n
    }
}

fn idx(k: isize, n: usize) -> usize {
    k.rem_euclid(n as isize) as usize
}

fn side_geodesics(rho: &Representation) -> Vec<Option<Geodesic>> {
    (0..rho.len() as isize)
        .map(|k| rho.side_geodesic(k).ok())
        .collect()
}

pub fn is_nonneighboring(n: usize, a: usize, b: usize) -> bool {
    let gap = (b + n - a) % n;
    gap >= 2 && gap + 2 <= n
}

/// Crossing of non-neighboring side geodesics with the smallest gap
/// (deepest point on ties).
pub fn find_nonneighboring_intersection(rho: &Representation) -> Option<Crossing> {
    let n = rho.len();
    if n < 4 {
        return None;
    }
    let geods = side_geodesics(rho);
    let mut best: Option<(usize, f64, Crossing)> = None;
    for a in 0..n {
        let Some(ga) = &geods[a] else { continue };
        for gap in 2..=n - 2 {
            let b = (a + gap) % n;
            let Some(gb) = &geods[b] else { continue };
            let Ok(Some(x)) = intersect_geodesics(ga, gb) else {
                continue;
            };
            let depth = x.chart().norm();
            if depth > DEPTH_LIMIT {
                continue;
            }
            let better = match &best {
                None => true,
                Some((g, d, _)) => gap < *g || (gap == *g && depth < *d - 1e-12),
            };
            if better {
                best = Some((
                    gap,
                    depth,
                    Crossing {
                        lower: a,
                        upper: b,
                        point: x,
                    },
                ));
            }
        }
    }
    best.map(|(_, _, c)| c)
}

fn failure(reason: impl Into<String>, state: &Representation, moves: &[BendingMove]) -> Error {
    Error::ReductionFailed(Box::new(ReductionFailure {
        reason: reason.into(),
        centers: state.chart_centers(),
        epsilon: state.epsilon().as_i8(),
        moves: moves.to_vec(),
    }))
}

fn finish(
    input: &Representation,
    moves: Vec<BendingMove>,
    detector: Detector,
    gaps: Vec<usize>,
) -> Result<ReductionCertificate> {
    let bent = apply_moves(input, &moves)?;
    let cancel_index = bent.adjacent_coincidence().ok_or_else(|| {
        failure(
            "moves did not produce an adjacent coincidence",
            &bent,
            &moves,
        )
    })?;
    let reduced = remove_pair(&bent, cancel_index)?;
    Ok(ReductionCertificate {
        moves,
        cancel_index,
        reduced,
        detector,
        gaps,
    })
}

/// Slides one side geodesic onto a crossing and collapses the gap, one label at a time.
pub fn reduce_via_nonneighboring(
    rho: &Representation,
    crossing: Crossing,
) -> Result<ReductionCertificate> {
    let n = rho.len();
    let a = crossing.lower as isize;
    let mut gap = crossing.gap(n);
    if !is_nonneighboring(n, crossing.lower, crossing.upper) {
        return Err(failure("crossing labels are neighboring", rho, &[]));
    }
    let mut cur = rho.clone();
    let mut moves = Vec::new();
    let mut gaps = vec![gap];
    let line = cur
        .side_geodesic(a)
        .map_err(|_| failure("reference side geodesic is degenerate", rho, &[]))?;
    let side_tol = tolerances().side;

    while gap > 2 {
        let b = a + gap as isize;
        let p = cur.center(b - 2);
        let q = cur.center(b - 1);
        let sp = side_of(&p, &line);
        let sq = side_with_margin(&q, &line, side_tol);
        let ready = match sp {
            Side::On => sq != Side::On,
            s => sq == s.opposite(),
        };
        if !ready {
            let far = cur
                .side_geodesic(b)
                .map_err(|_| failure("crossing side geodesic is degenerate", &cur, &moves))?;
            let x = match intersect_geodesics(&line, &far) {
                Ok(Some(x)) => x,
                _ => {
                    return Err(failure(
                        format!("crossing at gap {gap} was lost"),
                        &cur,
                        &moves,
                    ))
                }
            };
            let cx = axis_coordinate(&far, &x);
            let wanted = sp.opposite();
            let target = SIDE_OFFSETS
                .iter()
                .flat_map(|&d| [d, -d])
                .map(|d| axis_point(&far, cx + d))
                .find(|t| {
                    let st = side_with_margin(t, &line, side_tol);
                    st != Side::On
                        && (wanted == Side::On || st == wanted)
                        && t.chart().norm() < DEPTH_LIMIT
                })
                .ok_or_else(|| failure("no bending separates the pair", &cur, &moves))?;
            let (next, mv) = bend_to_target(&cur, idx(b - 1, n), &target, Which::Lower)?;
            cur = next;
            moves.push(mv);
            if cur.adjacent_coincidence().is_some() {
                return finish(rho, moves, Detector::NonNeighboring, gaps);
            }
        }
        gap -= 1;
        gaps.push(gap);
    }

    let near = cur
        .side_geodesic(a + 2)
        .map_err(|_| failure("side geodesic degenerate at gap 2", &cur, &moves))?;
    let x = match intersect_geodesics(&line, &near) {
        Ok(Some(x)) => x,
        Ok(None) | Err(_) => {
            // the point set of label a+2 may meet the line only at q_{a+1}
            let q = cur.center(a + 1);
            if side_of(&q, &line) == Side::On {
                q
            } else {
                return Err(failure("no crossing at gap 2", &cur, &moves));
            }
        }
    };
    let (next, mv) = bend_to_target(&cur, idx(a + 1, n), &x, Which::Lower)?;
    cur = next;
    if mv.s != 0.0 {
        moves.push(mv);
    }
    if cur.adjacent_coincidence().is_none() {
        let (_, mv) = bend_to_target(&cur, idx(a - 1, n), &x, Which::Upper)?;
        moves.push(mv);
    }
    finish(rho, moves, Detector::NonNeighboring, gaps)
}

/// `q_k` on the plus side and `q_l` on the minus side of `G<q_j, q_{j+1}>`.
pub fn find_opposite_halfspace(rho: &Representation) -> Option<(usize, usize, usize)> {
    let n = rho.len();
    for j in 0..n {
        let Ok(line) = geodesic_through(&rho.centers()[j], &rho.centers()[(j + 1) % n]) else {
            continue;
        };
        let mut plus = None;
        let mut minus = None;
        for (m, q) in rho.centers().iter().enumerate() {
            if m == j || m == (j + 1) % n {
                continue;
            }
            match side_of(q, &line) {
                Side::Plus if plus.is_none() => plus = Some(m),
                Side::Minus if minus.is_none() => minus = Some(m),
                _ => {}
            }
        }
        if let (Some(k), Some(l)) = (plus, minus) {
            return Some((j, k, l));
        }
    }
    None
}

/// Moves `q_j` along `G<q_j, q_{j+1}>` so that `G<q_{j-1}, q_j>` passes through
/// a center on the far side, then finishes with the non-neighboring reducer.
pub fn reduce_via_opposite_halfspace(
    rho: &Representation,
    j: usize,
    k: usize,
    l: usize,
) -> Result<ReductionCertificate> {
    let n = rho.len();
    let ji = j as isize;
    let line = geodesic_through(&rho.center(ji), &rho.center(ji + 1))?;
    let prev = rho.center(ji - 1);
    let other = match side_of(&prev, &line) {
        Side::On => {
            let (_, mv) = bend_to_target(rho, j, &prev, Which::Lower)?;
            return finish(rho, vec![mv], Detector::OppositeHalfSpace, Vec::new());
        }
        Side::Plus => l,
        Side::Minus => k,
    };
    let through = geodesic_through(&prev, &rho.centers()[other])?;
    let x = match intersect_geodesics(&through, &line) {
        Ok(Some(x)) => x,
        _ => {
            return Err(failure(
                "segment across the pair geodesic has no crossing",
                rho,
                &[],
            ))
        }
    };
    let (cur, mv) = bend_to_target(rho, j, &x, Which::Lower)?;
    let first = vec![mv];
    if cur.adjacent_coincidence().is_some() {
        return finish(rho, first, Detector::OppositeHalfSpace, Vec::new());
    }
    // label j now contains q_other; it crosses label other or other + 1
    let label_j = cur.side_geodesic(ji)?;
    let crossing = [other, (other + 1) % n]
        .into_iter()
        .filter_map(|m| {
            let (lower, upper) = if (m + n - j) % n <= (j + n - m) % n {
                (j, m)
            } else {
                (m, j)
            };
            if !is_nonneighboring(n, lower, upper) {
                return None;
            }
            let g = cur.side_geodesic(m as isize).ok()?;
            let x = intersect_geodesics(&label_j, &g).ok()??;
            Some(Crossing {
                lower,
                upper,
                point: x,
            })
        })
        .next()
        .or_else(|| find_nonneighboring_intersection(&cur))
        .ok_or_else(|| {
            failure(
                "no non-neighboring crossing after the first bending",
                &cur,
                &first,
            )
        })?;
    let cert = reduce_via_nonneighboring(&cur, crossing)?;
    let mut moves = first;
    moves.extend(cert.moves);
    finish(rho, moves, Detector::OppositeHalfSpace, cert.gaps)
}

/// Length-4 relations are bending relations: all centers lie on one geodesic
/// and bending the first pair makes `q_1 = q_2`.
fn reduce_four(rho: &Representation) -> Result<ReductionCertificate> {
    let target = rho.centers()[2];
    match bend_to_target(rho, 0, &target, Which::Upper) {
        Ok((_, mv)) => finish(rho, vec![mv], Detector::FourCycle, Vec::new()),
        Err(Error::TargetOffGeodesic) => {
            Err(failure("length-4 relation is not collinear", rho, &[]))
        }
        Err(e) => Err(e),
    }
}

/// Detectors 1-3 without the bending search; `None` when none fires.
fn try_detectors(rho: &Representation) -> Option<Result<ReductionCertificate>> {
    if rho.adjacent_coincidence().is_some() {
        return Some(finish(rho, Vec::new(), Detector::Coincidence, Vec::new()));
    }
    if let Some(c) = find_nonneighboring_intersection(rho) {
        let r = reduce_via_nonneighboring(rho, c);
        if r.is_ok() {
            return Some(r);
        }
    }
    if let Some((j, k, l)) = find_opposite_halfspace(rho) {
        let r = reduce_via_opposite_halfspace(rho, j, k, l);
        if r.is_ok() {
            return Some(r);
        }
    }
    None
}

/// Base index, length of the longest positive (or negative) i-cycle prefix in
/// pairs, and the region of the next center.
pub fn theorem_case(rho: &Representation) -> Option<(usize, usize, Region)> {
    let n = rho.len();
    let cycle = rho.i_cycle(0).ok()?;
    let pts = &cycle.points;
    let mut prefix = 2;
    let mut orientation = None;
    for k in 3..=pts.len() / 2 {
        let o = crate::disc::is_positive_cycle(&pts[..2 * k]).unwrap_or(CycleOrientation::Neither);
        match (orientation, o) {
            (_, CycleOrientation::Neither) => break,
            (None, o) => orientation = Some(o),
            (Some(prev), o) if prev != o => break,
            _ => {}
        }
        prefix = k;
    }
    let i = 0isize;
    let k = prefix as isize - 1;
    let next = rho.center(i + k + 1);
    let (v, w_last) = (pts[0], pts[2 * k as usize + 1]);
    let base_line = rho.side_geodesic(i).ok()?;
    let region = if let Ok(g) = crate::disc::Geodesic::new(v, w_last) {
        let qi = rho.center(i);
        let far = side_of(&next, &g);
        if far != Side::On && far == side_of(&qi, &g).opposite() {
            Region::A
        } else if let Ok(Some(_)) = rho
            .side_geodesic(i + k + 1)
            .and_then(|g2| intersect_geodesics(&base_line, &g2))
        {
            Region::B
        } else {
            let inside_base = side_of(&next, &base_line) == side_of(&rho.center(i + 1), &base_line);
            let inside_last = rho
                .side_geodesic(i + k)
                .map(|g| side_of(&next, &g) == side_of(&rho.center(i + k - 1), &g))
                .unwrap_or(true);
            if inside_base && inside_last {
                Region::D
            } else {
                Region::C
            }
        }
    } else {
        Region::D
    };
    Some((idx(i, n), prefix - 1, region))
}

/// Bending search steered by the first failing i-cycle prefix: tries the pairs
/// singled out by the case analysis first, with growing parameters, until one
/// of the direct detectors fires.
pub fn reduce_via_theorem_cases(rho: &Representation) -> Result<ReductionCertificate> {
    let n = rho.len();
    let mut cur = rho.clone();
    let mut moves: Vec<BendingMove> = Vec::new();
    for round in 0..MAX_ROUNDS_PER_CENTER * n {
        let (i, k, _) = theorem_case(&cur).unwrap_or((0, 1, Region::D));
        let (i, k) = (i as isize, k as isize);
        let mut pairs: Vec<usize> = [i + k - 1, i + k - 2, i - 1]
            .iter()
            .map(|&p| idx(p, n))
            .collect();
        for p in 0..n {
            if !pairs.contains(&p) {
                pairs.push(p);
            }
        }
        pairs.dedup();
        for &step in &SEARCH_GRID {
            for &sign in &[1.0, -1.0] {
                for &p in &pairs {
                    let mv = BendingMove::new(p, sign * step);
                    let Ok(trial) = apply_bending(&cur, mv) else {
                        continue;
                    };
                    if trial
                        .centers()
                        .iter()
                        .any(|q| q.chart().norm() > DEPTH_LIMIT)
                    {
                        continue;
                    }
                    if let Some(Ok(cert)) = try_detectors(&trial) {
                        let mut all = moves.clone();
                        all.push(mv);
                        all.extend(cert.moves);
                        return finish(rho, all, Detector::TheoremCase, cert.gaps);
                    }
                }
            }
        }
        let mv = BendingMove::new(
            pairs[round % pairs.len()],
            SEARCH_GRID[round % SEARCH_GRID.len()],
        );
        cur = apply_bending(&cur, mv)
            .map_err(|e| failure(format!("search step failed: {e}"), &cur, &moves))?;
        moves.push(mv);
    }
    Err(failure(
        format!(
            "no detector fired within {} rounds",
            MAX_ROUNDS_PER_CENTER * n
        ),
        &cur,
        &moves,
    ))
}

/// One cancellation step, or `AlreadyMaximal` for basic input.
pub fn reduce_once(rho: &Representation) -> Result<ReductionCertificate> {
    let n = rho.len();
    if n == 2 {
        return Err(Error::BadLength(2));
    }
    if rho.adjacent_coincidence().is_some() {
        return finish(rho, Vec::new(), Detector::Coincidence, Vec::new());
    }
    if n >= 5 && rho.is_maximal() {
        return Err(Error::AlreadyMaximal);
    }
    if n == 4 {
        return reduce_four(rho);
    }
    match try_detectors(rho) {
        Some(r) => r,
        None => reduce_via_theorem_cases(rho),
    }
}

/// Repeated [`reduce_once`] down to a maximal core or full cancellation.
pub fn decompose(rho: &Representation) -> Result<Decomposition> {
    let n0 = rho.len();
    let tol = tolerances().maximal_area(n0.max(1));
    let mut cur = rho.clone();
    let mut out = Decomposition {
        cancellations: Vec::new(),
        core: None,
        steps: Vec::new(),
        areas: vec![rho.area()],
    };
    loop {
        if cur.len() == 2 {
            out.cancellations.push(cur);
            return Ok(out);
        }
        if cur.len() >= 5 && cur.is_maximal() {
            out.core = Some(cur);
            return Ok(out);
        }
        let cert = reduce_once(&cur)?;
        let p = cert.cancelled_center(&cur)?;
        out.cancellations.push(Representation::cancellation(p)?);
        let area = cert.reduced.area();
        let before = *out.areas.last().expect("areas start non-empty");
        if (area - before).abs() > tol {
            return Err(Error::Inconsistent(format!(
                "area changed from {before} to {area} in a reduction step"
            )));
        }
        out.areas.push(area);
        cur = cert.reduced.clone();
        out.steps.push(cert);
    }
}
