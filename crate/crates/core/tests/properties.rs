//! Invariants of relations, bendings, coordinates and reductions on random instances.

mod common;

use std::f64::consts::PI;

use common::*;
use hyperelliptic::bending::apply_moves;
use hyperelliptic::isometry::reflection_product;
use hyperelliptic::reduction::remove_pair;
use hyperelliptic::sample::{random_boundary, random_isometry, random_maximal, scramble};
use hyperelliptic::teichmuller::{polygon_angles, regular_radius};
use hyperelliptic::{
    apply_bending, bending_group, concatenate, decompose, extract_reflection_center, from_boundary,
    geodesic_through, reduce_once, reflection, regular_polygon, tance, BendingMove, Complex64,
    CycleOrientation, Error, ProjPoint, Sign, SpecialUnitary,
};
use proptest::prelude::*;

fn max_center_gap(a: &hyperelliptic::Representation, b: &hyperelliptic::Representation) -> f64 {
    a.centers()
        .iter()
        .zip(b.centers())
        .map(|(p, q)| (p.chart() - q.chart()).norm())
        .fold(0.0, f64::max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn area_is_conjugation_invariant(seed in any::<u64>(), n in 5usize..=9) {
        let mut rng = rng(seed);
        let rho = random_maximal(&mut rng, n).unwrap();
        let m = random_isometry(&mut rng, 1.0);
        let moved = rho.conjugate(&m);
        prop_assert!(moved.residual() < 1e-6);
        prop_assert!((moved.area() - rho.area()).abs() < 1e-6);
    }

    #[test]
    fn reversal_negates_area(seed in any::<u64>(), n in 5usize..=9) {
        let mut rng = rng(seed);
        let rho = random_maximal(&mut rng, n).unwrap();
        let rev = rho.reverse();
        let expected = if n % 2 == 0 { rho.epsilon() } else { -rho.epsilon() };
        prop_assert_eq!(rev.epsilon(), expected);
        prop_assert!((rev.area() + rho.area()).abs() < 1e-6);
        prop_assert_eq!(rev.i_cycle(0).unwrap().orientation(), CycleOrientation::Negative);
    }

    #[test]
    fn from_boundary_is_maximal_with_closing_center_left(seed in any::<u64>(), n in 5usize..=9) {
        let mut rng = rng(seed);
        let rho = from_boundary(&random_boundary(&mut rng, n).unwrap()).unwrap();
        prop_assert!(rho.is_maximal());
        prop_assert!((rho.area() - (n as f64 - 4.0) * PI).abs() < 1e-6);
        prop_assert_eq!(rho.i_cycle(0).unwrap().orientation(), CycleOrientation::Positive);
        let closing = rho.centers()[n - 1].chart();
        prop_assert!(closing.re < 0.0 && closing.im.abs() < 1e-8);
    }

    #[test]
    fn bending_group_law(seed in any::<u64>(), i in 0usize..6, s in -1.5..1.5f64, t in -1.5..1.5f64) {
        let mut rng = rng(seed);
        let rho = random_maximal(&mut rng, 6).unwrap();
        let twice = apply_moves(&rho, &[BendingMove::new(i, s), BendingMove::new(i, t)]).unwrap();
        let once = apply_bending(&rho, BendingMove::new(i, s + t)).unwrap();
        prop_assert!(max_center_gap(&twice, &once) < 1e-8);
    }

    #[test]
    fn disjoint_bendings_commute(seed in any::<u64>(), i in 0usize..7, offset in 2usize..=5, s in -1.0..1.0f64, t in -1.0..1.0f64) {
        let n = 7;
        let j = (i + offset) % n;
        let mut rng = rng(seed);
        let rho = random_maximal(&mut rng, n).unwrap();
        let (a, b) = (BendingMove::new(i, s), BendingMove::new(j, t));
        let ab = apply_moves(&rho, &[a, b]).unwrap();
        let ba = apply_moves(&rho, &[b, a]).unwrap();
        prop_assert!(max_center_gap(&ab, &ba) < 1e-8);
    }

    #[test]
    fn bending_keeps_pair_product_and_tance(seed in any::<u64>(), n in 5usize..=8, i in 0usize..8, s in -2.0..2.0f64) {
        let mut rng = rng(seed);
        let rho = random_maximal(&mut rng, n).unwrap();
        let i = i % n;
        let j = (i + 1) % n;
        let bent = apply_bending(&rho, BendingMove::new(i, s)).unwrap();
        let before = reflection_product([&rho.centers()[i], &rho.centers()[j]]).unwrap();
        let after = reflection_product([&bent.centers()[i], &bent.centers()[j]]).unwrap();
        prop_assert!(before.distance(&after) < 1e-8 * (1.0 + before.a().norm()));
        let t0 = tance(&rho.centers()[i], &rho.centers()[j]).unwrap();
        let t1 = tance(&bent.centers()[i], &bent.centers()[j]).unwrap();
        prop_assert!((t0 - t1).abs() < 1e-8 * t0);
        prop_assert!((bent.area() - rho.area()).abs() < 1e-6);
        for k in (0..n).filter(|&k| k != i && k != j) {
            prop_assert_eq!(bent.centers()[k], rho.centers()[k]);
        }
    }

    #[test]
    fn length_four_relations_are_bendings(r in proptest::array::uniform2(0.0..0.8f64), a in proptest::array::uniform2(0.0..(2.0 * PI)), u in -2.0..2.0f64) {
        let q1 = ProjPoint::from_chart(Complex64::from_polar(r[0], a[0]));
        let q2 = ProjPoint::from_chart(Complex64::from_polar(r[1], a[1]));
        prop_assume!(q1.separation(&q2) > 1e-2 && u.abs() > 1e-3);
        let g = geodesic_through(&q1, &q2).unwrap();
        let h = reflection(&q2).unwrap() * reflection(&q1).unwrap();
        // another factorization of h: pick q1' on the axis, solve for q2'
        let q1p = (SpecialUnitary::frame_at(&g, &q1).unwrap() * SpecialUnitary::translation(u)).apply(&ProjPoint::ORIGIN);
        let (q2p, sign) = extract_reflection_center(&(h * reflection(&q1p).unwrap().inverse())).unwrap();
        let residual = (reflection(&q2p).unwrap() * reflection(&q1p).unwrap()).distance(&(if sign == Sign::Plus { h } else { -h }));
        prop_assert!(residual < 1e-8);
        // recover the bending parameter from the signed distance along the axis
        let d = hyperelliptic::distance(&q1, &q1p).unwrap();
        // on a common line, q1' lies beyond q1 (away from q2) iff the distances add up
        let across = hyperelliptic::distance(&q1p, &q2).unwrap() - hyperelliptic::distance(&q1, &q2).unwrap();
        let s = if (across - d).abs() < 1e-6 { -d } else { d };
        prop_assert!((s - u).abs() < 1e-6);
        let b = bending_group(&q1, &q2, s).unwrap();
        prop_assert!(b.apply(&q1).separation(&q1p) < 1e-8);
        prop_assert!(b.apply(&q2).separation(&q2p) < 1e-8);
    }

    #[test]
    fn certificates_replay(seed in any::<u64>(), n in 7usize..=9, moves in 0usize..20) {
        let mut rng = rng(seed);
        let rho = scrambled_with_core(&mut rng, n, moves);
        let cert = reduce_once(&rho).unwrap();
        cert.verify(&rho).unwrap();
        prop_assert!(cert.gaps.windows(2).all(|w| w[0] > w[1]));
        prop_assert_eq!(cert.reduced.len(), n - 2);
        prop_assert!((cert.reduced.area() - rho.area()).abs() < 1e-6);
        let bent = apply_moves(&rho, &cert.moves).unwrap();
        let j = cert.cancel_index;
        prop_assert!(bent.centers()[j].separation(&bent.centers()[(j + 1) % n]) < 1e-7);
        prop_assert_eq!(remove_pair(&bent, j).unwrap().epsilon(), -rho.epsilon());
    }

    #[test]
    fn decompositions_keep_parity_and_area(seed in any::<u64>(), n in 7usize..=9) {
        let mut rng = rng(seed);
        let rho = scrambled_with_core(&mut rng, n, 15);
        let d = decompose(&rho).unwrap();
        let m = d.core_len();
        prop_assert_eq!((n - m) % 2, 0);
        prop_assert_eq!(d.cancellations.len(), (n - m) / 2);
        for a in &d.areas {
            prop_assert!((a - rho.area()).abs() < 1e-6);
        }
    }
}

#[test]
fn regular_polygons_have_right_angles() {
    for n in 5..=12 {
        let rho = regular_polygon(n).unwrap();
        assert!((regular_radius(n) - regular_chart_radius(n)).abs() < 1e-9);
        for a in polygon_angles(rho.centers()) {
            assert!((a - PI / 2.0).abs() < 1e-7, "n = {n}");
        }
        assert!(rho.is_maximal());
        assert_eq!(rho.epsilon(), Sign::Plus);
    }
}

#[test]
fn pentagon_with_reverse_is_not_maximal() {
    let p = regular_polygon(5).unwrap();
    let z = concatenate(&p, &p.reverse(), 0).unwrap();
    assert_eq!(z.len(), 10);
    assert!(z.area().abs() < 1e-9);
    assert!(!z.is_maximal());
    let report = z.is_discrete_faithful().unwrap();
    assert!(!report.discrete_faithful);
}

#[test]
fn verdict_disagreement_cannot_be_built_from_valid_input() {
    let mut rng = rng(17);
    for _ in 0..20 {
        let rho = scrambled_with_core(&mut rng, 8, 10);
        let report = rho.is_discrete_faithful().unwrap();
        assert!(!report.maximal && !report.discrete_faithful);
        assert!(matches!(
            report.icycle,
            None | Some(CycleOrientation::Neither)
        ));
    }
}

#[test]
fn reduce_refuses_maximal_and_short_input() {
    let mut rng = rng(5);
    let rho = random_maximal(&mut rng, 7).unwrap();
    assert!(matches!(reduce_once(&rho), Err(Error::AlreadyMaximal)));
    let c = hyperelliptic::Representation::cancellation(ProjPoint::disc(0.2, 0.1)).unwrap();
    assert!(matches!(reduce_once(&c), Err(Error::BadLength(2))));
    let (scr, moves) = scramble(&mut rng, &rho, 10, 1.0);
    assert!(!moves.is_empty());
    assert!(matches!(reduce_once(&scr), Err(Error::AlreadyMaximal)));
}
