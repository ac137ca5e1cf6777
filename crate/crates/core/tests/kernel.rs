//! Disc kernel, isometries and area against independent formulas.

mod common;

use std::f64::consts::PI;

use common::*;
use hyperelliptic::area::interior_angle;
use hyperelliptic::{
    classify_isometry, distance, extract_reflection_center, geodesic_through,
    hyperbolic_fixed_points, intersect_geodesics, is_positive_cycle, on_geodesic, pairing,
    polygon_area, reflection, tance, triangle_area, Complex64, CycleOrientation, Geodesic,
    IsometryKind, ProjPoint, Sign, SpecialUnitary,
};
use proptest::prelude::*;

fn chart(r: f64, t: f64) -> Complex64 {
    Complex64::from_polar(r, t)
}

prop_compose! {
    fn interior()(r in 0.0..0.95f64, t in 0.0..(2.0 * PI)) -> ProjPoint {
        ProjPoint::from_chart(chart(r, t))
    }
}

prop_compose! {
    fn ideal()(t in 0.0..(2.0 * PI)) -> ProjPoint {
        ProjPoint::on_boundary(t)
    }
}

fn any_point() -> impl Strategy<Value = ProjPoint> {
    prop_oneof![3 => interior(), 1 => ideal()]
}

prop_compose! {
    fn isometry()(phi in 0.0..(2.0 * PI), d in 0.0..3.0f64, psi in 0.0..(2.0 * PI)) -> SpecialUnitary {
        SpecialUnitary::rotation(phi) * SpecialUnitary::translation(d) * SpecialUnitary::rotation(psi)
    }
}

/// Fixed points of `z -> (a z + b) / (conj(b) z + conj(a))` from the quadratic.
fn fixed_points(m: &SpecialUnitary) -> Vec<Complex64> {
    let (a, b) = (m.a(), m.b());
    let qa = b.conj();
    let qb = a.conj() - a;
    let qc = -b;
    if qa.norm() < 1e-14 {
        return vec![Complex64::new(0.0, 0.0)];
    }
    let disc = (qb * qb - 4.0 * qa * qc).sqrt();
    vec![(-qb + disc) / (2.0 * qa), (-qb - disc) / (2.0 * qa)]
}

fn chart_mobius(m: &SpecialUnitary, z: Complex64) -> Complex64 {
    (m.a() * z + m.b()) / (m.b().conj() * z + m.a().conj())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn pairing_is_conjugate_symmetric(p in any_point(), q in any_point()) {
        prop_assert!((pairing(&p, &q) - pairing(&q, &p).conj()).norm() < 1e-12);
    }

    #[test]
    fn tance_ignores_the_representative(p in interior(), q in interior(), s in 0.1..10.0f64, t in 0.0..(2.0 * PI)) {
        let lambda = Complex64::from_polar(s, t);
        let (v1, v2) = p.coords();
        let scaled = ProjPoint::new(lambda * v1, lambda * v2).unwrap();
        prop_assert!((tance(&p, &q).unwrap() - tance(&scaled, &q).unwrap()).abs() < 1e-10);
    }

    #[test]
    fn triangle_inequality(p in interior(), q in interior(), r in interior()) {
        let d = |a: &ProjPoint, b: &ProjPoint| distance(a, b).unwrap();
        prop_assert!(d(&p, &r) <= d(&p, &q) + d(&q, &r) + 1e-9);
    }

    #[test]
    fn geodesic_through_contains_its_points(p in any_point(), q in any_point()) {
        prop_assume!(p.separation(&q) > 1e-3);
        let g = geodesic_through(&p, &q).unwrap();
        prop_assert!(g.src().is_isotropic() && g.dst().is_isotropic());
        prop_assert!(on_geodesic(&p, &g) && on_geodesic(&q, &g));
    }

    #[test]
    fn intersection_iff_interleaving(t in proptest::array::uniform4(0.0..(2.0 * PI))) {
        let gap = |a: f64, b: f64| { let d = (a - b).rem_euclid(2.0 * PI); d.min(2.0 * PI - d) };
        for i in 0..4 { for j in 0..i { prop_assume!(gap(t[i], t[j]) > 1e-3); } }
        let g1 = Geodesic::new(ProjPoint::on_boundary(t[0]), ProjPoint::on_boundary(t[1])).unwrap();
        let g2 = Geodesic::new(ProjPoint::on_boundary(t[2]), ProjPoint::on_boundary(t[3])).unwrap();
        let inside = |x: f64| (x - t[0]).rem_euclid(2.0 * PI) < (t[1] - t[0]).rem_euclid(2.0 * PI);
        let interleave = inside(t[2]) != inside(t[3]);
        let hit = intersect_geodesics(&g1, &g2).unwrap();
        prop_assert_eq!(hit.is_some(), interleave);
        if let Some(x) = hit {
            prop_assert!(x.is_negative() && on_geodesic(&x, &g1) && on_geodesic(&x, &g2));
        }
    }

    #[test]
    fn cycle_orientation_rotates_and_flips(mut t in proptest::collection::vec(0.0..(2.0 * PI), 3..9), k in 0usize..9) {
        t.sort_by(f64::total_cmp);
        t.dedup_by(|a, b| (*a - *b).abs() < 1e-3);
        prop_assume!(t.len() >= 3 && (t[0] + 2.0 * PI - t[t.len() - 1]) > 1e-3);
        let mut pts: Vec<ProjPoint> = t.iter().map(|&x| ProjPoint::on_boundary(x)).collect();
        prop_assert_eq!(is_positive_cycle(&pts).unwrap(), CycleOrientation::Positive);
        let len = pts.len();
        pts.rotate_left(k % len);
        prop_assert_eq!(is_positive_cycle(&pts).unwrap(), CycleOrientation::Positive);
        pts.reverse();
        prop_assert_eq!(is_positive_cycle(&pts).unwrap(), CycleOrientation::Negative);
    }

    #[test]
    fn isometries_preserve_the_form(m in isometry(), p in any_point(), q in any_point()) {
        let (v1, v2) = p.coords();
        let (w1, w2) = q.coords();
        let mv = (m.a() * v1 + m.b() * v2, m.b().conj() * v1 + m.a().conj() * v2);
        let mw = (m.a() * w1 + m.b() * w2, m.b().conj() * w1 + m.a().conj() * w2);
        let before = v1 * w1.conj() - v2 * w2.conj();
        let after = mv.0 * mw.0.conj() - mv.1 * mw.1.conj();
        prop_assert!((before - after).norm() < 1e-9 * (1.0 + before.norm()));
    }

    #[test]
    fn reflections_square_to_minus_one(p in interior()) {
        let r = reflection(&p).unwrap();
        prop_assert!((r * r).distance_to_scalar(Sign::Minus) < 1e-9);
        let (back, sign) = extract_reflection_center(&r).unwrap();
        prop_assert_eq!(sign, Sign::Plus);
        prop_assert!(back.separation(&p) < 1e-8);
        let (back, sign) = extract_reflection_center(&-r).unwrap();
        prop_assert_eq!(sign, Sign::Minus);
        prop_assert!(back.separation(&p) < 1e-8);
    }

    #[test]
    fn classification_matches_fixed_points(m in isometry()) {
        let fixed = fixed_points(&m);
        let inside = fixed.iter().filter(|z| z.norm() < 1.0 - 1e-6).count();
        let on_circle = fixed.iter().filter(|z| (z.norm() - 1.0).abs() <= 1e-6).count();
        match classify_isometry(&m) {
            IsometryKind::Elliptic => prop_assert_eq!(inside, 1),
            IsometryKind::Hyperbolic => {
                prop_assert_eq!(on_circle, 2);
                prop_assert!((fixed[0] - fixed[1]).norm() > 1e-6);
            }
            IsometryKind::Parabolic => prop_assert!(on_circle == 2 && (fixed[0] - fixed[1]).norm() < 1e-3),
            IsometryKind::Identity => prop_assert!(m.distance_to_scalar(Sign::Plus).min(m.distance_to_scalar(Sign::Minus)) < 1e-6),
        }
    }

    #[test]
    fn attractor_attracts(phi in 0.0..(2.0 * PI), d in 1.0..3.0f64, seeds in proptest::array::uniform3(interior())) {
        let u = SpecialUnitary::rotation(phi);
        let m = u * SpecialUnitary::translation(d) * u.inverse();
        let (attractor, repeller) = hyperbolic_fixed_points(&m).unwrap();
        prop_assert!(attractor.separation(&repeller) > 1e-3);
        for seed in seeds {
            let mut z = seed.chart();
            for _ in 0..20 {
                z = chart_mobius(&m, z);
            }
            prop_assert!((z - attractor.chart()).norm() < 1e-6);
        }
    }

    #[test]
    fn defect_matches_triple_product(a in any_point(), b in any_point(), c in any_point()) {
        let area = triangle_area(&a, &b, &c);
        let oracle = triple_product_area(a.chart(), b.chart(), c.chart());
        prop_assert!(area.abs() <= PI + 1e-9);
        prop_assert!((area - oracle).abs() < 1e-8, "defect {} triple {}", area, oracle);
    }

    #[test]
    fn area_is_isometry_invariant(m in isometry(), a in interior(), b in interior(), c in interior()) {
        let moved = triangle_area(&m.apply(&a), &m.apply(&b), &m.apply(&c));
        prop_assert!((moved - triangle_area(&a, &b, &c)).abs() < 1e-8);
    }

    #[test]
    fn area_is_additive(a in interior(), b in interior(), c in interior(), w in proptest::array::uniform3(0.05..1.0f64)) {
        // an interior point of the Klein-model triangle is interior to the geodesic triangle
        let klein = |z: Complex64| 2.0 * z / (1.0 + z.norm_sqr());
        let total = w[0] + w[1] + w[2];
        let k = (klein(a.chart()) * w[0] + klein(b.chart()) * w[1] + klein(c.chart()) * w[2]) / total;
        let x = ProjPoint::from_chart(k / (1.0 + (1.0 - k.norm_sqr()).sqrt()));
        let split = triangle_area(&a, &b, &x) + triangle_area(&b, &c, &x) + triangle_area(&c, &a, &x);
        prop_assert!((split - triangle_area(&a, &b, &c)).abs() < 1e-8);
    }

    #[test]
    fn polygon_area_ignores_the_basepoint(vertices in proptest::collection::vec(any_point(), 3..9), bases in proptest::array::uniform5(interior())) {
        let areas: Vec<f64> = bases.iter().map(|b| polygon_area(&vertices, b)).collect();
        let spread = areas.iter().cloned().fold(f64::NEG_INFINITY, f64::max) - areas.iter().cloned().fold(f64::INFINITY, f64::min);
        prop_assert!(spread < 1e-6);
    }
}

#[test]
fn triangle_area_matches_integration() {
    let mut rng = rng(3);
    use rand::Rng;
    for _ in 0..50 {
        let mut p = || {
            chart(
                0.9 * rng.random::<f64>().sqrt(),
                2.0 * PI * rng.random::<f64>(),
            )
        };
        let (a, b, c) = (p(), p(), p());
        let exact = triangle_area(
            &ProjPoint::from_chart(a),
            &ProjPoint::from_chart(b),
            &ProjPoint::from_chart(c),
        );
        assert!(
            (exact.abs() - integrated_area(a, b, c)).abs() < 1e-6,
            "{a} {b} {c}"
        );
    }
}

#[test]
fn ideal_triangle_has_area_pi() {
    let t = [0.3, 2.0, 4.4].map(ProjPoint::on_boundary);
    assert!((triangle_area(&t[0], &t[1], &t[2]) - PI).abs() < 1e-8);
    assert!((triangle_area(&t[0], &t[2], &t[1]) + PI).abs() < 1e-8);
}

#[test]
fn regular_radius_agrees_with_trigonometry() {
    for n in 5..=12 {
        let rho = hyperelliptic::regular_polygon(n).unwrap();
        let r = rho.centers()[0].chart().norm();
        assert!((r - regular_chart_radius(n)).abs() < 1e-9, "n = {n}");
        let c = rho.centers();
        for k in 0..n {
            let a = interior_angle(&c[(k + n - 1) % n], &c[k], &c[(k + 1) % n]).unwrap();
            assert!((a - PI / 2.0).abs() < 1e-7);
        }
    }
}
