//! Points, geodesics, intersections and isometries of the disc.

use std::f64::consts::PI;

use hyperelliptic::{
    classify_isometry, distance, geodesic_through, hyperbolic_fixed_points, intersect_geodesics,
    side_of, triangle_area, ProjPoint, SpecialUnitary,
};

fn main() -> hyperelliptic::Result<()> {
    let p = ProjPoint::disc(0.5, 0.0);
    let q = ProjPoint::disc(0.0, 0.5);
    println!("d(p, q) = {:.6}", distance(&p, &q)?);

    let g = geodesic_through(&p, &q)?;
    println!(
        "G<p,q> runs from {:.4} to {:.4}",
        g.src().chart(),
        g.dst().chart()
    );
    println!(
        "origin lies on the {:?} side",
        side_of(&ProjPoint::ORIGIN, &g)
    );

    let h = geodesic_through(&ProjPoint::on_boundary(0.0), &ProjPoint::on_boundary(PI))?;
    match intersect_geodesics(&g, &h)? {
        Some(x) => println!("G<p,q> meets the real diameter at {:.6}", x.chart()),
        None => println!("G<p,q> misses the real diameter"),
    }

    let m = SpecialUnitary::rotation(0.4) * SpecialUnitary::translation(1.2);
    println!("rotation then translation is {:?}", classify_isometry(&m));
    let shift = SpecialUnitary::translation(1.2);
    let (attractor, repeller) = hyperbolic_fixed_points(&shift)?;
    println!(
        "translation: attractor {:.3}, repeller {:.3}",
        attractor.chart(),
        repeller.chart()
    );

    let ideal = [0.0, 2.0 * PI / 3.0, 4.0 * PI / 3.0].map(ProjPoint::on_boundary);
    println!(
        "ideal triangle area / pi = {:.12}",
        triangle_area(&ideal[0], &ideal[1], &ideal[2]) / PI
    );
    Ok(())
}
