//! Right-angled regular polygons: the simplest maximal relations.

use std::f64::consts::PI;

use hyperelliptic::regular_polygon;
use hyperelliptic::teichmuller::polygon_angles;

fn main() -> hyperelliptic::Result<()> {
    println!(
        "{:>3} {:>12} {:>8} {:>10} {:>10}",
        "n", "radius", "sign", "area/pi", "max|a-pi/2|"
    );
    for n in 5..=10 {
        let rho = regular_polygon(n)?;
        let worst = polygon_angles(rho.centers())
            .iter()
            .map(|a| (a - PI / 2.0).abs())
            .fold(0.0, f64::max);
        println!(
            "{n:>3} {:>12.9} {:>8} {:>10.6} {:>10.1e}",
            rho.centers()[0].chart().norm(),
            rho.epsilon(),
            rho.area() / PI,
            worst
        );
    }
    Ok(())
}
