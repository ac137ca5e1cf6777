//! Splicing relations adds their areas.

use std::f64::consts::PI;

use hyperelliptic::{concatenate, regular_polygon, ProjPoint, Representation};

fn main() -> hyperelliptic::Result<()> {
    let pentagon = regular_polygon(5)?;
    let hexagon = regular_polygon(6)?;
    let cancel = Representation::cancellation(ProjPoint::disc(0.2, -0.3))?;
    let parts = [
        ("pentagon", &pentagon),
        ("reverse pentagon", &pentagon.reverse()),
        ("cancellation", &cancel),
    ];
    for (name, rho1) in parts {
        for i in 0..=hexagon.len() {
            let joined = concatenate(rho1, &hexagon, i)?;
            println!(
                "{name} at {i} into hexagon: length {:>2}, area/pi {:+.9} (sum {:+.1})",
                joined.len(),
                joined.area() / PI,
                (rho1.area() + hexagon.area()) / PI
            );
        }
    }
    Ok(())
}
