//! Writes an SVG picture of a maximal hexagon with its 0-cycle marked.
//!
//! `cargo run --example render -- out.svg`

use hyperelliptic::render::{render_svg, RenderOptions};
use hyperelliptic::{from_boundary, BoundaryCoordinates, Complex64};

fn main() -> hyperelliptic::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "hexagon.svg".into());
    let rho = from_boundary(&BoundaryCoordinates::from_degrees(
        6,
        &[20.0, 45.0, 80.0, 100.0, 135.0, 160.0],
    )?)?;
    let opts = RenderOptions {
        icycle: Some(0),
        cycle_from: Some(Complex64::new(0.05, 0.1)),
        ..RenderOptions::default()
    };
    let svg = render_svg(&rho, &opts)?;
    std::fs::write(&path, svg)?;
    println!("wrote {path}");
    Ok(())
}
