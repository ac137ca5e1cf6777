//! Maximal relations from boundary angles and back.

use hyperelliptic::{from_boundary, to_boundary, BoundaryCoordinates};

fn main() -> hyperelliptic::Result<()> {
    let degrees = [15.0, 40.0, 70.0, 95.0, 130.0, 165.0];
    let coords = BoundaryCoordinates::from_degrees(6, &degrees)?;
    let rho = from_boundary(&coords)?;
    println!("centers of the length-6 relation (sign {}):", rho.epsilon());
    for (k, z) in rho.chart_centers().iter().enumerate() {
        println!("  q{k} = {z:.6}");
    }
    println!(
        "maximal: {}, residual {:.1e}",
        rho.is_maximal(),
        rho.residual()
    );

    for i in 0..rho.len() {
        let (back, _) = to_boundary(&rho, i)?;
        let shown: Vec<String> = back.degrees().iter().map(|d| format!("{d:.3}")).collect();
        println!("coordinates at base {i}: {}", shown.join(" "));
    }

    // unsorted angles are not a positive cycle
    match BoundaryCoordinates::from_degrees(6, &[40.0, 15.0, 70.0, 95.0, 130.0, 165.0]) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
