//! Bendings move a pair of centers along their common geodesic and keep the area.

use std::f64::consts::PI;

use hyperelliptic::sample::scramble;
use hyperelliptic::{
    apply_bending, bend_to_target, regular_polygon, BendingMove, ProjPoint, Which,
};
use rand::SeedableRng;

fn main() -> hyperelliptic::Result<()> {
    let rho = regular_polygon(7)?;
    println!("start: area/pi = {:.9}", rho.area() / PI);

    let bent = apply_bending(&rho, BendingMove::new(2, 0.8))?;
    println!(
        "after (2, 0.8): q2 {:.4} -> {:.4}",
        rho.centers()[2].chart(),
        bent.centers()[2].chart()
    );
    println!("                area/pi = {:.9}", bent.area() / PI);

    // aim q_3 at a chosen point of the pair geodesic
    let g = hyperelliptic::geodesic_through(&bent.centers()[3], &bent.centers()[4])?;
    let mid = hyperelliptic::SpecialUnitary::frame_at(&g, &bent.centers()[4])?
        .apply(&ProjPoint::disc(-0.3, 0.0));
    let (aimed, mv) = bend_to_target(&bent, 3, &mid, Which::Lower)?;
    println!(
        "bend_to_target chose s = {:.6}; q3 now {:.6}",
        mv.s,
        aimed.centers()[3].chart()
    );
    if bend_to_target(&bent, 3, &g.src(), Which::Lower).is_err() {
        println!("an ideal endpoint is not a valid target");
    }

    let mut rng = rand::rngs::StdRng::seed_from_u64(9);
    let (scrambled, moves) = scramble(&mut rng, &rho, 200, 1.0);
    println!(
        "{} random bendings: area drift {:.1e}, residual {:.1e}",
        moves.len(),
        (scrambled.area() - rho.area()).abs(),
        scrambled.residual()
    );
    Ok(())
}
