//! The i-cycle verdict separates maximal relations from the rest.

use hyperelliptic::sample::{cancellation_with_core, random_maximal, scramble};
use hyperelliptic::{concatenate, regular_polygon, Representation};
use rand::SeedableRng;

fn show(name: &str, rho: &Representation) -> hyperelliptic::Result<()> {
    let report = rho.is_discrete_faithful()?;
    let verdicts: Vec<String> = (0..rho.len())
        .map(|i| match rho.i_cycle(i) {
            Ok(c) => format!("{:?}", c.orientation()),
            Err(_) => "undefined".into(),
        })
        .collect();
    println!(
        "{name}: maximal {}, verdicts [{}]",
        report.maximal,
        verdicts.join(", ")
    );
    Ok(())
}

fn main() -> hyperelliptic::Result<()> {
    let mut rng = rand::rngs::StdRng::seed_from_u64(4);
    let hexagon = random_maximal(&mut rng, 6)?;
    show("random hexagon", &hexagon)?;
    show("its reverse", &hexagon.reverse())?;
    let p = regular_polygon(5)?;
    show("pentagon into hexagon", &concatenate(&p, &hexagon, 2)?)?;
    let with_cancel = cancellation_with_core(&mut rng, &hexagon)?;
    show(
        "cancellation into hexagon, scrambled",
        &scramble(&mut rng, &with_cancel, 10, 0.8).0,
    )?;
    Ok(())
}
