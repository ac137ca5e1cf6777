//! Full decompositions: a pentagon against its reverse cancels completely.

use hyperelliptic::sample::{cancellation_with_core, random_maximal, scramble};
use hyperelliptic::{concatenate, decompose, regular_polygon};
use rand::SeedableRng;

fn main() -> hyperelliptic::Result<()> {
    let mut rng = rand::rngs::StdRng::seed_from_u64(3);
    let p = regular_polygon(5)?;
    let rho = scramble(&mut rng, &concatenate(&p, &p.reverse(), 0)?, 10, 0.8).0;
    let d = decompose(&rho)?;
    println!(
        "pentagon against reverse: {} cancellations, core {:?}",
        d.cancellations.len(),
        d.core.as_ref().map(|c| c.len())
    );
    for (k, step) in d.steps.iter().enumerate() {
        println!(
            "  step {k}: {:?}, {} bendings, area {:+.1e}",
            step.detector,
            step.moves.len(),
            d.areas[k + 1]
        );
    }

    let core = random_maximal(&mut rng, 7)?;
    let joined = cancellation_with_core(&mut rng, &core)?;
    let rho = scramble(&mut rng, &joined, 25, 0.8).0;
    let d = decompose(&rho)?;
    println!(
        "length {} with one hidden cancellation: {} cancellations, maximal core of length {}",
        rho.len(),
        d.cancellations.len(),
        d.core_len()
    );
    Ok(())
}
