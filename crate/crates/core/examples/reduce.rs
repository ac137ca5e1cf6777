//! One reduction step with a replayable certificate.

use std::f64::consts::PI;

use hyperelliptic::format::CertificateFile;
use hyperelliptic::sample::{cancellation_with_core, random_maximal, scramble};
use hyperelliptic::{reduce_once, Error};
use rand::SeedableRng;

fn main() -> hyperelliptic::Result<()> {
    let mut rng = rand::rngs::StdRng::seed_from_u64(21);
    let core = random_maximal(&mut rng, 7)?;
    let joined = cancellation_with_core(&mut rng, &core)?;
    let rho = scramble(&mut rng, &joined, 20, 0.8).0;
    println!(
        "input: length {}, area/pi {:.9}, maximal {}",
        rho.len(),
        rho.area() / PI,
        rho.is_maximal()
    );

    let cert = reduce_once(&rho)?;
    println!(
        "detector {:?}, {} bendings, gaps {:?}",
        cert.detector,
        cert.moves.len(),
        cert.gaps
    );
    for mv in &cert.moves {
        println!("  bend pair {} by {:+.6}", mv.index, mv.s);
    }
    println!(
        "cancel q{} = q{}, reduced length {}",
        cert.cancel_index,
        (cert.cancel_index + 1) % rho.len(),
        cert.reduced.len()
    );
    cert.verify(&rho)?;
    println!("certificate replays");

    let json = CertificateFile::new(&rho, &cert).to_json()?;
    println!("certificate file is {} bytes of JSON", json.len());

    match reduce_once(&core) {
        Err(Error::AlreadyMaximal) => println!("the maximal core does not reduce"),
        other => println!("unexpected: {other:?}"),
    }
    Ok(())
}
