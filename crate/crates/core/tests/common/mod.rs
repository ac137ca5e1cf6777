//! Independent reference computations and instance builders shared by the
//! integration tests. The oracles work on raw chart coordinates and do not
//! call into the crate's geometry.

#![allow(dead_code)]

use std::f64::consts::PI;

use hyperelliptic::sample::{cancellation_with_core, random_maximal, scramble};
use hyperelliptic::{Complex64, Representation};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Lift of a chart point (interior or on the unit circle) to `C^{1,1}`.
fn lift(z: Complex64) -> (Complex64, Complex64) {
    (z, Complex64::new(1.0, 0.0))
}

fn form(a: (Complex64, Complex64), b: (Complex64, Complex64)) -> Complex64 {
    a.0 * b.0.conj() - a.1 * b.1.conj()
}

/// Signed area of the geodesic triangle from the argument of the Hermitian
/// triple product; counterclockwise is positive.
pub fn triple_product_area(a: Complex64, b: Complex64, c: Complex64) -> f64 {
    let (la, lb, lc) = (lift(a), lift(b), lift(c));
    let t = form(la, lb) * form(lb, lc) * form(lc, la);
    2.0 * (-t).arg()
}

/// Center of the circle orthogonal to the unit circle through interior chart points `p`, `q`,
/// or `None` when they lie on a diameter.
fn orthogonal_circle(p: Complex64, q: Complex64) -> Option<Complex64> {
    // |c - p|^2 = |c|^2 - 1  <=>  2 Re(c conj p) = |p|^2 + 1
    let (a1, b1, r1) = (2.0 * p.re, 2.0 * p.im, p.norm_sqr() + 1.0);
    let (a2, b2, r2) = (2.0 * q.re, 2.0 * q.im, q.norm_sqr() + 1.0);
    let det = a1 * b2 - a2 * b1;
    if det.abs() < 1e-12 {
        return None;
    }
    Some(Complex64::new(
        (r1 * b2 - r2 * b1) / det,
        (a1 * r2 - a2 * r1) / det,
    ))
}

/// Unsigned area of the triangle with interior vertices `a, b, c`, integrating
/// `4 |dz|^2 / (1 - |z|^2)^2` in polar coordinates about the vertex with the
/// smallest angle (so the opposite side stays well away from the pole).
pub fn integrated_area(a: Complex64, b: Complex64, c: Complex64) -> f64 {
    let runs = [
        fan_integral(a, b, c),
        fan_integral(b, c, a),
        fan_integral(c, a, b),
    ];
    runs.iter().min_by(|x, y| x.0.total_cmp(&y.0)).unwrap().1
}

/// `(angle at a, area)` integrated after moving `a` to the origin.
fn fan_integral(a: Complex64, b: Complex64, c: Complex64) -> (f64, f64) {
    let mobius = |z: Complex64| (z - a) / (Complex64::new(1.0, 0.0) - a.conj() * z);
    let (b, c) = (mobius(b), mobius(c));
    let (tb, mut tc) = (b.arg(), c.arg());
    while tc < tb {
        tc += 2.0 * PI;
    }
    let (start, span, far) = if tc - tb <= PI {
        (tb, tc - tb, (b, c))
    } else {
        (tc, 2.0 * PI - (tc - tb), (c, b))
    };
    let center = orthogonal_circle(far.0, far.1);
    // radius at which the ray of angle phi meets the far side
    let reach = |phi: f64| -> f64 {
        let u = Complex64::from_polar(1.0, phi);
        match center {
            Some(c) => {
                let h = (u.conj() * c).re;
                // stable form of h - sqrt(h^2 - 1)
                1.0 / (h + (h * h - 1.0).sqrt())
            }
            None => {
                // far side through the origin only if degenerate
                0.0
            }
        }
    };
    let steps = 4000;
    let h = span / steps as f64;
    let f = |phi: f64| {
        let r = reach(phi);
        2.0 * r * r / (1.0 - r * r)
    };
    let mut sum = f(start) + f(start + span);
    for k in 1..steps {
        let w = if k % 2 == 1 { 4.0 } else { 2.0 };
        sum += w * f(start + h * k as f64);
    }
    (span, sum * h / 3.0)
}

/// Chart radius of the regular right-angled `n`-gon from `cosh R = cot(pi/n)`.
pub fn regular_chart_radius(n: usize) -> f64 {
    let big_r = (1.0 / (PI / n as f64).tan()).acosh();
    (big_r / 2.0).tanh()
}

/// Distance from `x` to the nearest point of `n*pi + 2*pi*Z`.
pub fn lattice_distance(x: f64, n: usize) -> f64 {
    let shifted = (x - n as f64 * PI) / (2.0 * PI);
    (shifted - shifted.round()).abs() * 2.0 * PI
}

/// `cancellation ⊙_0 core` with a random maximal core of length `n - 2`, scrambled.
pub fn scrambled_with_core(rng: &mut ChaCha8Rng, n: usize, moves: usize) -> Representation {
    let core = random_maximal(rng, n - 2).expect("core");
    let rho = cancellation_with_core(rng, &core).expect("concatenation");
    scramble(rng, &rho, moves, 0.8).0
}
