//! Exact curvature computations on one flag quotient: Ricci components of a
//! diagonal metric, the cleared-denominator Einstein system, and the four
//! Kaehler-Einstein metrics with their exactly-zero residuals.
//!
//! Run with `cargo run --example ricci_and_kahler`.

use einflag::exactmath::rat_int;
use einflag::flagmodel::FlagSpace;
use num_traits::Zero;

fn main() {
    let space = FlagSpace::new(4, 1).unwrap();
    println!(
        "space (n, p) = (4, 1): dimensions {:?}, structure constants c123 = {}, c134 = {}",
        space.dims(),
        space.c123(),
        space.c134()
    );

    let flat = [rat_int(1), rat_int(1), rat_int(1), rat_int(1)];
    let ricci = space.ricci_components(&flat).unwrap();
    println!("\nRicci components at x = (1, 1, 1, 1):");
    for (k, r) in ricci.iter().enumerate() {
        println!("  r{} = {r}", k + 1);
    }

    let system = space.einstein_system().unwrap();
    println!("\nKaehler-Einstein metrics (x1 = 1) and exact residuals:");
    for (metric, constant) in space.kahler_einstein_metrics().unwrap() {
        let residuals: Vec<_> = system.iter().map(|eq| eq.eval(&metric)).collect();
        assert!(residuals.iter().all(|r| r.is_zero()));
        println!(
            "  x = (1, {}, {}, {})  einstein constant {}  residuals all zero",
            metric[1], metric[2], metric[3], constant
        );
    }
}
