//! Enumerates every invariant Einstein metric on one flag quotient and prints
//! the certified census: four Kaehler tuples with exact rational coordinates
//! and two non-Kaehler metrics enclosed in rational intervals.
//!
//! Run with `cargo run --example enumerate_pair`.

use einflag::flagmodel::FlagSpace;
use einflag::report::{coord_decimal, coord_exact};
use einflag::solver::enumerate_einstein;

fn main() {
    let space = FlagSpace::new(6, 2).unwrap();
    let census = enumerate_einstein(6, 2).unwrap();

    println!(
        "space (n, p) = ({}, {}): summand dimensions {:?}, total {}",
        space.n(),
        space.p(),
        space.dims(),
        space.total_dim()
    );
    println!(
        "{} Einstein metrics: {} Kaehler, {} non-Kaehler\n",
        census.solutions.len(),
        census.kahler_count(),
        census.non_kahler_count()
    );

    for (idx, sol) in census.solutions.iter().enumerate() {
        println!(
            "#{} {:<10} via {}",
            idx + 1,
            sol.kind.as_str(),
            sol.origin
        );
        for (name, value) in [
            ("x2", &sol.metric[1]),
            ("x3", &sol.metric[2]),
            ("x4", &sol.metric[3]),
            ("e ", &sol.einstein_constant),
        ] {
            println!("   {name} = {:<24} ({})", coord_decimal(value, 20), coord_exact(value));
        }
        println!(
            "   certificate: positivity {}, residual {}, refinement exponent {:?}",
            sol.certificate.positivity,
            sol.certificate.residual.as_str(),
            sol.certificate.width_exp
        );
    }
}
