//! Eliminates one variable from the reduced two-equation system by a
//! resultant and factors the result exactly: a power of (x3 + 1), four linear
//! factors giving the Kaehler points, and a palindromic quartic whose roots
//! carry the non-Kaehler metrics.
//!
//! Run with `cargo run --example resultant_factorization`.

use einflag::exactmath::Var;
use einflag::flagmodel::FlagSpace;
use einflag::solver::{build_case2, factor_resultant};

fn main() {
    let space = FlagSpace::new(7, 3).unwrap();
    let sys = build_case2(&space).unwrap();
    let fact = factor_resultant(&space, &sys).unwrap();

    let bidegree = |f: &einflag::exactmath::BiPoly| {
        (
            f.degree_in(Var::First).unwrap_or(0),
            f.degree_in(Var::Second).unwrap_or(0),
        )
    };
    println!("reduced system for (n, p) = (7, 3):");
    println!("  F1 has bidegree (x3, x4) = {:?}", bidegree(&sys.f1));
    println!("  F2 has bidegree (x3, x4) = {:?}", bidegree(&sys.f2));

    println!("\nresultant factorization:");
    println!("  scalar prefactor: {}", fact.prefactor);
    println!("  (x3 + 1)^4 split off exactly");
    for (k, rho) in fact.linear_roots.iter().enumerate() {
        println!("  linear factor {}: x3 = {rho}", k + 1);
    }
    println!("  quartic factor: {}", fact.quartic.to_string_var("x3"));
    println!("  quartic palindromic: {}", fact.quartic.is_palindromic());
}
