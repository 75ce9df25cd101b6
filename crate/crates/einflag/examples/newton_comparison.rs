//! Cross-checks the certified census against an independent floating-point
//! search: multi-start damped Newton iteration on the Einstein residuals from
//! a grid of positive starting points, clustered and matched to the exact
//! solutions per coordinate.
//!
//! Run with `cargo run --example newton_comparison`.

use einflag::solver::{enumerate_einstein, newton_matches_certified, newton_oracle};

fn main() {
    let (n, p) = (5, 3);
    let clusters = newton_oracle(n, p, 10);
    println!("floating-point Newton search at (n, p) = ({n}, {p}):");
    for c in &clusters {
        println!("  cluster at (x2, x3, x4) ~ ({:.10}, {:.10}, {:.10})", c[0], c[1], c[2]);
    }

    let census = enumerate_einstein(n, p).unwrap();
    let cmp = newton_matches_certified(&census, 10, 1e-8);
    println!(
        "\n{} clusters vs {} certified solutions; matched: {}; max coordinate distance {:.2e}",
        cmp.cluster_count, cmp.certified_count, cmp.matched, cmp.max_distance
    );
}
