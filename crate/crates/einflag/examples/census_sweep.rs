//! Sweeps every parameter pair up to a small bound, checks that each census
//! splits four Kaehler + two non-Kaehler, and confirms the swap duality
//! p -> n - p pairs the censuses coordinatewise.
//!
//! Run with `cargo run --example census_sweep`.

use einflag::solver::{duality_check, enumerate_einstein, SolverParams};

fn main() {
    let n_max = 8;
    let mut pairs = 0;
    for n in 3..=n_max {
        for p in 1..n {
            let census = enumerate_einstein(n, p).unwrap();
            let dual = duality_check(n, p, &SolverParams::default()).unwrap();
            println!(
                "({n:2}, {p:2})  kaehler {}  non-kaehler {}  duality with ({n}, {}) {}",
                census.kahler_count(),
                census.non_kahler_count(),
                n - p,
                if dual { "ok" } else { "MISMATCH" }
            );
            assert_eq!(census.kahler_count(), 4);
            assert_eq!(census.non_kahler_count(), 2);
            assert!(dual);
            pairs += 1;
        }
    }
    println!("\n{pairs} pairs swept, every census splits 4 + 2 and respects duality");
}
