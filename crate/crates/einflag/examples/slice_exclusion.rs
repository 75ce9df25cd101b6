//! Shows why the equal-ends slice x1 = x3 contributes no Einstein metrics:
//! the slice system collapses to a pair of quartic eliminants whose positive
//! roots always fail the partner-positivity test, leaving the census to the
//! complementary reduction.
//!
//! Run with `cargo run --example slice_exclusion`.

use einflag::exactmath::rat_int;
use einflag::flagmodel::FlagSpace;
use einflag::realroots::{count_roots, Bound};
use einflag::solver::{build_case1, solve_case1, SolverParams};

fn main() {
    let params = SolverParams::default();
    for (n, p) in [(3, 1), (5, 2), (8, 3), (10, 5)] {
        let space = FlagSpace::new(n, p).unwrap();
        let sys = build_case1(&space).unwrap();
        let pos_f = count_roots(&sys.quartic_f, &Bound::finite(rat_int(0)), &Bound::PosInf);
        let pos_g = count_roots(&sys.quartic_g, &Bound::finite(rat_int(0)), &Bound::PosInf);
        let sols = solve_case1(&space, &params).unwrap();
        println!(
            "({n:2}, {p:2})  eliminant positive roots: f has {pos_f}, g has {pos_g}; admissible slice metrics: {}",
            sols.len()
        );
        assert!(sols.is_empty());
    }
    println!("\nno slice metric survives admissibility on any tested pair");
}
