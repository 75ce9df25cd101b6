//! Exact real-root machinery on the degree-four eliminant of one parameter
//! pair: Sturm-chain root counts over chosen windows, isolation into disjoint
//! rational intervals, and bisection refinement down to a requested width.
//!
//! Run with `cargo run --example root_isolation`.

use einflag::exactmath::rat_int;
use einflag::realroots::{count_roots, isolate_roots, refine, Bound};
use einflag::solver::reference::quartic_q;
use num_traits::ToPrimitive;

fn main() {
    let (n, p) = (rat_int(5), rat_int(2));
    let q = quartic_q(&n, &p);
    println!("eliminant quartic: {}", q.to_string_var("x3"));
    println!("palindromic: {}", q.is_palindromic());

    let positive = count_roots(&q, &Bound::finite(rat_int(0)), &Bound::PosInf);
    let in_unit = count_roots(&q, &Bound::finite(rat_int(0)), &Bound::finite(rat_int(1)));
    println!("roots in (0, inf]: {positive}; roots in (0, 1]: {in_unit}\n");

    for root in isolate_roots(&q) {
        let narrow = refine(&root, 120, 4096).unwrap();
        let mid = narrow.midpoint();
        println!(
            "root ~ {:.15}  isolated in [{}, {}]  refined width <= 2^-120",
            mid.to_f64().unwrap(),
            root.lo,
            root.hi
        );
    }
}
