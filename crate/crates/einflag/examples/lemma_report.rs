//! Runs the exact verification suite for the nine supporting facts behind the
//! census on a single parameter pair and prints each verdict. Checks outside
//! their parameter range are reported as skipped, never silently dropped.
//!
//! Run with `cargo run --example lemma_report`.

use einflag::solver::verify_lemmas;

fn main() {
    for (n, p) in [(9, 4), (9, 6), (8, 4)] {
        let report = verify_lemmas(n, p).unwrap();
        println!("pair (n, p) = ({n}, {p})");
        for entry in &report.entries {
            println!("  {}  {:<4} {}: {}", entry.id, entry.status(), entry.title, entry.detail);
        }
        println!(
            "  -> {}\n",
            if report.all_pass() {
                "all applicable checks pass"
            } else {
                "FAILURES present"
            }
        );
    }
}
