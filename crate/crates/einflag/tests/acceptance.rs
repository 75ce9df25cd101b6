//! The nine acceptance criteria for the certified census, one test per
//! criterion. Each test prints a single summary line on success; a failed
//! assertion names the first offending parameter pair.

use std::collections::HashMap;
use std::time::Instant;

use einflag::exactmath::{pow2_neg, rat_int, UniPoly};
use einflag::flagmodel::FlagSpace;
use einflag::solver::{
    build_case1, build_case2, duality_check, enumerate_einstein, factor_resultant,
    newton_matches_certified, reference, solve_case1, verify_lemmas, Kind, ResidualCheck,
    SolverParams,
};
use num_traits::Zero;

fn pairs(n_max: i64) -> impl Iterator<Item = (i64, i64)> {
    (3..=n_max).flat_map(|n| (1..n).map(move |p| (n, p)))
}

#[test]
fn criterion_1_census_finds_4_kahler_and_2_certified_non_kahler_for_every_pair_up_to_n_20() {
    let clock = Instant::now();
    let width_cap = pow2_neg(80);
    let mut checked = 0usize;
    for (n, p) in pairs(20) {
        let e = enumerate_einstein(n, p).unwrap_or_else(|err| panic!("({n},{p}): {err}"));
        assert_eq!(e.kahler_count(), 4, "kahler count at ({n},{p})");
        assert_eq!(e.non_kahler_count(), 2, "non-kahler count at ({n},{p})");
        assert_eq!(e.solutions.len(), 6, "total count at ({n},{p})");
        for sol in &e.solutions {
            assert!(sol.certificate.positivity, "positivity at ({n},{p})");
            match sol.kind {
                Kind::Kahler => {
                    assert_eq!(sol.certificate.residual, ResidualCheck::ExactZero);
                    assert!(sol.metric.iter().all(|c| c.is_exact()));
                }
                Kind::NonKahler => {
                    assert_eq!(sol.certificate.residual, ResidualCheck::QuarticMembership);
                    let reached = sol.certificate.width_exp.unwrap_or(0);
                    assert!(reached >= 80, "width exponent {reached} at ({n},{p})");
                    for coord in sol.metric.iter().chain([&sol.einstein_constant]) {
                        assert!(
                            coord.as_interval().width() <= width_cap,
                            "enclosure wider than 2^-80 at ({n},{p})"
                        );
                    }
                }
            }
        }
        checked += 1;
    }
    let elapsed = clock.elapsed();
    assert_eq!(checked, 189);
    assert!(elapsed.as_secs() < 300, "budget exceeded: {elapsed:?}");
    println!(
        "criterion 1 PASS: 189 pairs, each 4 Kahler + 2 non-Kahler certified at width <= 2^-80 ({:.1}s)",
        elapsed.as_secs_f64()
    );
}

#[test]
fn criterion_2_balanced_pairs_keep_the_same_census_split() {
    for n in (4..=20).step_by(2) {
        let p = n / 2;
        let e = enumerate_einstein(n, p).unwrap_or_else(|err| panic!("({n},{p}): {err}"));
        assert_eq!(e.solutions.len(), 6, "total count at ({n},{p})");
        assert_eq!(e.kahler_count(), 4, "kahler count at ({n},{p})");
        assert_eq!(e.non_kahler_count(), 2, "non-kahler count at ({n},{p})");
    }
    println!("criterion 2 PASS: all 9 balanced pairs n = 2p give 6 metrics split 4 + 2");
}

#[test]
fn criterion_3_closed_form_kahler_metrics_solve_the_derived_system_exactly() {
    let clock = Instant::now();
    let mut tuples = 0usize;
    for (n, p) in pairs(50) {
        let space = FlagSpace::new(n, p).unwrap();
        let system = space.einstein_system().unwrap();
        let metrics = space.kahler_einstein_metrics().unwrap();
        assert_eq!(metrics.len(), 4, "metric count at ({n},{p})");
        for (x, constant) in &metrics {
            for poly in &system {
                assert!(
                    poly.eval(x).is_zero(),
                    "nonzero residual at ({n},{p}), tuple {x:?}"
                );
            }
            let derived = space.einstein_constant(x).unwrap();
            assert_eq!(&derived, constant, "einstein constant at ({n},{p})");
            tuples += 1;
        }
    }
    let elapsed = clock.elapsed();
    assert!(elapsed.as_secs() < 60, "budget exceeded: {elapsed:?}");
    println!(
        "criterion 3 PASS: {tuples} Kahler tuples across 1224 pairs, residuals exactly zero ({:.1}s)",
        elapsed.as_secs_f64()
    );
}

#[test]
fn criterion_4_swapping_p_with_n_minus_p_exchanges_the_eliminant_quartics() {
    let clock = Instant::now();
    let mut slice_quartics: HashMap<(i64, i64), (UniPoly, UniPoly)> = HashMap::new();
    for (n, p) in pairs(50) {
        let space = FlagSpace::new(n, p).unwrap();
        let sys = build_case1(&space).unwrap_or_else(|err| panic!("({n},{p}): {err}"));
        slice_quartics.insert((n, p), (sys.quartic_f, sys.quartic_g));
    }
    for (n, p) in pairs(50) {
        let (f, g) = &slice_quartics[&(n, p)];
        let (dual_f, dual_g) = &slice_quartics[&(n, n - p)];
        assert_eq!(g, dual_f, "slice eliminant swap at ({n},{p})");
        assert_eq!(f, dual_g, "slice eliminant swap at ({n},{p})");

        let (rn, rp) = (rat_int(n), rat_int(p));
        let dual_rp = rat_int(n - p);
        assert_eq!(
            reference::quartic_t(&rn, &rp),
            reference::quartic_s(&rn, &dual_rp),
            "membership eliminant swap at ({n},{p})"
        );
    }
    let elapsed = clock.elapsed();
    println!(
        "criterion 4 PASS: 1224 pairs, both quartic families swap coefficientwise under p -> n-p ({:.1}s)",
        elapsed.as_secs_f64()
    );
}

#[test]
fn criterion_5_eliminant_factorization_is_exact_up_to_n_30() {
    let clock = Instant::now();
    let mut checked = 0usize;
    for (n, p) in pairs(30) {
        let space = FlagSpace::new(n, p).unwrap();
        let sys = build_case2(&space).unwrap_or_else(|err| panic!("({n},{p}): {err}"));
        let fact =
            factor_resultant(&space, &sys).unwrap_or_else(|err| panic!("({n},{p}): {err}"));
        assert!(!fact.prefactor.is_zero(), "zero prefactor at ({n},{p})");

        let mut rebuilt = UniPoly::from_ints(&[1, 1]).pow(4);
        for rho in &fact.linear_roots {
            rebuilt = &rebuilt * &UniPoly::new(vec![-rho.clone(), rat_int(1)]);
        }
        rebuilt = (&rebuilt * &fact.quartic).scale(&fact.prefactor);
        assert_eq!(rebuilt, fact.resultant, "factor product at ({n},{p})");
        checked += 1;
    }
    let elapsed = clock.elapsed();
    println!(
        "criterion 5 PASS: {checked} pairs, eliminant equals prefactor * (x3+1)^4 * linear factors * quartic ({:.1}s)",
        elapsed.as_secs_f64()
    );
}

#[test]
fn criterion_6_the_lemma_suite_passes_for_every_pair_up_to_n_30() {
    let clock = Instant::now();
    let mut checked = 0usize;
    for (n, p) in pairs(30) {
        let report = verify_lemmas(n, p).unwrap_or_else(|err| panic!("({n},{p}): {err}"));
        assert!(
            report.all_pass(),
            "lemma failure at ({n},{p}): {:?}",
            report
                .entries
                .iter()
                .filter(|v| v.applicable && !v.pass)
                .map(|v| (v.id, v.detail.clone()))
                .collect::<Vec<_>>()
        );
        checked += 1;
    }
    let elapsed = clock.elapsed();
    println!(
        "criterion 6 PASS: lemma suite green on {checked} pairs ({:.1}s)",
        elapsed.as_secs_f64()
    );
}

#[test]
fn criterion_7_the_equal_slice_carries_no_admissible_solutions() {
    let params = SolverParams::default();
    for (n, p) in pairs(20) {
        let space = FlagSpace::new(n, p).unwrap();
        let found = solve_case1(&space, &params).unwrap_or_else(|err| panic!("({n},{p}): {err}"));
        assert!(found.is_empty(), "unexpected slice solution at ({n},{p})");
    }
    println!("criterion 7 PASS: x1 = x3 slice empty for all 189 pairs");
}

#[test]
fn criterion_8_census_results_are_exchanged_by_the_parameter_swap() {
    let params = SolverParams::default();
    for (n, p) in pairs(15) {
        let ok = duality_check(n, p, &params).unwrap_or_else(|err| panic!("({n},{p}): {err}"));
        assert!(ok, "duality mismatch at ({n},{p})");
    }
    println!("criterion 8 PASS: census at (n,p) maps onto census at (n,n-p) for all n <= 15");
}

#[test]
fn criterion_9_floating_point_newton_confirms_every_certified_cluster() {
    let clock = Instant::now();
    let mut checked = 0usize;
    for (n, p) in pairs(8) {
        let e = enumerate_einstein(n, p).unwrap_or_else(|err| panic!("({n},{p}): {err}"));
        let cmp = newton_matches_certified(&e, 10, 1e-8);
        assert_eq!(cmp.cluster_count, 6, "cluster count at ({n},{p})");
        assert!(
            cmp.matched,
            "unmatched certified solution at ({n},{p}), max distance {}",
            cmp.max_distance
        );
        checked += 1;
    }
    let elapsed = clock.elapsed();
    assert!(elapsed.as_secs() < 120, "budget exceeded: {elapsed:?}");
    println!(
        "criterion 9 PASS: Newton clusters match certified census on {checked} pairs within 1e-8 ({:.1}s)",
        elapsed.as_secs_f64()
    );
}
