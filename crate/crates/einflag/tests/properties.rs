//! Randomized algebraic laws for the exact-arithmetic core: resultants agree
//! across both construction routes, Sturm counting matches constructed root
//! sets, isolation and refinement keep their invariants, interval arithmetic
//! encloses sampled values, and the curvature model scales and dualizes the
//! way a diagonal metric family must.

use einflag::exactmath::resultant::{
    resultant_prs, resultant_sylvester, resultant_unipoly_prs, resultant_unipoly_sylvester,
};
use einflag::exactmath::{pow2_neg, rat_int, BiPoly, Int, Rational, UniPoly, Var};
use einflag::flagmodel::FlagSpace;
use einflag::realroots::{
    count_roots, eval_poly_interval, isolate_roots, refine, Bound, RatInterval,
};
use num_traits::Zero;
use proptest::prelude::*;

fn rational(num: i64, den: i64) -> Rational {
    Rational::new(Int::from(num), Int::from(den))
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| rational(n, d))
}

fn unipoly(max_deg: usize) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(small_rational(), 1..=max_deg + 1).prop_map(UniPoly::new)
}

fn nonzero_unipoly(max_deg: usize) -> impl Strategy<Value = UniPoly> {
    unipoly(max_deg).prop_filter("nonzero", |f| !f.is_zero())
}

fn distinct_roots(max_len: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::btree_set((-12i64..=12, 1i64..=6), 1..=max_len).prop_map(|set| {
        let dedup: std::collections::BTreeSet<Rational> =
            set.into_iter().map(|(n, d)| rational(n, d)).collect();
        dedup.into_iter().collect()
    })
}

fn poly_with_roots(roots: &[Rational]) -> UniPoly {
    let mut f = UniPoly::constant(rat_int(1));
    for r in roots {
        f = &f * &UniPoly::new(vec![-r.clone(), rat_int(1)]);
    }
    f
}

fn bipoly(max_deg: u32) -> impl Strategy<Value = BiPoly> {
    prop::collection::vec((small_rational(), 0..=max_deg, 0..=max_deg), 1..=6).prop_map(|terms| {
        let mut acc = BiPoly::zero();
        for (c, i, j) in terms {
            acc = &acc + &BiPoly::monomial(c, i, j);
        }
        acc
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn resultant_routes_agree_on_univariate_inputs(
        a in nonzero_unipoly(4),
        b in nonzero_unipoly(4),
    ) {
        prop_assert_eq!(
            resultant_unipoly_prs(&a, &b),
            resultant_unipoly_sylvester(&a, &b)
        );
    }

    #[test]
    fn resultant_swap_obeys_the_sign_rule(
        a in nonzero_unipoly(4),
        b in nonzero_unipoly(4),
    ) {
        let forward = resultant_unipoly_prs(&a, &b);
        let backward = resultant_unipoly_prs(&b, &a);
        let parity = a.degree_or_zero() * b.degree_or_zero();
        let expected = if parity % 2 == 0 { backward } else { -backward };
        prop_assert_eq!(forward, expected);
    }

    #[test]
    fn resultant_splits_over_products(
        a in nonzero_unipoly(3),
        b in nonzero_unipoly(3),
        c in nonzero_unipoly(3),
    ) {
        let joint = resultant_unipoly_prs(&(&a * &b), &c);
        let split = resultant_unipoly_prs(&a, &c) * resultant_unipoly_prs(&b, &c);
        prop_assert_eq!(joint, split);
    }

    #[test]
    fn resultant_detects_shared_and_disjoint_roots(
        mut roots in distinct_roots(4),
    ) {
        prop_assume!(roots.len() >= 3);
        let shared = roots.pop().unwrap();
        let half = roots.len() / 2;
        let mut left = roots[..half].to_vec();
        let right = roots[half..].to_vec();
        let disjoint = resultant_unipoly_prs(&poly_with_roots(&left), &poly_with_roots(&right));
        prop_assert!(!disjoint.is_zero());
        left.push(shared.clone());
        let mut both = right;
        both.push(shared);
        let collide = resultant_unipoly_prs(&poly_with_roots(&left), &poly_with_roots(&both));
        prop_assert!(collide.is_zero());
    }

    #[test]
    fn bivariate_resultant_routes_agree(
        a in bipoly(2),
        b in bipoly(2),
        eliminate in prop::bool::ANY,
    ) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let v = if eliminate { Var::First } else { Var::Second };
        prop_assert_eq!(resultant_prs(&a, &b, v), resultant_sylvester(&a, &b, v));
    }

    #[test]
    fn sturm_counts_match_a_constructed_root_set(
        roots in distinct_roots(4),
        window in (small_rational(), small_rational()),
    ) {
        let f = poly_with_roots(&roots);
        let (mut lo, mut hi) = window;
        if lo > hi {
            std::mem::swap(&mut lo, &mut hi);
        }
        let expected = roots.iter().filter(|r| lo < **r && **r <= hi).count();
        let counted = count_roots(&f, &Bound::finite(lo), &Bound::finite(hi));
        prop_assert_eq!(counted, expected);
    }

    #[test]
    fn isolation_separates_every_constructed_root(
        roots in distinct_roots(4),
    ) {
        let f = poly_with_roots(&roots);
        let isolated = isolate_roots(&f);
        prop_assert_eq!(isolated.len(), roots.len());
        for pair in isolated.windows(2) {
            prop_assert!(pair[0].hi <= pair[1].lo);
        }
        for r in &isolated {
            let inside = roots
                .iter()
                .filter(|t| r.lo <= **t && **t <= r.hi)
                .count();
            prop_assert_eq!(inside, 1);
            prop_assert_eq!(r.multiplicity, 1);
        }
    }

    #[test]
    fn repeated_factors_report_their_multiplicity(
        roots in distinct_roots(3),
        extra in 2usize..=3,
    ) {
        let doubled = roots[0].clone();
        let mut f = poly_with_roots(&roots);
        for _ in 1..extra {
            f = &f * &UniPoly::new(vec![-doubled.clone(), rat_int(1)]);
        }
        let hits: Vec<_> = isolate_roots(&f)
            .into_iter()
            .filter(|r| r.lo <= doubled && doubled <= r.hi)
            .collect();
        prop_assert_eq!(hits.len(), 1);
        prop_assert_eq!(hits[0].multiplicity, extra);
    }

    #[test]
    fn refinement_narrows_without_losing_the_root(
        roots in distinct_roots(3),
    ) {
        let f = poly_with_roots(&roots);
        for r in isolate_roots(&f) {
            let fine = refine(&r, 40, 4096).unwrap();
            prop_assert!(fine.width() <= pow2_neg(40));
            let kept = roots
                .iter()
                .filter(|t| fine.lo <= **t && **t <= fine.hi)
                .count();
            prop_assert_eq!(kept, 1);
        }
    }

    #[test]
    fn interval_evaluation_encloses_sampled_points(
        f in unipoly(4),
        a in small_rational(),
        b in small_rational(),
    ) {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let x = RatInterval::new(lo.clone(), hi.clone());
        let range = eval_poly_interval(&f, &x);
        let mid = x.midpoint();
        for t in [lo, mid, hi] {
            prop_assert!(range.contains(&f.eval(&t)));
        }
    }

    #[test]
    fn interval_products_enclose_pointwise_products(
        a in (small_rational(), small_rational()),
        b in (small_rational(), small_rational()),
    ) {
        let mk = |(x, y): (Rational, Rational)| {
            if x <= y { RatInterval::new(x, y) } else { RatInterval::new(y, x) }
        };
        let (xa, xb) = (mk(a), mk(b));
        let product = xa.mul(&xb);
        for s in [xa.lo(), &xa.midpoint(), xa.hi()] {
            for t in [xb.lo(), &xb.midpoint(), xb.hi()] {
                prop_assert!(product.contains(&(s * t)));
            }
        }
    }

    #[test]
    fn exact_division_inverts_multiplication(
        a in nonzero_unipoly(4),
        b in nonzero_unipoly(3),
    ) {
        let product = &a * &b;
        let back = product.exact_divide(&b).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn palindromic_products_keep_reciprocal_roots(
        roots in prop::collection::btree_set(
            ((-9i64..=9).prop_filter("nonzero", |n| *n != 0), 1i64..=4),
            1..=3,
        ),
    ) {
        let mut f = UniPoly::one();
        for (n, d) in &roots {
            let r = rational(*n, *d);
            let pair = &UniPoly::new(vec![-r.clone(), rat_int(1)])
                * &UniPoly::new(vec![-r.recip(), rat_int(1)]);
            f = &f * &pair;
        }
        prop_assert!(f.is_palindromic());
        for (n, d) in &roots {
            let r = rational(*n, *d);
            prop_assert!(f.eval(&r).is_zero());
            prop_assert!(f.eval(&r.recip()).is_zero());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn ricci_components_scale_inversely_with_the_metric(
        n in 3i64..=9,
        p_seed in 1i64..=8,
        coords in prop::collection::vec((1i64..=9, 1i64..=4), 4),
        lambda in (1i64..=7, 1i64..=3),
    ) {
        let p = 1 + p_seed % (n - 1);
        let space = FlagSpace::new(n, p).unwrap();
        let x: [Rational; 4] = std::array::from_fn(|k| rational(coords[k].0, coords[k].1));
        let scale = rational(lambda.0, lambda.1);
        let scaled: [Rational; 4] = std::array::from_fn(|k| &x[k] * &scale);
        let base = space.ricci_components(&x).unwrap();
        let moved = space.ricci_components(&scaled).unwrap();
        for k in 0..4 {
            prop_assert_eq!(&moved[k] * &scale, base[k].clone());
        }
    }

    #[test]
    fn ricci_components_respect_the_parameter_swap(
        n in 3i64..=9,
        p_seed in 1i64..=8,
        coords in prop::collection::vec((1i64..=9, 1i64..=4), 4),
    ) {
        let p = 1 + p_seed % (n - 1);
        let space = FlagSpace::new(n, p).unwrap();
        let dual = space.dual();
        let x: [Rational; 4] = std::array::from_fn(|k| rational(coords[k].0, coords[k].1));
        let swapped = FlagSpace::dual_metric(&x);
        let base = space.ricci_components(&x).unwrap();
        let moved = dual.ricci_components(&swapped).unwrap();
        prop_assert_eq!(moved[0].clone(), base[0].clone());
        prop_assert_eq!(moved[1].clone(), base[3].clone());
        prop_assert_eq!(moved[2].clone(), base[2].clone());
        prop_assert_eq!(moved[3].clone(), base[1].clone());
    }

    #[test]
    fn scaled_ricci_polynomials_are_homogeneous_cubics(
        n in 3i64..=8,
        p_seed in 1i64..=7,
        coords in prop::collection::vec((1i64..=6, 1i64..=3), 4),
        lambda in (1i64..=5, 1i64..=3),
    ) {
        let p = 1 + p_seed % (n - 1);
        let space = FlagSpace::new(n, p).unwrap();
        let x: [Rational; 4] = std::array::from_fn(|k| rational(coords[k].0, coords[k].1));
        let scale = rational(lambda.0, lambda.1);
        let scaled: [Rational; 4] = std::array::from_fn(|k| &x[k] * &scale);
        let cube = &(&scale * &scale) * &scale;
        for poly in space.scaled_ricci_polys() {
            prop_assert_eq!(poly.eval(&scaled), &cube * &poly.eval(&x));
        }
    }
}
