//! The `x1 = 1` case away from the `x1 = x3` slice: elimination of `x2` and
//! `x4`, exact factorization of the eliminant, closed-form solutions at the
//! rational specializations, and certified isolation of the remaining
//! quartic's roots.

use crate::exactmath::{rat_int, resultant, BiPoly, Rational, UniPoly, Var};
use crate::flagmodel::FlagSpace;
use crate::realroots::{eval_rational_interval, isolate_roots_in, refine, Bound, RatInterval};
use crate::solver::case1::{compose_rational, vanishes_at_root};
use crate::solver::{
    reference, Certificate, CoordValue, EinsteinSolution, Kind, Origin, ResidualCheck,
    SolverParams,
};
use crate::{EinflagError, Result};
use num_traits::{Signed, Zero};

/// The reduced case-2 system after eliminating `x2`. Both polynomials use
/// `x3` as the first variable and `x4` as the second.
#[derive(Clone, Debug)]
pub struct Case2System {
    /// First reduced equation: degree 4 in `x3`, degree 3 in `x4`.
    pub f1: BiPoly,
    /// Second reduced equation: degree 3 in `x3`, degree 3 in `x4`.
    pub f2: BiPoly,
    /// Numerator of the `x2` recovery map.
    pub x2_numer: BiPoly,
    /// Denominator of the `x2` recovery map.
    pub x2_denom: BiPoly,
}

fn bipow(base: &BiPoly, e: u32) -> BiPoly {
    let mut acc = BiPoly::one();
    for _ in 0..e {
        acc = &acc * base;
    }
    acc
}

/// `sum_k coeffs[k] * numer^k * denom^(d-k)` over bivariate polynomials.
fn compose_rational_bi(coeffs: &[BiPoly], numer: &BiPoly, denom: &BiPoly) -> BiPoly {
    let d = coeffs.len().saturating_sub(1) as u32;
    let mut acc = BiPoly::zero();
    for (k, c) in coeffs.iter().enumerate() {
        let k = k as u32;
        let term = &bipow(numer, k) * &bipow(denom, d - k);
        acc = &acc + &(c * &term);
    }
    acc
}

/// Does `eq` vanish identically on the zero locus of `denom`, where `denom`
/// is linear in the second variable with a constant leading coefficient?
/// Equivalent to divisibility of `eq` by `denom`.
fn vanishes_on_denominator_locus(eq: &BiPoly, denom: &BiPoly) -> Result<bool> {
    if denom.degree_in(Var::Second) != Some(1) {
        return Err(EinflagError::DegenerateDenominator);
    }
    let d1 = denom.coeff_wrt(Var::Second, 1);
    if d1.degree() != Some(0) {
        return Err(EinflagError::DegenerateDenominator);
    }
    let d0 = denom.coeff_wrt(Var::Second, 0);
    let coeffs = eq.coeffs_wrt(Var::Second);
    let cleared = compose_rational(
        &coeffs,
        &d0.scale(&rat_int(-1)),
        &UniPoly::constant(d1.coeff(0)),
    );
    Ok(cleared.is_zero())
}

/// Builds the reduced case-2 system: certifies the cubics and the `x2`
/// elimination map against their closed forms, clears denominators, strips
/// the spurious monomial and linear factors, and certifies the reduced
/// equations coefficient by coefficient.
pub fn build_case2(space: &FlagSpace) -> Result<Case2System> {
    let n = rat_int(space.n());
    let p = rat_int(space.p());
    let one = rat_int(1);
    let [c2, s2, s3] = space.einstein_system()?;

    if s2 != reference::case2_cubic_a(&n, &p) {
        return Err(EinflagError::FactorizationMismatch(
            "first cubic differs from its closed form".into(),
        ));
    }
    if s3 != reference::case2_cubic_b(&n, &p) {
        return Err(EinflagError::FactorizationMismatch(
            "second cubic differs from its closed form".into(),
        ));
    }
    if c2 != reference::cofactor_c2(&n, &p).eval_partial(0, &one) {
        return Err(EinflagError::FactorizationMismatch(
            "linear cofactor differs from its closed form".into(),
        ));
    }

    let (x2_numer, x2_denom) = reference::case2_x2_map(&n, &p);
    let c1 = c2.coeffs_wrt(1);
    if c1.len() != 2 {
        return Err(EinflagError::FactorizationMismatch(
            "linear cofactor is not linear in x2".into(),
        ));
    }
    let lin1 = c1[1].to_bipoly(2, 3);
    let lin0 = c1[0].to_bipoly(2, 3);
    let witness = &(&lin1 * &x2_numer) + &(&lin0 * &x2_denom);
    if !witness.is_zero() {
        return Err(EinflagError::FactorizationMismatch(
            "x2 elimination map does not solve the linear cofactor".into(),
        ));
    }

    let substitute = |cubic: &crate::exactmath::MPoly| -> BiPoly {
        let coeffs: Vec<BiPoly> = cubic
            .coeffs_wrt(1)
            .iter()
            .map(|c| c.to_bipoly(2, 3))
            .collect();
        compose_rational_bi(&coeffs, &x2_numer, &x2_denom)
    };
    let sub_a = substitute(&s2);
    let sub_b = substitute(&s3);
    if vanishes_on_denominator_locus(&sub_a, &x2_denom)?
        || vanishes_on_denominator_locus(&sub_b, &x2_denom)?
    {
        return Err(EinflagError::DegenerateDenominator);
    }

    let f1 = sub_a.divide_monomial(0, 1)?.scale(&rat_int(-1));
    if f1 != reference::case2_eq_f1(&n, &p) {
        return Err(EinflagError::FactorizationMismatch(
            "first reduced equation differs from its closed form".into(),
        ));
    }
    let scale_b = -(&one / &(&(&n - &p) + &one));
    let f2 = sub_b
        .divide_monomial(0, 1)?
        .divide_linear(Var::First, &rat_int(-1))?
        .scale(&scale_b);
    if f2 != reference::case2_eq_f2(&n, &p) {
        return Err(EinflagError::FactorizationMismatch(
            "second reduced equation differs from its closed form".into(),
        ));
    }

    Ok(Case2System {
        f1,
        f2,
        x2_numer,
        x2_denom,
    })
}

/// The fully factored `x4` eliminant of the reduced system.
#[derive(Clone, Debug)]
pub struct ResultantFactorization {
    /// The raw eliminant in `x3`.
    pub resultant: UniPoly,
    /// Certified constant in front of the factorization.
    pub prefactor: Rational,
    /// Roots of the four rational linear factors.
    pub linear_roots: [Rational; 4],
    /// The remaining quartic factor, in its reference normalization.
    pub quartic: UniPoly,
}

/// Eliminates `x4` from the reduced system and certifies the exact
/// factorization `prefactor * (x3+1)^4 * prod (x3 - rho_i) * quartic`.
pub fn factor_resultant(space: &FlagSpace, sys: &Case2System) -> Result<ResultantFactorization> {
    let n = rat_int(space.n());
    let p = rat_int(space.p());
    let res = resultant(&sys.f1, &sys.f2, Var::Second);

    let shifted = UniPoly::from_ints(&[1, 1]).pow(4);
    let mut quot = res.exact_divide(&shifted).map_err(|_| {
        EinflagError::FactorizationMismatch("eliminant lacks the (x3+1)^4 factor".into())
    })?;
    let linear_roots = reference::linear_roots(&n, &p);
    for rho in &linear_roots {
        let lin = UniPoly::new(vec![-rho.clone(), rat_int(1)]);
        quot = quot.exact_divide(&lin).map_err(|_| {
            EinflagError::FactorizationMismatch(
                "eliminant lacks one of its rational linear factors".into(),
            )
        })?;
    }
    let quartic = reference::quartic_q(&n, &p);
    let prefactor = quot.scalar_multiple_of(&quartic).ok_or_else(|| {
        EinflagError::FactorizationMismatch(
            "eliminant quotient is not a scalar multiple of the quartic factor".into(),
        )
    })?;
    if prefactor != reference::resultant_prefactor(&n, &p) {
        return Err(EinflagError::FactorizationMismatch(
            "eliminant prefactor differs from its closed form".into(),
        ));
    }

    Ok(ResultantFactorization {
        resultant: res,
        prefactor,
        linear_roots,
        quartic,
    })
}

/// Solves the reduced system at each rational `x3` specialization, certifies
/// exactly zero residuals, and checks the resulting set against the
/// closed-form Kaehler metrics.
pub fn solve_case2a(space: &FlagSpace, sys: &Case2System) -> Result<Vec<EinsteinSolution>> {
    let n = rat_int(space.n());
    let p = rat_int(space.p());
    let system = space.einstein_system()?;
    let linear_roots = reference::linear_roots(&n, &p);

    let mut found: Vec<([Rational; 4], u8)> = Vec::new();
    for (idx, rho) in linear_roots.iter().enumerate() {
        let u1 = sys.f1.eval_partial(Var::First, rho);
        let u2 = sys.f2.eval_partial(Var::First, rho);
        let g = u1.gcd(&u2);
        for root in isolate_roots_in(&g, &Bound::finite(rat_int(0)), &Bound::PosInf) {
            if !root.is_exact() {
                return Err(EinflagError::UnexpectedNonKahler(format!(
                    "irrational x4 at the rational specialization x3 = {rho}"
                )));
            }
            let x4 = root.lo.clone();
            let d = sys.x2_denom.eval(rho, &x4);
            if d.is_zero() {
                return Err(EinflagError::DegenerateDenominator);
            }
            let x2 = sys.x2_numer.eval(rho, &x4) / d;
            if !x2.is_positive() {
                continue;
            }
            let coords = [rat_int(1), x2, rho.clone(), x4];
            for eq in &system {
                if !eq.eval(&coords).is_zero() {
                    return Err(EinflagError::UnexpectedNonKahler(format!(
                        "nonzero residual at the rational specialization x3 = {rho}"
                    )));
                }
            }
            if !found.iter().any(|(c, _)| *c == coords) {
                found.push((coords, (idx + 1) as u8));
            }
        }
    }

    let expected = space.kahler_einstein_metrics()?;
    if found.len() != expected.len() {
        return Err(EinflagError::UnexpectedNonKahler(format!(
            "rational specializations produced {} solutions, expected {}",
            found.len(),
            expected.len()
        )));
    }
    let mut solutions = Vec::new();
    for (coords, sub) in found {
        let matched = expected.iter().find(|(ke, _)| *ke == coords);
        let Some((_, constant)) = matched else {
            return Err(EinflagError::UnexpectedNonKahler(format!(
                "specialization solution ({}, {}, {}, {}) is not a closed-form Kaehler metric",
                coords[0], coords[1], coords[2], coords[3]
            )));
        };
        let exact = space.einstein_constant(&coords)?;
        if exact != *constant {
            return Err(EinflagError::NotEinstein(
                "Einstein constant disagrees with the closed-form value".into(),
            ));
        }
        solutions.push(EinsteinSolution {
            metric: [
                CoordValue::Exact(coords[0].clone()),
                CoordValue::Exact(coords[1].clone()),
                CoordValue::Exact(coords[2].clone()),
                CoordValue::Exact(coords[3].clone()),
            ],
            einstein_constant: CoordValue::Exact(exact),
            kind: Kind::Kahler,
            origin: Origin::Case2a(sub),
            certificate: Certificate {
                positivity: true,
                residual: ResidualCheck::ExactZero,
                width_exp: None,
            },
        });
    }
    Ok(solutions)
}

/// Isolates the positive roots of the quartic eliminant factor, certifies
/// that the parametrized `x4` and `x2` values solve the full system on its
/// root set, and returns the admissible (all-positive) solutions with
/// certified enclosures.
pub fn solve_case2b(
    space: &FlagSpace,
    sys: &Case2System,
    fact: &ResultantFactorization,
    params: &SolverParams,
) -> Result<Vec<EinsteinSolution>> {
    let n = rat_int(space.n());
    let p = rat_int(space.p());
    let q = &fact.quartic;

    let sep = q.gcd(&q.derivative());
    if sep.degree() != Some(0) {
        return Err(EinflagError::FactorizationMismatch(
            "quartic eliminant factor is not square-free".into(),
        ));
    }

    let x4_map = reference::x4_from_x3(&n, &p);
    let x2_map = reference::x2_from_x3(&n, &p);

    // The x3-x4 constraint is literally denom * x4 - numer.
    let built = &(&BiPoly::from_unipoly(&x4_map.denom, Var::First) * &BiPoly::var(Var::Second))
        - &BiPoly::from_unipoly(&x4_map.numer, Var::First);
    if built != reference::x3_x4_constraint(&n, &p) {
        return Err(EinflagError::FactorizationMismatch(
            "x4 recovery map does not match the x3-x4 constraint".into(),
        ));
    }

    // Membership: substituting x4 = numer/denom into each reduced equation
    // and clearing denominators must land in the ideal of the quartic.
    for eq in [&sys.f1, &sys.f2] {
        let cleared = compose_rational(&eq.coeffs_wrt(Var::Second), &x4_map.numer, &x4_map.denom);
        cleared.exact_divide(q).map_err(|_| {
            EinflagError::MembershipFailure(
                "substituted reduced equation is not divisible by the quartic factor".into(),
            )
        })?;
    }

    // Cross identity tying the x2 recovery map to the x2 elimination map
    // composed with the x4 recovery map.
    let shifted = UniPoly::from_ints(&[1, 1]);
    let two_n1 = rat_int(2) * (&n + rat_int(1));
    let p1 = &p + rat_int(1);
    let npp1 = &(&n - &p) + rat_int(1);
    let inner = &x4_map.numer.scale(&two_n1) - &(&x4_map.denom * &shifted).scale(&p1);
    let lhs = &(&x2_map.numer * &inner) - &(&(&x2_map.denom * &shifted) * &x4_map.numer).scale(&npp1);
    if !lhs.is_zero() {
        return Err(EinflagError::MembershipFailure(
            "x2 recovery map is inconsistent with the x2 elimination map".into(),
        ));
    }
    let membership = reference::x2_membership_poly(&n, &p);
    let rebuilt = &(&BiPoly::from_unipoly(&x2_map.denom, Var::First) * &BiPoly::var(Var::Second))
        - &BiPoly::from_unipoly(&x2_map.numer, Var::First);
    if rebuilt != membership {
        return Err(EinflagError::FactorizationMismatch(
            "x2 recovery map does not match its membership form".into(),
        ));
    }

    // Denominators must be invertible on the quartic's root set.
    for den in [&x4_map.denom, &x2_map.denom] {
        if q.gcd(den).degree() != Some(0) {
            return Err(EinflagError::DegenerateDenominator);
        }
    }
    // The quartic must not share roots with the rational specializations.
    for rho in &fact.linear_roots {
        if q.eval(rho).is_zero() {
            return Err(EinflagError::FactorizationMismatch(
                "quartic factor vanishes at a rational specialization".into(),
            ));
        }
    }

    let target = params.target_width();
    let mut solutions = Vec::new();
    for root in isolate_roots_in(q, &Bound::finite(rat_int(0)), &Bound::PosInf) {
        // A quartic root shared with a recovery-map numerator pins that
        // coordinate to exactly zero, which no amount of interval refinement
        // can certify sign-definite. Detect the coincidence algebraically
        // and drop the point: a zero coordinate is not a metric.
        if vanishes_at_root(&x4_map.numer, &root) || vanishes_at_root(&x2_map.numer, &root) {
            continue;
        }
        let mut exp = params.precision_exp;
        let mut r = refine(&root, exp, params.cap_exp)?;
        let (x3i, x4i, x2i, reached) = loop {
            let x3i = r.interval();
            let decided = (|| -> Option<(RatInterval, RatInterval)> {
                let x4i = eval_rational_interval(&x4_map.numer, &x4_map.denom, &x3i).ok()?;
                let x2i = eval_rational_interval(&x2_map.numer, &x2_map.denom, &x3i).ok()?;
                let definite = |v: &RatInterval| v.is_point() || v.is_positive() || v.is_negative();
                if !(definite(&x4i) && definite(&x2i)) {
                    return None;
                }
                if x4i.width() > target || x2i.width() > target {
                    return None;
                }
                if fact.linear_roots.iter().any(|rho| x3i.contains(rho)) {
                    return None;
                }
                Some((x4i, x2i))
            })();
            if let Some((x4i, x2i)) = decided {
                break (x3i, x4i, x2i, exp);
            }
            if exp >= params.cap_exp {
                return Err(EinflagError::PositivityUndecided(
                    "coordinate enclosures stayed undecided down to the refinement floor".into(),
                ));
            }
            exp = exp.saturating_mul(2).min(params.cap_exp);
            r = refine(&r, exp, params.cap_exp)?;
        };

        if !(root.is_positive() && x4i.is_positive() && x2i.is_positive()) {
            continue;
        }
        let coords = [
            RatInterval::point(rat_int(1)),
            x2i.clone(),
            x3i.clone(),
            x4i.clone(),
        ];
        let constant = space.einstein_constant_interval(&coords)?;
        solutions.push(EinsteinSolution {
            metric: [
                CoordValue::Exact(rat_int(1)),
                CoordValue::Interval(x2i),
                CoordValue::Interval(x3i),
                CoordValue::Interval(x4i),
            ],
            einstein_constant: CoordValue::Interval(constant),
            kind: Kind::NonKahler,
            origin: Origin::Case2b,
            certificate: Certificate {
                positivity: true,
                residual: ResidualCheck::QuarticMembership,
                width_exp: Some(reached),
            },
        });
    }
    Ok(solutions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, Int};

    fn space(n: i64, p: i64) -> FlagSpace {
        FlagSpace::new(n, p).unwrap()
    }

    #[test]
    fn reduced_system_matches_closed_forms() {
        for (n, p) in [(3, 1), (3, 2), (4, 2), (7, 3), (10, 9)] {
            build_case2(&space(n, p)).unwrap();
        }
    }

    #[test]
    fn factorization_at_3_1() {
        let s = space(3, 1);
        let sys = build_case2(&s).unwrap();
        let fact = factor_resultant(&s, &sys).unwrap();
        assert_eq!(
            fact.linear_roots,
            [rat(7, 3), rat_int(3), rat(3, 7), rat(1, 3)]
        );
        let q = &fact.quartic;
        assert_eq!(
            (0..=4).map(|k| q.coeff(k)).collect::<Vec<_>>(),
            [117, -912, 1782, -912, 117]
                .into_iter()
                .map(rat_int)
                .collect::<Vec<_>>()
        );
        assert!(q.is_palindromic());
    }

    #[test]
    fn factorization_handles_coincident_roots_at_n_2p() {
        for (n, p) in [(4, 2), (8, 4), (10, 5)] {
            let s = space(n, p);
            let sys = build_case2(&s).unwrap();
            let fact = factor_resultant(&s, &sys).unwrap();
            assert_eq!(fact.linear_roots[0], fact.linear_roots[1]);
            assert_eq!(fact.linear_roots[2], fact.linear_roots[3]);
        }
    }

    #[test]
    fn rational_specializations_recover_kahler_metrics() {
        for (n, p) in [(3, 1), (3, 2), (4, 2), (6, 1)] {
            let s = space(n, p);
            let sys = build_case2(&s).unwrap();
            let sols = solve_case2a(&s, &sys).unwrap();
            assert_eq!(sols.len(), 4, "at ({n},{p})");
            assert!(sols.iter().all(|sol| sol.kind == Kind::Kahler));
        }
    }

    #[test]
    fn quartic_roots_give_two_admissible_metrics() {
        let params = SolverParams::default();
        for (n, p) in [(3, 1), (4, 2), (5, 2)] {
            let s = space(n, p);
            let sys = build_case2(&s).unwrap();
            let fact = factor_resultant(&s, &sys).unwrap();
            let sols = solve_case2b(&s, &sys, &fact, &params).unwrap();
            assert_eq!(sols.len(), 2, "at ({n},{p})");
            for sol in &sols {
                assert_eq!(sol.kind, Kind::NonKahler);
                for coord in &sol.metric[1..] {
                    let iv = coord.as_interval();
                    assert!(iv.is_positive());
                    assert!(iv.width() <= params.target_width());
                }
            }
        }
    }

    #[test]
    fn non_kahler_enclosures_match_frozen_digits_at_3_1() {
        let params = SolverParams::default();
        let s = space(3, 1);
        let sys = build_case2(&s).unwrap();
        let fact = factor_resultant(&s, &sys).unwrap();
        let mut sols = solve_case2b(&s, &sys, &fact, &params).unwrap();
        sols.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        // 30-digit roundings of the two solutions, as (x2, x3, x4, e).
        let expected = [
            [
                "1.16862145332241010421570473330",
                "0.500765459710246156054831414929",
                "0.723723634483634060837282041928",
                "0.440126954145134010897211116105",
            ],
            [
                "2.33367024554489047300267510636",
                "1.99694284142245326672678874541",
                "1.44523473105033318304776446440",
                "0.220400376523358462941155407365",
            ],
        ];
        // Fixture rounding error is below 1e-28 and the certified enclosures
        // are 2^-80 wide, so an exact-rational 1e-24 margin is decisive.
        let margin = Rational::new(Int::from(1), Int::from(10u8).pow(24));
        for (sol, exp) in sols.iter().zip(expected.iter()) {
            let values = [
                &sol.metric[1],
                &sol.metric[2],
                &sol.metric[3],
                &sol.einstein_constant,
            ];
            for (value, digits) in values.iter().zip(exp.iter()) {
                let target = decimal_to_rational(digits);
                let err = (value.midpoint() - &target).abs();
                assert!(
                    err < margin,
                    "expected {digits}, enclosure midpoint off by {err}"
                );
            }
        }
    }

    fn decimal_to_rational(s: &str) -> Rational {
        let (int_part, frac_part) = s.split_once('.').unwrap_or((s, ""));
        let digits: String = format!("{int_part}{frac_part}");
        let numer: Int = digits.parse().unwrap();
        let denom = Int::from(10u8).pow(frac_part.len() as u32);
        Rational::new(numer, denom)
    }

    #[test]
    fn reciprocal_pairing_of_non_kahler_solutions() {
        let params = SolverParams::default();
        for (n, p) in [(3, 1), (5, 2)] {
            let s = space(n, p);
            let sys = build_case2(&s).unwrap();
            let fact = factor_resultant(&s, &sys).unwrap();
            let mut sols = solve_case2b(&s, &sys, &fact, &params).unwrap();
            sols.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
            assert_eq!(sols.len(), 2);
            // The second solution is the first one relabeled through
            // (1, x2, x3, x4) -> (1, x2/x3, 1/x3, x4/x3).
            let first = &sols[0].metric;
            let second = &sols[1].metric;
            let x3 = first[2].as_interval();
            let inv = x3.recip().unwrap();
            assert!(!second[2].as_interval().disjoint_from(&inv));
            let x2_over = first[1].as_interval().div(&x3).unwrap();
            assert!(!second[1].as_interval().disjoint_from(&x2_over));
            let x4_over = first[3].as_interval().div(&x3).unwrap();
            assert!(!second[3].as_interval().disjoint_from(&x4_over));
        }
    }
}
