//! The `x1 = x3` slice of the Einstein system: reduction to a pair of
//! certified quartics and the (empty) set of admissible positive roots.

use crate::exactmath::{rat_int, BiPoly, UniPoly, Var};
use crate::flagmodel::FlagSpace;
use crate::realroots::{
    count_roots, eval_rational_interval, isolate_roots_in, refine, Bound, IsolatedRoot,
    RatInterval,
};
use crate::solver::{
    reference, Certificate, CoordValue, EinsteinSolution, Kind, Origin, ResidualCheck,
    SolverParams,
};
use crate::{EinflagError, Result};
use num_traits::Zero;

/// The `x1 = x3 = 1` slice reduced to two bivariate quadrics and their two
/// univariate eliminants. Both bivariate polynomials use `x2` as the first
/// variable and `x4` as the second.
#[derive(Clone, Debug)]
pub struct Case1System {
    /// Quadratic in `x2`, linear in `x4`.
    pub eq_x2: BiPoly,
    /// Quadratic in `x4`, linear in `x2`.
    pub eq_x4: BiPoly,
    /// Eliminant in `x4`: positive roots would give slice solutions.
    pub quartic_f: UniPoly,
    /// Eliminant in `x2`: the same solutions seen through the other
    /// variable.
    pub quartic_g: UniPoly,
}

/// `sum_k coeffs[k] * numer^k * denom^(d-k)`: a polynomial with the rational
/// function `numer/denom` substituted for its variable, denominators
/// cleared.
pub(crate) fn compose_rational(coeffs: &[UniPoly], numer: &UniPoly, denom: &UniPoly) -> UniPoly {
    let d = coeffs.len().saturating_sub(1) as u32;
    let mut acc = UniPoly::zero();
    for (k, c) in coeffs.iter().enumerate() {
        let k = k as u32;
        let term = &numer.pow(k) * &denom.pow(d - k);
        acc = &acc + &(c * &term);
    }
    acc
}

/// Certifies that `map` is the unique solution of the bivariate equation
/// `eq` for its `solved` variable: writing `eq = c1 * v + c0` in that
/// variable, checks `c1 * numer + c0 * denom == 0` identically.
fn certify_linear_solve(eq: &BiPoly, solved: Var, map: &reference::RationalMap) -> Result<()> {
    if eq.degree_in(solved) != Some(1) {
        return Err(EinflagError::FactorizationMismatch(
            "equation is not linear in the variable being eliminated".into(),
        ));
    }
    let c1 = eq.coeff_wrt(solved, 1);
    let c0 = eq.coeff_wrt(solved, 0);
    let witness = &(&c1 * &map.numer) + &(&c0 * &map.denom);
    if witness.is_zero() {
        Ok(())
    } else {
        Err(EinflagError::FactorizationMismatch(
            "rational elimination map does not solve its defining equation".into(),
        ))
    }
}

/// Builds the slice system from the full Einstein equations and certifies
/// every derived polynomial against its closed form.
pub fn build_case1(space: &FlagSpace) -> Result<Case1System> {
    let n = rat_int(space.n());
    let p = rat_int(space.p());
    let [_, s2, s3] = space.einstein_system()?;
    let one = rat_int(1);
    let minus_one = rat_int(-1);

    let slice_a = s2.eval_partial(2, &one);
    let slice_b = s3.eval_partial(2, &one);
    let eq_a = slice_a.divide_monomial([0, 0, 0, 1])?.scale(&minus_one);
    let eq_b = slice_b.divide_monomial([0, 1, 0, 0])?.scale(&minus_one);
    let eq_x2 = eq_a.to_bipoly(1, 3);
    let eq_x4 = eq_b.to_bipoly(1, 3);
    if eq_x2 != reference::case1_quadratic_x2(&n, &p) {
        return Err(EinflagError::FactorizationMismatch(
            "slice equation in x2 differs from its closed form".into(),
        ));
    }
    if eq_x4 != reference::case1_quadratic_x4(&n, &p) {
        return Err(EinflagError::FactorizationMismatch(
            "slice equation in x4 differs from its closed form".into(),
        ));
    }

    let x2_map = reference::case1_x2_from_x4(&n, &p);
    certify_linear_solve(&eq_x4, Var::First, &x2_map)?;
    let x4_map = reference::case1_x4_from_x2(&n, &p);
    certify_linear_solve(&eq_x2, Var::Second, &x4_map)?;

    let f_raw = compose_rational(&eq_x2.coeffs_wrt(Var::First), &x2_map.numer, &x2_map.denom);
    let quartic_f = reference::quartic_f(&n, &p);
    match f_raw.scalar_multiple_of(&quartic_f) {
        Some(c) if !c.is_zero() => {}
        _ => {
            return Err(EinflagError::FactorizationMismatch(
                "x4 eliminant is not a scalar multiple of its closed form".into(),
            ))
        }
    }

    let g_raw = compose_rational(&eq_x4.coeffs_wrt(Var::Second), &x4_map.numer, &x4_map.denom);
    let quartic_g = reference::quartic_g(&n, &p);
    match g_raw.scalar_multiple_of(&quartic_g) {
        Some(c) if !c.is_zero() => {}
        _ => {
            return Err(EinflagError::FactorizationMismatch(
                "x2 eliminant is not a scalar multiple of its closed form".into(),
            ))
        }
    }

    Ok(Case1System {
        eq_x2,
        eq_x4,
        quartic_f,
        quartic_g,
    })
}

/// Does `witness` vanish at the algebraic number described by `root`?
/// Decided exactly through a gcd with the root's defining polynomial.
pub(crate) fn vanishes_at_root(witness: &UniPoly, root: &IsolatedRoot) -> bool {
    if witness.is_zero() {
        return true;
    }
    if root.is_exact() {
        return witness.eval(&root.lo).is_zero();
    }
    let g = root.poly.gcd(witness);
    if g.degree() == Some(0) {
        return false;
    }
    count_roots(
        &g,
        &Bound::finite(root.lo.clone()),
        &Bound::finite(root.hi.clone()),
    ) == 1
}

/// Refines `root` until `map` evaluated over its interval is sign-definite
/// and narrower than the target width. Returns the refined root and the
/// certified value enclosure.
pub(crate) fn refined_map_value(
    root: &IsolatedRoot,
    map: &reference::RationalMap,
    params: &SolverParams,
) -> Result<(IsolatedRoot, RatInterval)> {
    let target = params.target_width();
    let mut exp = params.precision_exp;
    let mut r = refine(root, exp, params.cap_exp)?;
    loop {
        if let Ok(v) = eval_rational_interval(&map.numer, &map.denom, &r.interval()) {
            let decided = v.is_point() || v.is_positive() || v.is_negative();
            if decided && v.width() <= target {
                return Ok((r, v));
            }
        }
        if exp >= params.cap_exp {
            return Err(EinflagError::PositivityUndecided(
                "rational map value stayed undecided down to the refinement floor".into(),
            ));
        }
        exp = exp.saturating_mul(2).min(params.cap_exp);
        r = refine(&r, exp, params.cap_exp)?;
    }
}

/// Admissible slice root paired with the value of the other coordinate.
struct SliceCandidate {
    primary: IsolatedRoot,
    partner: RatInterval,
}

/// Positive roots of `quartic` whose partner coordinate under `map` is
/// certified positive and at which `other_witness` also vanishes.
fn admissible_roots(
    quartic: &UniPoly,
    map: &reference::RationalMap,
    other_witness: &UniPoly,
    params: &SolverParams,
) -> Result<Vec<SliceCandidate>> {
    let zero = Bound::finite(rat_int(0));
    let mut out = Vec::new();
    for root in isolate_roots_in(quartic, &zero, &Bound::PosInf) {
        if !vanishes_at_root(other_witness, &root) {
            continue;
        }
        let (refined, partner) = refined_map_value(&root, map, params)?;
        if partner.is_positive() {
            out.push(SliceCandidate {
                primary: refined,
                partner,
            });
        }
    }
    Ok(out)
}

/// Enumerates the admissible solutions on the `x1 = x3` slice. Both
/// eliminants are solved independently and must describe the same set; the
/// expected outcome for every valid parameter pair is an empty list.
pub fn solve_case1(space: &FlagSpace, params: &SolverParams) -> Result<Vec<EinsteinSolution>> {
    let sys = build_case1(space)?;

    // The cleared composite `c1 * numer + c0 * denom` of the equation the
    // map was derived from is identically zero, so the residual witness for
    // an f-root is the corresponding composite of the *other* equation.
    // Both were certified zero in `build_case1`; recompute them here so the
    // admissibility decision never depends on that certification.
    let n = rat_int(space.n());
    let p = rat_int(space.p());
    let x2_map = reference::case1_x2_from_x4(&n, &p);
    let x4_map = reference::case1_x4_from_x2(&n, &p);
    let witness_f = &(&sys.eq_x4.coeff_wrt(Var::First, 1) * &x2_map.numer)
        + &(&sys.eq_x4.coeff_wrt(Var::First, 0) * &x2_map.denom);
    let witness_g = &(&sys.eq_x2.coeff_wrt(Var::Second, 1) * &x4_map.numer)
        + &(&sys.eq_x2.coeff_wrt(Var::Second, 0) * &x4_map.denom);

    let from_f = admissible_roots(&sys.quartic_f, &x2_map, &witness_f, params)?;
    let from_g = admissible_roots(&sys.quartic_g, &x4_map, &witness_g, params)?;

    if from_f.len() != from_g.len() {
        return Err(EinflagError::FactorizationMismatch(
            "the two slice eliminants disagree on the number of admissible roots".into(),
        ));
    }
    for cand in &from_f {
        let x4 = cand.primary.interval();
        let x2 = &cand.partner;
        let matched = from_g.iter().any(|other| {
            !other.primary.interval().disjoint_from(x2)
                && !other.partner.disjoint_from(&x4)
        });
        if !matched {
            return Err(EinflagError::FactorizationMismatch(
                "a slice root has no partner under the dual elimination".into(),
            ));
        }
    }

    let mut solutions = Vec::new();
    for cand in from_f {
        let one = RatInterval::point(rat_int(1));
        let x2 = cand.partner.clone();
        let x4 = cand.primary.interval();
        let coords = [one.clone(), x2.clone(), one.clone(), x4.clone()];
        let constant = space.einstein_constant_interval(&coords)?;
        solutions.push(EinsteinSolution {
            metric: [
                CoordValue::Exact(rat_int(1)),
                CoordValue::Interval(x2),
                CoordValue::Exact(rat_int(1)),
                CoordValue::Interval(x4),
            ],
            einstein_constant: CoordValue::Interval(constant),
            kind: Kind::NonKahler,
            origin: Origin::Case1,
            certificate: Certificate {
                positivity: true,
                residual: ResidualCheck::QuarticMembership,
                width_exp: Some(params.precision_exp),
            },
        });
    }
    Ok(solutions)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(n: i64, p: i64) -> FlagSpace {
        FlagSpace::new(n, p).unwrap()
    }

    #[test]
    fn slice_system_matches_closed_forms() {
        for (n, p) in [(3, 1), (3, 2), (4, 2), (7, 3), (10, 9)] {
            build_case1(&space(n, p)).unwrap();
        }
    }

    #[test]
    fn quartic_fixtures_at_3_1() {
        let sys = build_case1(&space(3, 1)).unwrap();
        assert_eq!(sys.quartic_f.eval(&rat_int(0)), rat_int(160));
        assert_eq!(sys.quartic_f.lc(), rat_int(72));
        assert_eq!(sys.quartic_g.eval(&rat_int(0)), rat_int(432));
        assert_eq!(sys.quartic_g.lc(), rat_int(60));
    }

    #[test]
    fn eliminants_swap_under_duality() {
        for (n, p) in [(5, 1), (5, 2), (5, 3), (5, 4), (8, 3)] {
            let a = build_case1(&space(n, p)).unwrap();
            let b = build_case1(&space(n, n - p)).unwrap();
            assert_eq!(a.quartic_f, b.quartic_g);
            assert_eq!(a.quartic_g, b.quartic_f);
        }
    }

    #[test]
    fn no_admissible_slice_roots() {
        let params = SolverParams::default();
        for (n, p) in [(3, 1), (4, 2), (6, 1), (6, 5), (9, 4)] {
            let sols = solve_case1(&space(n, p), &params).unwrap();
            assert!(sols.is_empty(), "unexpected slice solution at ({n},{p})");
        }
    }

    #[test]
    fn vanishing_witness_detects_common_roots() {
        // x^2 - 2 shares its positive root with (x^2 - 2)(x - 5).
        let a = UniPoly::from_ints(&[-2, 0, 1]);
        let b = &a * &UniPoly::from_ints(&[-5, 1]);
        let roots = isolate_roots_in(&a, &Bound::finite(rat_int(0)), &Bound::PosInf);
        assert_eq!(roots.len(), 1);
        assert!(vanishes_at_root(&b, &roots[0]));
        assert!(!vanishes_at_root(&UniPoly::from_ints(&[-5, 1]), &roots[0]));
        assert!(vanishes_at_root(&UniPoly::zero(), &roots[0]));
        let exact = isolate_roots_in(
            &UniPoly::from_ints(&[-3, 1]),
            &Bound::finite(rat_int(0)),
            &Bound::PosInf,
        );
        assert_eq!(exact.len(), 1);
        assert!(exact[0].is_exact());
        assert!(vanishes_at_root(&UniPoly::from_ints(&[-3, 1]), &exact[0]));
        assert!(!vanishes_at_root(&UniPoly::from_ints(&[-4, 1]), &exact[0]));
    }
}
