//! Full certified enumeration for one parameter pair, and the duality
//! cross-check between a pair and its complement.

use crate::flagmodel::FlagSpace;
use crate::solver::{case1, case2, EinsteinSolution, SolverParams};
use crate::Result;

/// Every invariant Einstein metric on one space, sorted by `x3` then `x2`.
#[derive(Clone, Debug)]
pub struct Enumeration {
    pub space: FlagSpace,
    pub solutions: Vec<EinsteinSolution>,
}

impl Enumeration {
    pub fn kahler_count(&self) -> usize {
        self.solutions
            .iter()
            .filter(|s| s.kind == crate::solver::Kind::Kahler)
            .count()
    }

    pub fn non_kahler_count(&self) -> usize {
        self.solutions.len() - self.kahler_count()
    }
}

/// Enumerates with parameters taken from the environment.
pub fn enumerate_einstein(n: i64, p: i64) -> Result<Enumeration> {
    enumerate_einstein_with(n, p, &SolverParams::from_env())
}

/// Runs both cases of the normalization split, merges the admissible
/// solutions, removes cross-case duplicates, and sorts deterministically.
pub fn enumerate_einstein_with(n: i64, p: i64, params: &SolverParams) -> Result<Enumeration> {
    let space = FlagSpace::new(n, p)?;
    let slice = case1::solve_case1(&space, params)?;
    let sys = case2::build_case2(&space)?;
    let fact = case2::factor_resultant(&space, &sys)?;
    let kahler = case2::solve_case2a(&space, &sys)?;
    let non_kahler = case2::solve_case2b(&space, &sys, &fact, params)?;

    let mut solutions: Vec<EinsteinSolution> = Vec::new();
    for sol in slice.into_iter().chain(kahler).chain(non_kahler) {
        if !solutions.iter().any(|s| s.coincides_with(&sol)) {
            solutions.push(sol);
        }
    }
    solutions.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    Ok(Enumeration { space, solutions })
}

/// The complement pair `(n, n-p)` must produce exactly the solutions of
/// `(n, p)` with `x2` and `x4` exchanged, kinds and Einstein constants
/// preserved. Exact coordinates are compared for equality, certified
/// enclosures for overlap.
pub fn duality_check(n: i64, p: i64, params: &SolverParams) -> Result<bool> {
    let a = enumerate_einstein_with(n, p, params)?;
    let b = enumerate_einstein_with(n, n - p, params)?;
    Ok(enumerations_dual(&a, &b))
}

/// Solution-set comparison behind [`duality_check`], reusable when both
/// enumerations are already at hand.
pub fn enumerations_dual(a: &Enumeration, b: &Enumeration) -> bool {
    if a.space.n() != b.space.n() || a.space.p() != b.space.n() - b.space.p() {
        return false;
    }
    if a.solutions.len() != b.solutions.len() {
        return false;
    }
    let mut used = vec![false; b.solutions.len()];
    for sol in &a.solutions {
        let mut swapped = sol.clone();
        swapped.metric.swap(1, 3);
        let mut matched = false;
        for (k, other) in b.solutions.iter().enumerate() {
            if used[k] {
                continue;
            }
            if swapped.coincides_with(other)
                && swapped.kind == other.kind
                && swapped
                    .einstein_constant
                    .overlaps(&other.einstein_constant)
            {
                used[k] = true;
                matched = true;
                break;
            }
        }
        if !matched {
            return false;
        }
    }
    true
}
