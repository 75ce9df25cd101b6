//! Sturm chains, exact root counting, isolation, and refinement.

use super::interval::RatInterval;
use crate::exactmath::{pow2_neg, rat_int, sign, Rational, UniPoly};
use crate::{EinflagError, Result};
use num_traits::{One, Signed, Zero};

/// One end of a (half-)open counting range.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Bound {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl Bound {
    pub fn finite(r: Rational) -> Bound {
        Bound::Finite(r)
    }
}

/// A Sturm chain of the square-free part of a polynomial. Each element is
/// scaled by a positive constant to coprime integer coefficients, so signs
/// are preserved while coefficients stay small.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<UniPoly>,
}

impl SturmChain {
    /// Builds the chain for the square-free part of `f`; panics on zero input.
    pub fn new(f: &UniPoly) -> Self {
        assert!(!f.is_zero(), "Sturm chain of the zero polynomial");
        let g = f.squarefree_part();
        let mut chain = vec![g.clone()];
        if g.degree().unwrap_or(0) >= 1 {
            chain.push(g.derivative().primitive_part());
            loop {
                let n = chain.len();
                let (_, r) = chain[n - 2].divrem(&chain[n - 1]);
                if r.is_zero() {
                    break;
                }
                // Only positive rescaling keeps the sign-variation counts
                // valid; `primitive_part` would force a positive leading
                // coefficient and corrupt the chain.
                let neg = -&r;
                let scale = Rational::one() / neg.content().abs();
                chain.push(neg.scale(&scale));
            }
        }
        SturmChain { chain }
    }

    /// The square-free polynomial the chain counts roots of.
    pub fn squarefree(&self) -> &UniPoly {
        &self.chain[0]
    }

    /// Sign variations in the one-sided limit approaching `x` from the right
    /// (`from_right = true`) or from the left. Zeros of chain elements other
    /// than the first never contribute; a zero of the first element takes the
    /// sign it has just to the chosen side.
    fn variations_at(&self, x: &Bound, from_right: bool) -> usize {
        let signs: Vec<i8> = self
            .chain
            .iter()
            .enumerate()
            .map(|(k, p)| match x {
                Bound::NegInf => sign_at_neg_inf(p),
                Bound::PosInf => sign_at_pos_inf(p),
                Bound::Finite(v) => {
                    let s = sign(&p.eval(v));
                    if k == 0 && s == 0 {
                        let ds = sign(&self.chain[1].eval(v));
                        if from_right {
                            ds
                        } else {
                            -ds
                        }
                    } else {
                        s
                    }
                }
            })
            .collect();
        count_sign_changes(&signs)
    }

    /// Number of distinct real roots in the open interval `(lo, hi)`.
    pub fn count_open(&self, lo: &Bound, hi: &Bound) -> usize {
        if bound_ge(lo, hi) {
            return 0;
        }
        let v_lo = self.variations_at(lo, true);
        let v_hi = self.variations_at(hi, false);
        v_lo.saturating_sub(v_hi)
    }

    /// Number of distinct real roots in the half-open interval `(lo, hi]`.
    pub fn count_half_open(&self, lo: &Bound, hi: &Bound) -> usize {
        let mut n = self.count_open(lo, hi);
        if let Bound::Finite(h) = hi {
            if !bound_ge(lo, hi) && self.squarefree().eval(h).is_zero() {
                n += 1;
            }
        }
        n
    }
}

fn sign_at_pos_inf(p: &UniPoly) -> i8 {
    sign(&p.lc())
}

fn sign_at_neg_inf(p: &UniPoly) -> i8 {
    let s = sign(&p.lc());
    if p.degree().unwrap_or(0) % 2 == 1 {
        -s
    } else {
        s
    }
}

fn count_sign_changes(signs: &[i8]) -> usize {
    let mut changes = 0;
    let mut prev: i8 = 0;
    for &s in signs {
        if s == 0 {
            continue;
        }
        if prev != 0 && s != prev {
            changes += 1;
        }
        prev = s;
    }
    changes
}

/// True when `lo >= hi` as extended reals (an empty range).
fn bound_ge(lo: &Bound, hi: &Bound) -> bool {
    match (lo, hi) {
        (Bound::PosInf, _) | (_, Bound::NegInf) => true,
        (Bound::NegInf, _) | (_, Bound::PosInf) => false,
        (Bound::Finite(a), Bound::Finite(b)) => a >= b,
    }
}

/// Number of distinct real roots of `f` in the half-open interval
/// `(lo, hi]`; multiplicities are ignored. Panics on the zero polynomial.
pub fn count_roots(f: &UniPoly, lo: &Bound, hi: &Bound) -> usize {
    if f.degree().unwrap_or(0) == 0 {
        assert!(!f.is_zero(), "root count of the zero polynomial");
        return 0;
    }
    SturmChain::new(f).count_half_open(lo, hi)
}

/// An isolating interval for one real root of a polynomial.
///
/// Either `lo < hi` with both endpoints non-roots of the square-free part
/// and exactly one root strictly inside, or `lo == hi` when the root is
/// known exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatedRoot {
    /// Square-free primitive polynomial vanishing at the root.
    pub poly: UniPoly,
    pub lo: Rational,
    pub hi: Rational,
    /// Multiplicity of the root in the original polynomial.
    pub multiplicity: usize,
}

impl IsolatedRoot {
    pub fn interval(&self) -> RatInterval {
        RatInterval::new(self.lo.clone(), self.hi.clone())
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / rat_int(2)
    }

    /// True when the root itself is strictly positive: for a degenerate
    /// interval the point must be positive; otherwise the root lies strictly
    /// inside, so a nonnegative lower endpoint suffices.
    pub fn is_positive(&self) -> bool {
        if self.is_exact() {
            self.lo > Rational::zero()
        } else {
            self.lo >= Rational::zero()
        }
    }
}

/// Small-divisor candidates for exact rational roots of a primitive
/// integer-coefficient polynomial. Capped so the pre-pass never dominates.
fn rational_root_candidates(g: &UniPoly) -> Vec<Rational> {
    const CAP: i64 = 1_000_000;
    let mut out = Vec::new();
    if g.coeff(0).is_zero() {
        out.push(Rational::zero());
        return out;
    }
    let a0 = g.coeff(0).numer().clone();
    let lc = g.lc().numer().clone();
    let (Ok(a0), Ok(lc)): (std::result::Result<i64, _>, std::result::Result<i64, _>) =
        (a0.try_into(), lc.try_into())
    else {
        return out;
    };
    let (a0, lc) = (a0.abs(), lc.abs());
    if a0 > CAP || lc > CAP {
        return out;
    }
    let divisors = |n: i64| -> Vec<i64> {
        let mut d = Vec::new();
        let mut k = 1;
        while k * k <= n {
            if n % k == 0 {
                d.push(k);
                d.push(n / k);
            }
            k += 1;
        }
        d
    };
    for p in divisors(a0) {
        for &q in &divisors(lc) {
            let c = Rational::new(p.into(), q.into());
            if !out.contains(&c) {
                out.push(c.clone());
                out.push(-c);
            }
        }
    }
    out.retain(|c| g.eval(c).is_zero());
    out.sort();
    out.dedup();
    out
}

/// Multiplicity of an isolated root in the original polynomial, read off the
/// square-free decomposition.
fn multiplicity_in(decomposition: &[(UniPoly, usize)], lo: &Rational, hi: &Rational) -> usize {
    for (factor, m) in decomposition {
        if lo == hi {
            if factor.eval(lo).is_zero() {
                return *m;
            }
        } else if count_roots(
            factor,
            &Bound::Finite(lo.clone()),
            &Bound::Finite(hi.clone()),
        ) > 0
        {
            return *m;
        }
    }
    1
}

/// Isolates every real root of `f` into pairwise disjoint intervals, sorted
/// in increasing order. Exact rational roots come back as degenerate
/// intervals. Panics on the zero polynomial.
pub fn isolate_roots(f: &UniPoly) -> Vec<IsolatedRoot> {
    assert!(!f.is_zero(), "cannot isolate roots of the zero polynomial");
    if f.degree().unwrap_or(0) == 0 {
        return vec![];
    }
    let g = f.squarefree_part();
    let chain = SturmChain::new(&g);
    let decomposition = f.squarefree_decomposition();
    let bound = g.root_bound();
    let exact = rational_root_candidates(&g);
    let mut intervals: Vec<(Rational, Rational)> = Vec::new();

    // The Cauchy bound is strict, so no root sits on either endpoint.
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((a, b)) = stack.pop() {
        let n = chain.count_open(&Bound::Finite(a.clone()), &Bound::Finite(b.clone()));
        if n == 0 {
            continue;
        }
        if n == 1 {
            if let Some(r) = exact.iter().find(|r| &a < *r && *r < &b) {
                intervals.push((r.clone(), r.clone()));
            } else {
                intervals.push((a, b));
            }
            continue;
        }
        let m = (&a + &b) / rat_int(2);
        if g.eval(&m).is_zero() {
            intervals.push((m.clone(), m.clone()));
            // Shrink a separation width until the punctured neighborhoods
            // are root-free at their new endpoints.
            let mut w = (&b - &a) / rat_int(4);
            loop {
                let left = &m - &w;
                let right = &m + &w;
                if !g.eval(&left).is_zero()
                    && !g.eval(&right).is_zero()
                    && chain.count_open(&Bound::Finite(left.clone()), &Bound::Finite(right.clone()))
                        == 1
                {
                    stack.push((a, left));
                    stack.push((right, b));
                    break;
                }
                w /= rat_int(2);
            }
        } else {
            stack.push((a, m.clone()));
            stack.push((m, b));
        }
    }

    intervals.sort_by(|x, y| x.0.cmp(&y.0));
    ensure_disjoint(&g, &chain, &mut intervals);
    intervals
        .into_iter()
        .map(|(lo, hi)| {
            let multiplicity = multiplicity_in(&decomposition, &lo, &hi);
            IsolatedRoot {
                poly: g.clone(),
                lo,
                hi,
                multiplicity,
            }
        })
        .collect()
}

/// Isolates the real roots of `f` lying in the half-open window `(lo, hi]`.
/// Window endpoints may be infinite; an inverted or empty window yields no
/// roots.
pub fn isolate_roots_in(f: &UniPoly, lo: &Bound, hi: &Bound) -> Vec<IsolatedRoot> {
    let all = isolate_roots(f);
    let chain = SturmChain::new(&f.squarefree_part());
    all.into_iter()
        .filter(|r| {
            if r.is_exact() {
                let above = match lo {
                    Bound::NegInf => true,
                    Bound::Finite(a) => a < &r.lo,
                    Bound::PosInf => false,
                };
                let below = match hi {
                    Bound::PosInf => true,
                    Bound::Finite(b) => &r.hi <= b,
                    Bound::NegInf => false,
                };
                return above && below;
            }
            // The root is strictly inside (r.lo, r.hi); clip the window to
            // the isolating interval and recount.
            let a = match lo {
                Bound::Finite(a) if a > &r.lo => Bound::Finite(a.clone()),
                _ => Bound::Finite(r.lo.clone()),
            };
            let b = match hi {
                Bound::Finite(b) if b < &r.hi => Bound::Finite(b.clone()),
                _ => Bound::Finite(r.hi.clone()),
            };
            chain.count_half_open(&a, &b) == 1
        })
        .collect()
}

/// Defensive post-pass: shrink any overlapping neighbors until all intervals
/// are pairwise disjoint.
fn ensure_disjoint(g: &UniPoly, chain: &SturmChain, intervals: &mut [(Rational, Rational)]) {
    for i in 1..intervals.len() {
        loop {
            let overlap = intervals[i - 1].1 >= intervals[i].0
                && !(intervals[i - 1].0 == intervals[i - 1].1
                    && intervals[i].0 == intervals[i].1);
            if !overlap {
                break;
            }
            for k in [i - 1, i] {
                let (lo, hi) = intervals[k].clone();
                if lo == hi {
                    continue;
                }
                intervals[k] = bisect_once(g, chain, lo, hi);
            }
        }
    }
}

fn bisect_once(
    g: &UniPoly,
    chain: &SturmChain,
    lo: Rational,
    hi: Rational,
) -> (Rational, Rational) {
    let m = (&lo + &hi) / rat_int(2);
    if g.eval(&m).is_zero() {
        return (m.clone(), m);
    }
    if chain.count_open(&Bound::Finite(lo.clone()), &Bound::Finite(m.clone())) == 1 {
        (lo, m)
    } else {
        (m, hi)
    }
}

/// Narrows an isolating interval below `2^-precision_exp` by sign bisection.
/// Degenerate intervals are already exact and come back unchanged. The
/// `cap_exp` safety limit turns runaway refinement into an error instead of
/// an unbounded loop.
pub fn refine(root: &IsolatedRoot, precision_exp: u32, cap_exp: u32) -> Result<IsolatedRoot> {
    refine_to_width(root, &pow2_neg(precision_exp), &pow2_neg(cap_exp))
}

/// Width-targeted form of [`refine`] for callers that already hold the
/// desired width as a rational.
pub fn refine_to_width(
    root: &IsolatedRoot,
    target: &Rational,
    floor: &Rational,
) -> Result<IsolatedRoot> {
    if root.is_exact() {
        return Ok(root.clone());
    }
    let g = &root.poly;
    let mut lo = root.lo.clone();
    let mut hi = root.hi.clone();
    let s_lo = sign(&g.eval(&lo));
    debug_assert!(s_lo != 0 && sign(&g.eval(&hi)) == -s_lo);
    while &hi - &lo > *target {
        if &hi - &lo < *floor {
            return Err(EinflagError::PositivityUndecided(
                "refinement passed the width floor without reaching the target".into(),
            ));
        }
        let m = (&lo + &hi) / rat_int(2);
        let s_m = sign(&g.eval(&m));
        if s_m == 0 {
            lo = m.clone();
            hi = m;
            break;
        }
        if s_m == s_lo {
            lo = m;
        } else {
            hi = m;
        }
    }
    Ok(IsolatedRoot {
        poly: g.clone(),
        lo,
        hi,
        multiplicity: root.multiplicity,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    fn p(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_ints(coeffs)
    }

    fn fin(n: i64, d: i64) -> Bound {
        Bound::Finite(rat(n, d))
    }

    #[test]
    fn count_sqrt_two() {
        let f = p(&[-2, 0, 1]);
        assert_eq!(count_roots(&f, &fin(0, 1), &Bound::PosInf), 1);
        assert_eq!(count_roots(&f, &Bound::NegInf, &Bound::PosInf), 2);
        assert_eq!(count_roots(&f, &fin(2, 1), &Bound::PosInf), 0);
    }

    #[test]
    fn half_open_endpoint_semantics() {
        let f = &p(&[-1, 1]) * &p(&[-3, 1]); // roots 1, 3
        assert_eq!(count_roots(&f, &fin(0, 1), &fin(1, 1)), 1);
        assert_eq!(count_roots(&f, &fin(1, 1), &fin(3, 1)), 1);
        assert_eq!(count_roots(&f, &fin(1, 1), &fin(5, 2)), 0);
        assert_eq!(count_roots(&f, &fin(1, 1), &fin(1, 1)), 0);
        assert_eq!(count_roots(&f, &fin(3, 1), &fin(1, 1)), 0);
    }

    #[test]
    fn counts_ignore_multiplicity() {
        let f = &(&p(&[-1, 1]) * &p(&[-1, 1])) * &p(&[1, 1]); // (x-1)^2 (x+1)
        assert_eq!(count_roots(&f, &Bound::NegInf, &Bound::PosInf), 2);
    }

    #[test]
    fn reciprocal_quartic_counts() {
        let q31 = p(&[117, -912, 1782, -912, 117]);
        assert_eq!(count_roots(&q31, &fin(0, 1), &Bound::PosInf), 4);
        assert_eq!(count_roots(&q31, &fin(0, 1), &fin(1, 1)), 2);
        assert_eq!(count_roots(&q31, &Bound::NegInf, &fin(0, 1)), 0);
    }

    #[test]
    fn isolation_separates_and_orders() {
        let q31 = p(&[117, -912, 1782, -912, 117]);
        let roots = isolate_roots(&q31);
        assert_eq!(roots.len(), 4);
        for w in roots.windows(2) {
            assert!(w[0].interval().disjoint_from(&w[1].interval()));
            assert!(w[0].lo <= w[1].lo);
        }
        for r in &roots {
            assert_eq!(r.multiplicity, 1);
            assert!(r.lo > Rational::zero());
        }
    }

    #[test]
    fn isolation_finds_exact_rational_roots() {
        // (3x - 1)(x^2 - 2)
        let f = &p(&[-1, 3]) * &p(&[-2, 0, 1]);
        let roots = isolate_roots(&f);
        assert_eq!(roots.len(), 3);
        let exact: Vec<_> = roots.iter().filter(|r| r.is_exact()).collect();
        assert_eq!(exact.len(), 1);
        assert_eq!(exact[0].lo, rat(1, 3));
    }

    #[test]
    fn isolation_reports_multiplicity() {
        let f = &(&p(&[-7, 2]) * &p(&[-7, 2])) * &p(&[5, 1]); // (2x-7)^2 (x+5)
        let roots = isolate_roots(&f);
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0].multiplicity, 1);
        assert_eq!(roots[0].lo, rat(-5, 1));
        assert_eq!(roots[1].multiplicity, 2);
        assert_eq!(roots[1].lo, rat(7, 2));
    }

    #[test]
    fn refine_reaches_width() {
        let f = p(&[-2, 0, 1]);
        let roots = isolate_roots(&f);
        let pos = roots.into_iter().find(|r| r.lo > rat(0, 1)).unwrap();
        let tight = refine(&pos, 40, 4096).unwrap();
        assert!(tight.width() <= rat(1, 1 << 30) / rat(1 << 10, 1));
        assert!(tight.lo < rat(3, 2) && rat(3, 2) > tight.lo);
        let sq = |r: &Rational| r * r;
        assert!(sq(&tight.lo) < rat(2, 1) && sq(&tight.hi) > rat(2, 1));
    }

    #[test]
    fn refine_keeps_exact_roots() {
        let f = p(&[-1, 3]);
        let roots = isolate_roots(&f);
        assert_eq!(roots.len(), 1);
        let r = refine(&roots[0], 100, 4096).unwrap();
        assert!(r.is_exact());
        assert_eq!(r.lo, rat(1, 3));
    }

    #[test]
    fn negative_and_positive_sides() {
        // Roots at about -4.56, -0.44, 2: x^3 + 3x^2 - 12x ... pick
        // (x-2)(x+1)(x+4) = x^3 + 3x^2 - 6x - 8.
        let f = p(&[-8, -6, 3, 1]);
        assert_eq!(count_roots(&f, &Bound::NegInf, &fin(0, 1)), 2);
        assert_eq!(count_roots(&f, &fin(0, 1), &Bound::PosInf), 1);
        let roots = isolate_roots(&f);
        assert_eq!(roots.len(), 3);
        assert_eq!(roots[0].lo, rat(-4, 1));
        assert_eq!(roots[1].lo, rat(-1, 1));
        assert_eq!(roots[2].lo, rat(2, 1));
    }
}
