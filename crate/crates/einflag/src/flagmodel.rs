//! The homogeneous space `Sp(n)/(U(p) x U(n-p))` and its invariant Ricci
//! curvature.
//!
//! An invariant metric is a positive 4-tuple `x = (x1, x2, x3, x4)` scaling
//! the four irreducible isotropy summands. The Ricci tensor is diagonal in
//! the same decomposition with components `r1..r4`, computed here in exact
//! rational arithmetic three independent ways: a closed form per component,
//! a generic formula driven by the structure-constant table, and scaled
//! polynomial forms suitable for elimination.

use crate::exactmath::{rat, rat_int, MPoly, Rational};
use crate::realroots::RatInterval;
use crate::{EinflagError, Result};
use num_traits::Zero;
use std::collections::BTreeMap;

/// A table of isotropy dimensions `d_k` and symmetric structure-constant
/// weights `[ijk]` for a homogeneous space with diagonal Ricci tensor.
#[derive(Clone, Debug)]
pub struct TripleTable {
    dims: Vec<Rational>,
    triples: BTreeMap<[usize; 3], Rational>,
}

impl TripleTable {
    pub fn new(dims: Vec<Rational>) -> Self {
        TripleTable {
            dims,
            triples: BTreeMap::new(),
        }
    }

    pub fn size(&self) -> usize {
        self.dims.len()
    }

    /// Records the fully symmetric weight `[ijk]` (1-based indexes).
    pub fn set_triple(&mut self, i: usize, j: usize, k: usize, value: Rational) {
        let mut key = [i, j, k];
        key.sort_unstable();
        self.triples.insert(key, value);
    }

    pub fn triple(&self, i: usize, j: usize, k: usize) -> Rational {
        let mut key = [i, j, k];
        key.sort_unstable();
        self.triples
            .get(&key)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Ricci components from the general formula
    /// `r_k = 1/(2 x_k) + 1/(4 d_k) sum_{i,j} [ijk] x_k/(x_i x_j)
    ///        - 1/(2 d_k) sum_{i,j} [kij] x_j/(x_k x_i)`,
    /// both sums running over ordered index pairs.
    pub fn ricci(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        let m = self.size();
        assert_eq!(x.len(), m, "metric length does not match table size");
        if x.iter().any(|v| v.is_zero()) {
            return Err(EinflagError::DegenerateDenominator);
        }
        let mut out = Vec::with_capacity(m);
        for k in 1..=m {
            let xk = &x[k - 1];
            let dk = &self.dims[k - 1];
            let mut sum_a = Rational::zero();
            let mut sum_b = Rational::zero();
            for i in 1..=m {
                for j in 1..=m {
                    let tij = self.triple(i, j, k);
                    if !tij.is_zero() {
                        sum_a += &tij * xk / (&x[i - 1] * &x[j - 1]);
                        sum_b += tij * &x[j - 1] / (xk * &x[i - 1]);
                    }
                }
            }
            let r = rat(1, 2) / xk + sum_a / (rat_int(4) * dk) - sum_b / (rat_int(2) * dk);
            out.push(r);
        }
        Ok(out)
    }
}

/// Parameters and derived constants of `Sp(n)/(U(p) x U(n-p))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagSpace {
    n: i64,
    p: i64,
    dims: [Rational; 4],
    c123: Rational,
    c134: Rational,
}

impl FlagSpace {
    /// Validates `n >= 3` and `1 <= p <= n-1`.
    pub fn new(n: i64, p: i64) -> Result<Self> {
        if n < 3 {
            return Err(EinflagError::InvalidParameters(format!(
                "n must be at least 3, got {n}"
            )));
        }
        if p < 1 || p > n - 1 {
            return Err(EinflagError::InvalidParameters(format!(
                "p must satisfy 1 <= p <= n-1, got p={p} for n={n}"
            )));
        }
        let q = n - p;
        let dims = [
            rat_int(2 * p * q),
            rat_int(q * (q + 1)),
            rat_int(2 * p * q),
            rat_int(p * (p + 1)),
        ];
        let c123 = rat(p * q * (q + 1), 2 * (n + 1));
        let c134 = rat(p * (p + 1) * q, 2 * (n + 1));
        Ok(FlagSpace {
            n,
            p,
            dims,
            c123,
            c134,
        })
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    /// Isotropy summand dimensions `(d1, d2, d3, d4)`.
    pub fn dims(&self) -> [i64; 4] {
        let q = self.n - self.p;
        [
            2 * self.p * q,
            q * (q + 1),
            2 * self.p * q,
            self.p * (self.p + 1),
        ]
    }

    /// Real dimension of the homogeneous space itself.
    pub fn total_dim(&self) -> i64 {
        self.dims().iter().sum()
    }

    pub fn c123(&self) -> &Rational {
        &self.c123
    }

    pub fn c134(&self) -> &Rational {
        &self.c134
    }

    /// The parameter-swapped space `Sp(n)/(U(n-p) x U(p))`.
    pub fn dual(&self) -> FlagSpace {
        FlagSpace::new(self.n, self.n - self.p).expect("dual parameters stay valid")
    }

    /// The metric relabeling matching [`FlagSpace::dual`]: summands 2 and 4
    /// trade places.
    pub fn dual_metric(x: &[Rational; 4]) -> [Rational; 4] {
        [x[0].clone(), x[3].clone(), x[2].clone(), x[1].clone()]
    }

    /// The structure-constant table driving the generic Ricci formula.
    pub fn triple_table(&self) -> TripleTable {
        let mut t = TripleTable::new(self.dims.to_vec());
        t.set_triple(1, 2, 3, self.c123.clone());
        t.set_triple(1, 3, 4, self.c134.clone());
        t
    }

    /// Closed-form Ricci components at an exact metric; errors when any
    /// component of the metric vanishes.
    pub fn ricci_components(&self, x: &[Rational; 4]) -> Result<[Rational; 4]> {
        if x.iter().any(|v| v.is_zero()) {
            return Err(EinflagError::DegenerateDenominator);
        }
        let term = |k: usize, i: usize, j: usize, c: &Rational| -> Rational {
            let (xk, xi, xj) = (&x[k], &x[i], &x[j]);
            let core = xk / (xi * xj) - xi / (xk * xj) - xj / (xk * xi);
            c / (rat_int(2) * &self.dims[k]) * core
        };
        let half = rat(1, 2);
        let r1 = &half / &x[0] + term(0, 1, 2, &self.c123) + term(0, 2, 3, &self.c134);
        let r2 = &half / &x[1] + term(1, 0, 2, &self.c123);
        let r3 = &half / &x[2] + term(2, 0, 1, &self.c123) + term(2, 0, 3, &self.c134);
        let r4 = &half / &x[3] + term(3, 0, 2, &self.c134);
        Ok([r1, r2, r3, r4])
    }

    /// Closed-form Ricci components over interval arguments; the result
    /// encloses the exact components for every metric in the box.
    pub fn ricci_components_interval(&self, x: &[RatInterval; 4]) -> Result<[RatInterval; 4]> {
        let term = |k: usize, i: usize, j: usize, c: &Rational| -> Result<RatInterval> {
            let (xk, xi, xj) = (&x[k], &x[i], &x[j]);
            let a = xk.div(&xi.mul(xj))?;
            let b = xi.div(&xk.mul(xj))?;
            let d = xj.div(&xk.mul(xi))?;
            let core = a.sub(&b).sub(&d);
            let scale = c / (rat_int(2) * &self.dims[k]);
            Ok(core.scale(&scale))
        };
        let half_recip = |k: usize| -> Result<RatInterval> {
            Ok(x[k].recip()?.scale(&rat(1, 2)))
        };
        let r1 = half_recip(0)?
            .add(&term(0, 1, 2, &self.c123)?)
            .add(&term(0, 2, 3, &self.c134)?);
        let r2 = half_recip(1)?.add(&term(1, 0, 2, &self.c123)?);
        let r3 = half_recip(2)?
            .add(&term(2, 0, 1, &self.c123)?)
            .add(&term(2, 0, 3, &self.c134)?);
        let r4 = half_recip(3)?.add(&term(3, 0, 2, &self.c134)?);
        Ok([r1, r2, r3, r4])
    }

    /// The scaled Ricci polynomials `R_k = r_k * x1 x2 x3 x4`, each a
    /// homogeneous cubic.
    pub fn scaled_ricci_polys(&self) -> [MPoly; 4] {
        // c * x_a / (x_b x_c) * x1 x2 x3 x4 has exponents 1 everywhere, +1
        // at a, -1 at b and c.
        let mono = |a: usize, b: usize, c_idx: usize, coeff: Rational| -> MPoly {
            let mut e = [1u16; 4];
            e[a] += 1;
            e[b] -= 1;
            e[c_idx] -= 1;
            MPoly::monomial(coeff, e)
        };
        let triple_part = |k: usize, i: usize, j: usize, c: &Rational| -> MPoly {
            let s = c / (rat_int(2) * &self.dims[k]);
            let mut acc = mono(k, i, j, s.clone());
            acc = &acc - &mono(i, k, j, s.clone());
            &acc - &mono(j, k, i, s)
        };
        let base = |k: usize| -> MPoly {
            let mut e = [1u16; 4];
            e[k] = 0;
            MPoly::monomial(rat(1, 2), e)
        };
        let r1 = &(&base(0) + &triple_part(0, 1, 2, &self.c123)) + &triple_part(0, 2, 3, &self.c134);
        let r2 = &base(1) + &triple_part(1, 0, 2, &self.c123);
        let r3 = &(&base(2) + &triple_part(2, 0, 1, &self.c123)) + &triple_part(2, 0, 3, &self.c134);
        let r4 = &base(3) + &triple_part(3, 0, 2, &self.c134);
        [r1, r2, r3, r4]
    }

    /// The Einstein differences `(R1 - R3, R1 - R2, R3 - R4)` whose common
    /// zero locus (over positive metrics) is the Einstein set.
    pub fn einstein_polys(&self) -> [MPoly; 3] {
        let [r1, r2, r3, r4] = self.scaled_ricci_polys();
        [&r1 - &r3, &r1 - &r2, &r3 - &r4]
    }

    /// The cleared Einstein system: `4(n+1)(R1 - R3)` factors exactly as
    /// `(x1 - x3) * c2`, while `s2 = 8(n+1)(R1 - R2)` and
    /// `s3 = 8(n+1)(R3 - R4)`. The exact division certifies the
    /// factorization; all three parts are homogeneous.
    pub fn einstein_system_homogeneous(&self) -> Result<EinsteinSystem> {
        let [e1, e2, e3] = self.einstein_polys();
        let scale4 = rat_int(4 * (self.n + 1));
        let scale8 = rat_int(8 * (self.n + 1));
        let c2 = e1.scale(&scale4).exact_divide_by_var_diff(0, 2)?;
        let s2 = e2.scale(&scale8);
        let s3 = e3.scale(&scale8);
        for (poly, deg) in [(&c2, 2u16), (&s2, 3), (&s3, 3)] {
            if !poly.is_homogeneous(deg) {
                return Err(EinflagError::FactorizationMismatch(
                    "cleared Einstein system is not homogeneous".into(),
                ));
            }
        }
        Ok(EinsteinSystem { c2, s2, s3 })
    }

    /// The cleared system normalized to `x1 = 1`: the quadratic cofactor and
    /// the two cubics as polynomials in `x2, x3, x4`.
    pub fn einstein_system(&self) -> Result<[MPoly; 3]> {
        let sys = self.einstein_system_homogeneous()?;
        let one = rat_int(1);
        Ok([
            sys.c2.eval_partial(0, &one),
            sys.s2.eval_partial(0, &one),
            sys.s3.eval_partial(0, &one),
        ])
    }

    /// Intersection of the four Ricci component enclosures over a box; for a
    /// box around an Einstein metric this encloses the Einstein constant.
    /// Errors when two enclosures are disjoint, which certifies the box
    /// contains no Einstein metric of the assumed form.
    pub fn einstein_constant_interval(&self, x: &[RatInterval; 4]) -> Result<RatInterval> {
        let r = self.ricci_components_interval(x)?;
        let mut acc = r[0].clone();
        for comp in &r[1..] {
            acc = acc.intersect(comp).ok_or_else(|| {
                EinflagError::NotEinstein("ricci component enclosures are disjoint".into())
            })?;
        }
        Ok(acc)
    }

    /// The common Ricci component when the metric is Einstein; errors with
    /// the offending components otherwise.
    pub fn einstein_constant(&self, x: &[Rational; 4]) -> Result<Rational> {
        let r = self.ricci_components(x)?;
        if r[1] != r[0] || r[2] != r[0] || r[3] != r[0] {
            return Err(EinflagError::NotEinstein(format!(
                "ricci components differ: ({}, {}, {}, {})",
                r[0], r[1], r[2], r[3]
            )));
        }
        Ok(r[0].clone())
    }

    /// The four Kaehler-Einstein metrics, normalized to `x1 = 1`, paired
    /// with their exact Einstein constants. Each entry is certified by
    /// recomputing the Ricci components and demanding exact equality.
    pub fn kahler_einstein_metrics(&self) -> Result<Vec<([Rational; 4], Rational)>> {
        let (n, p) = (self.n, self.p);
        let g1 = [
            rat(n, 2),
            rat_int(n + p + 1),
            rat(n, 2) + rat_int(p + 1),
            rat_int(p + 1),
        ];
        let g2 = [
            rat(n, 2),
            rat_int(n - p + 1),
            rat(3 * n, 2) - rat_int(p - 1),
            rat_int(2 * n - p + 1),
        ];
        let relabel = |g: &[Rational; 4]| -> [Rational; 4] {
            [g[2].clone(), g[1].clone(), g[0].clone(), g[3].clone()]
        };
        let normalize = |g: &[Rational; 4]| -> [Rational; 4] {
            [
                &g[0] / &g[0],
                &g[1] / &g[0],
                &g[2] / &g[0],
                &g[3] / &g[0],
            ]
        };
        let mut out = Vec::with_capacity(4);
        for g in [g1.clone(), g2.clone(), relabel(&g1), relabel(&g2)] {
            let x = normalize(&g);
            let e = self.einstein_constant(&x)?;
            out.push((x, e));
        }
        Ok(out)
    }
}

/// The cleared polynomial Einstein system; see
/// [`FlagSpace::einstein_system_homogeneous`].
#[derive(Clone, Debug)]
pub struct EinsteinSystem {
    /// Quadratic cofactor of `(x1 - x3)` in the first equation.
    pub c2: MPoly,
    /// Cleared form of `R1 - R2`, a homogeneous cubic.
    pub s2: MPoly,
    /// Cleared form of `R3 - R4`, a homogeneous cubic.
    pub s3: MPoly,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    fn rats(xs: [(i64, i64); 4]) -> [Rational; 4] {
        xs.map(|(a, b)| rat(a, b))
    }

    #[test]
    fn parameter_validation() {
        assert!(FlagSpace::new(3, 1).is_ok());
        assert!(FlagSpace::new(2, 1).is_err());
        assert!(FlagSpace::new(5, 0).is_err());
        assert!(FlagSpace::new(5, 5).is_err());
    }

    #[test]
    fn derived_constants() {
        let s = FlagSpace::new(3, 1).unwrap();
        assert_eq!(s.dims(), [4, 6, 4, 2]);
        assert_eq!(s.total_dim(), 16);
        assert_eq!(*s.c123(), rat(3, 4));
        assert_eq!(*s.c134(), rat(1, 2));
        let t = FlagSpace::new(4, 2).unwrap();
        assert_eq!(t.dims(), [8, 6, 8, 6]);
        assert_eq!(*t.c123(), rat(6, 5));
        assert_eq!(*t.c134(), rat(6, 5));
    }

    #[test]
    fn ricci_fixture() {
        let s = FlagSpace::new(3, 1).unwrap();
        let ones = rats([(1, 1); 4]);
        let r = s.ricci_components(&ones).unwrap();
        assert_eq!(r, [rat(11, 32), rat(7, 16), rat(11, 32), rat(3, 8)]);
        assert!(s
            .ricci_components(&rats([(1, 1), (0, 1), (1, 1), (1, 1)]))
            .is_err());
    }

    #[test]
    fn generic_table_matches_closed_form() {
        for (n, p) in [(3, 1), (4, 2), (7, 3), (9, 8)] {
            let s = FlagSpace::new(n, p).unwrap();
            let t = s.triple_table();
            for x in [
                rats([(1, 1), (2, 1), (3, 1), (5, 7)]),
                rats([(2, 3), (1, 1), (4, 5), (7, 2)]),
            ] {
                let closed = s.ricci_components(&x).unwrap();
                let generic = t.ricci(&x).unwrap();
                assert_eq!(closed.to_vec(), generic);
            }
        }
    }

    #[test]
    fn two_summand_fixture() {
        let mut t = TripleTable::new(vec![rat(2, 1), rat(1, 1)]);
        t.set_triple(1, 1, 2, rat(1, 2));
        let r = t.ricci(&[rat(1, 1), rat(1, 1)]).unwrap();
        assert_eq!(r, vec![rat(3, 8), rat(3, 8)]);
    }

    #[test]
    fn scaled_polys_match_components() {
        let s = FlagSpace::new(5, 2).unwrap();
        let polys = s.scaled_ricci_polys();
        let x = rats([(3, 2), (1, 1), (4, 7), (9, 5)]);
        let r = s.ricci_components(&x).unwrap();
        let product: Rational = x.iter().product();
        for k in 0..4 {
            assert!(polys[k].is_homogeneous(3));
            assert_eq!(polys[k].eval(&x), &r[k] * &product);
        }
    }

    #[test]
    fn einstein_system_factors() {
        for (n, p) in [(3, 1), (4, 2), (6, 5)] {
            let s = FlagSpace::new(n, p).unwrap();
            let sys = s.einstein_system_homogeneous().unwrap();
            let [e1, _, _] = s.einstein_polys();
            let diff = &MPoly::var(0) - &MPoly::var(2);
            let recomposed = &diff * &sys.c2;
            assert_eq!(recomposed, e1.scale(&rat_int(4 * (n + 1))));
            assert!(sys.c2.is_homogeneous(2));
            let [c2n, s2n, s3n] = s.einstein_system().unwrap();
            let one = rat_int(1);
            assert_eq!(c2n, sys.c2.eval_partial(0, &one));
            assert_eq!(s2n, sys.s2.eval_partial(0, &one));
            assert_eq!(s3n, sys.s3.eval_partial(0, &one));
            assert_eq!(c2n.degree_in(0), Some(0));
        }
    }

    #[test]
    fn kahler_einstein_fixture() {
        let s = FlagSpace::new(3, 1).unwrap();
        let kes = s.kahler_einstein_metrics().unwrap();
        let expect: [([(i64, i64); 4], (i64, i64)); 4] = [
            ([(1, 1), (10, 3), (7, 3), (4, 3)], (3, 16)),
            ([(1, 1), (2, 1), (3, 1), (4, 1)], (3, 16)),
            ([(1, 1), (10, 7), (3, 7), (4, 7)], (7, 16)),
            ([(1, 1), (2, 3), (1, 3), (4, 3)], (9, 16)),
        ];
        assert_eq!(kes.len(), 4);
        for (got, (xs, e)) in kes.iter().zip(expect) {
            assert_eq!(got.0, rats(xs));
            assert_eq!(got.1, rat(e.0, e.1));
        }
    }

    #[test]
    fn kahler_einstein_certified_across_parameters() {
        for (n, p) in [(4, 2), (10, 5), (12, 7), (15, 1)] {
            let s = FlagSpace::new(n, p).unwrap();
            let kes = s.kahler_einstein_metrics().unwrap();
            assert_eq!(kes.len(), 4);
            for (x, e) in &kes {
                assert_eq!(s.einstein_constant(x).unwrap(), *e);
                assert!(x.iter().all(|v| v > &Rational::zero()));
            }
        }
    }

    #[test]
    fn duality_permutes_components() {
        let s = FlagSpace::new(7, 2).unwrap();
        let d = s.dual();
        let x = rats([(1, 1), (5, 3), (2, 1), (7, 4)]);
        let y = FlagSpace::dual_metric(&x);
        let rx = s.ricci_components(&x).unwrap();
        let ry = d.ricci_components(&y).unwrap();
        assert_eq!(ry[0], rx[0]);
        assert_eq!(ry[1], rx[3]);
        assert_eq!(ry[2], rx[2]);
        assert_eq!(ry[3], rx[1]);
    }

    #[test]
    fn interval_ricci_encloses_exact() {
        let s = FlagSpace::new(4, 1).unwrap();
        let x = rats([(1, 1), (3, 2), (2, 1), (5, 4)]);
        let boxes = [
            RatInterval::new(rat(9, 10), rat(11, 10)),
            RatInterval::new(rat(14, 10), rat(16, 10)),
            RatInterval::new(rat(19, 10), rat(21, 10)),
            RatInterval::new(rat(12, 10), rat(13, 10)),
        ];
        let r = s.ricci_components(&x).unwrap();
        let ri = s.ricci_components_interval(&boxes).unwrap();
        for k in 0..4 {
            assert!(ri[k].contains(&r[k]));
        }
        let straddling = [
            RatInterval::new(rat(-1, 1), rat(1, 1)),
            boxes[1].clone(),
            boxes[2].clone(),
            boxes[3].clone(),
        ];
        assert!(s.ricci_components_interval(&straddling).is_err());
    }
}
