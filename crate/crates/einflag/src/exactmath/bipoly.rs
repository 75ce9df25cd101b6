//! Sparse bivariate polynomials over [`Rational`].
//!
//! Terms are keyed by the exponent pair `(i, j)` of the first and second
//! variable. The map never stores zero coefficients.

use super::{Rational, UniPoly};
use crate::{EinflagError, Result};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Selects one of the two variables of a [`BiPoly`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Var {
    First,
    Second,
}

impl Var {
    pub fn other(self) -> Var {
        match self {
            Var::First => Var::Second,
            Var::Second => Var::First,
        }
    }
}

/// A sparse polynomial in two variables with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        Self::monomial(Rational::one(), 0, 0)
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// The monomial `c * first^i * second^j`.
    pub fn monomial(c: Rational, i: u32, j: u32) -> Self {
        let mut p = BiPoly::default();
        p.add_term(i, j, c);
        p
    }

    /// The bare variable as a polynomial.
    pub fn var(v: Var) -> Self {
        match v {
            Var::First => Self::monomial(Rational::one(), 1, 0),
            Var::Second => Self::monomial(Rational::one(), 0, 1),
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (u32, u32, Rational)>) -> Self {
        let mut p = BiPoly::default();
        for (i, j, c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    /// Adds `c * first^i * second^j`, removing the term if it cancels.
    pub fn add_term(&mut self, i: u32, j: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `first^i * second^j`.
    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Degree in the chosen variable, or `None` for the zero polynomial.
    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms
            .keys()
            .map(|&(i, j)| match v {
                Var::First => i,
                Var::Second => j,
            })
            .max()
    }

    /// Total degree, or `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    /// True when every term has the same total degree `deg`.
    pub fn is_homogeneous(&self, deg: u32) -> bool {
        self.terms.keys().all(|&(i, j)| i + j == deg)
    }

    pub fn scale(&self, s: &Rational) -> BiPoly {
        if s.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&k, c)| (k, c * s))
                .collect(),
        }
    }

    pub fn eval(&self, first: &Rational, second: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (&(i, j), c) in &self.terms {
            acc += c * first.pow(i as i32) * second.pow(j as i32);
        }
        acc
    }

    /// Substitutes an exact rational for one variable, leaving a univariate
    /// polynomial in the other.
    pub fn eval_partial(&self, v: Var, value: &Rational) -> UniPoly {
        let mut coeffs: Vec<Rational> = Vec::new();
        for (&(i, j), c) in &self.terms {
            let (sub_pow, keep_pow) = match v {
                Var::First => (i, j),
                Var::Second => (j, i),
            };
            let term = c * value.pow(sub_pow as i32);
            let k = keep_pow as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, Rational::zero());
            }
            coeffs[k] += term;
        }
        UniPoly::new(coeffs)
    }

    /// Views the polynomial as univariate in `v`: returns the dense vector of
    /// coefficients (index = power of `v`), each a [`UniPoly`] in the other
    /// variable. Empty for the zero polynomial.
    pub fn coeffs_wrt(&self, v: Var) -> Vec<UniPoly> {
        let Some(deg) = self.degree_in(v) else {
            return vec![];
        };
        let mut buckets: Vec<Vec<Rational>> = vec![vec![]; deg as usize + 1];
        for (&(i, j), c) in &self.terms {
            let (main, other) = match v {
                Var::First => (i, j),
                Var::Second => (j, i),
            };
            let bucket = &mut buckets[main as usize];
            let k = other as usize;
            if bucket.len() <= k {
                bucket.resize(k + 1, Rational::zero());
            }
            bucket[k] += c;
        }
        buckets.into_iter().map(UniPoly::new).collect()
    }

    /// Coefficient of `v^k` as a polynomial in the other variable.
    pub fn coeff_wrt(&self, v: Var, k: u32) -> UniPoly {
        let mut coeffs: Vec<Rational> = Vec::new();
        for (&(i, j), c) in &self.terms {
            let (main, other) = match v {
                Var::First => (i, j),
                Var::Second => (j, i),
            };
            if main != k {
                continue;
            }
            let idx = other as usize;
            if coeffs.len() <= idx {
                coeffs.resize(idx + 1, Rational::zero());
            }
            coeffs[idx] += c;
        }
        UniPoly::new(coeffs)
    }

    /// Embeds a univariate polynomial as a [`BiPoly`] in the chosen variable.
    pub fn from_unipoly(p: &UniPoly, v: Var) -> BiPoly {
        let mut out = BiPoly::zero();
        for (k, c) in p.coeffs().iter().enumerate() {
            match v {
                Var::First => out.add_term(k as u32, 0, c.clone()),
                Var::Second => out.add_term(0, k as u32, c.clone()),
            }
        }
        out
    }

    /// Collapses to a univariate polynomial in `v`; panics if the other
    /// variable actually occurs.
    pub fn to_unipoly(&self, v: Var) -> UniPoly {
        assert_eq!(
            self.degree_in(v.other()).unwrap_or(0),
            0,
            "polynomial is not univariate in the requested variable"
        );
        self.eval_partial(v.other(), &Rational::zero())
    }

    /// Substitutes `poly` for variable `v` (composition). The replacement is
    /// itself a [`BiPoly`], so rational reparametrizations are expressed by
    /// the caller through numerator/denominator clearing.
    pub fn substitute(&self, v: Var, poly: &BiPoly) -> BiPoly {
        let coeffs = self.coeffs_wrt(v);
        let mut acc = BiPoly::zero();
        let mut power = BiPoly::one();
        for c in coeffs {
            let c_bi = BiPoly::from_unipoly(&c, v.other());
            acc = &acc + &(&c_bi * &power);
            power = &power * poly;
        }
        acc
    }

    /// Exact division by the monomial `x^di * y^dj`; errors when any term has
    /// a smaller exponent.
    pub fn divide_monomial(&self, di: u32, dj: u32) -> Result<BiPoly> {
        let mut out = BiPoly::zero();
        for (&(i, j), c) in &self.terms {
            if i < di || j < dj {
                return Err(EinflagError::NotDivisible);
            }
            out.add_term(i - di, j - dj, c.clone());
        }
        Ok(out)
    }

    /// Exact synthetic division by the monic linear factor `v - root`; errors
    /// when a remainder survives.
    pub fn divide_linear(&self, v: Var, root: &Rational) -> Result<BiPoly> {
        let coeffs = self.coeffs_wrt(v);
        if coeffs.len() < 2 {
            return Err(EinflagError::NotDivisible);
        }
        let d = coeffs.len() - 1;
        let mut quot: Vec<UniPoly> = vec![UniPoly::zero(); d];
        quot[d - 1] = coeffs[d].clone();
        for k in (1..d).rev() {
            quot[k - 1] = &coeffs[k] + &quot[k].scale(root);
        }
        let rem = &coeffs[0] + &quot[0].scale(root);
        if !rem.is_zero() {
            return Err(EinflagError::NotDivisible);
        }
        let mut out = BiPoly::zero();
        for (k, q) in quot.iter().enumerate() {
            let embedded = BiPoly::from_unipoly(q, v.other());
            let lead = BiPoly::monomial(
                Rational::one(),
                if v == Var::First { k as u32 } else { 0 },
                if v == Var::Second { k as u32 } else { 0 },
            );
            out = &out + &(&embedded * &lead);
        }
        Ok(out)
    }

    /// The constant `c` with `self == c * other`, when one exists. Zero
    /// matches only zero (with ratio 1).
    pub fn scalar_multiple_of(&self, other: &BiPoly) -> Option<Rational> {
        if other.is_zero() {
            return self.is_zero().then(Rational::one);
        }
        let (&key, ref_c) = other.terms.iter().next_back().unwrap();
        let mine = self.coeff(key.0, key.1);
        if mine.is_zero() {
            return None;
        }
        let c = mine / ref_c.clone();
        (*self == other.scale(&c)).then_some(c)
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, -c.clone());
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c.clone())).collect(),
        }
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(i, j), c) in self.terms.iter().rev() {
            if first {
                write!(f, "{c}")?;
                first = false;
            } else if c < &Rational::zero() {
                write!(f, " - {}", -c)?;
            } else {
                write!(f, " + {c}")?;
            }
            if i > 0 {
                write!(f, "*u^{i}")?;
            }
            if j > 0 {
                write!(f, "*v^{j}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::{rat, rat_int};
    use super::*;

    fn xy_poly() -> BiPoly {
        // 3 u^2 v - 2 u + 5
        BiPoly::from_terms([
            (2, 1, rat_int(3)),
            (1, 0, rat_int(-2)),
            (0, 0, rat_int(5)),
        ])
    }

    #[test]
    fn term_cancellation() {
        let mut p = BiPoly::monomial(rat_int(4), 1, 1);
        p.add_term(1, 1, rat_int(-4));
        assert!(p.is_zero());
    }

    #[test]
    fn eval_and_partial() {
        let p = xy_poly();
        assert_eq!(p.eval(&rat_int(2), &rat(1, 2)), rat_int(6 - 4 + 5));
        let in_v = p.eval_partial(Var::First, &rat_int(2));
        assert_eq!(in_v, UniPoly::new(vec![rat_int(1), rat_int(12)]));
    }

    #[test]
    fn coeffs_views() {
        let p = xy_poly();
        let by_u = p.coeffs_wrt(Var::First);
        assert_eq!(by_u.len(), 3);
        assert_eq!(by_u[0], UniPoly::from_ints(&[5]));
        assert_eq!(by_u[1], UniPoly::from_ints(&[-2]));
        assert_eq!(by_u[2], UniPoly::from_ints(&[0, 3]));
        assert_eq!(p.coeff_wrt(Var::First, 2), UniPoly::from_ints(&[0, 3]));
    }

    #[test]
    fn arithmetic_and_degrees() {
        let p = xy_poly();
        let q = &p * &BiPoly::var(Var::Second);
        assert_eq!(q.degree_in(Var::Second), Some(2));
        assert_eq!(q.total_degree(), Some(4));
        assert_eq!(&(&p + &q) - &q, p);
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn substitution_composes() {
        // p(u, v) with u := v^2 gives a univariate polynomial in v.
        let p = xy_poly();
        let subbed = p.substitute(Var::First, &BiPoly::monomial(rat_int(1), 0, 2));
        assert_eq!(subbed.degree_in(Var::First), Some(0));
        let uni = subbed.to_unipoly(Var::Second);
        assert_eq!(uni.eval(&rat_int(3)), p.eval(&rat_int(9), &rat_int(3)));
    }

    #[test]
    fn unipoly_roundtrip() {
        let f = UniPoly::from_ints(&[1, 0, -7, 2]);
        let p = BiPoly::from_unipoly(&f, Var::Second);
        assert_eq!(p.to_unipoly(Var::Second), f);
        assert!(p.is_homogeneous(0) == false);
    }

    #[test]
    fn homogeneity() {
        let h = BiPoly::from_terms([(2, 1, rat_int(1)), (0, 3, rat_int(-4))]);
        assert!(h.is_homogeneous(3));
        assert!(!xy_poly().is_homogeneous(3));
    }
}
