//! Sparse polynomials in the four metric variables `x1..x4` over
//! [`Rational`].
//!
//! Exponent vectors are `[u16; 4]`; zero coefficients are never stored.

use super::{BiPoly, Rational, UniPoly};
use crate::{EinflagError, Result};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A sparse polynomial in `x1, x2, x3, x4` with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MPoly {
    terms: BTreeMap<[u16; 4], Rational>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, [0, 0, 0, 0])
    }

    pub fn monomial(c: Rational, exps: [u16; 4]) -> Self {
        let mut p = MPoly::default();
        p.add_term(exps, c);
        p
    }

    /// The variable `x{k+1}` for `k` in `0..4`.
    pub fn var(k: usize) -> Self {
        assert!(k < 4);
        let mut exps = [0u16; 4];
        exps[k] = 1;
        Self::monomial(Rational::one(), exps)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ([u16; 4], Rational)>) -> Self {
        let mut p = MPoly::default();
        for (exps, c) in terms {
            p.add_term(exps, c);
        }
        p
    }

    pub fn add_term(&mut self, exps: [u16; 4], c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u16; 4], &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: [u16; 4]) -> Rational {
        self.terms
            .get(&exps)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn degree_in(&self, k: usize) -> Option<u16> {
        self.terms.keys().map(|e| e[k]).max()
    }

    pub fn total_degree(&self) -> Option<u16> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self, deg: u16) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<u16>() == deg)
    }

    /// The set of variable indexes that actually occur.
    pub fn used_vars(&self) -> [bool; 4] {
        let mut used = [false; 4];
        for e in self.terms.keys() {
            for k in 0..4 {
                used[k] |= e[k] > 0;
            }
        }
        used
    }

    pub fn scale(&self, s: &Rational) -> MPoly {
        if s.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, c * s)).collect(),
        }
    }

    pub fn eval(&self, x: &[Rational; 4]) -> Rational {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for k in 0..4 {
                if e[k] > 0 {
                    term *= x[k].pow(e[k] as i32);
                }
            }
            acc += term;
        }
        acc
    }

    /// Substitutes an exact rational for `x{k+1}`.
    pub fn eval_partial(&self, k: usize, value: &Rational) -> MPoly {
        let mut out = MPoly::zero();
        for (&e, c) in &self.terms {
            let mut e2 = e;
            e2[k] = 0;
            out.add_term(e2, c * value.pow(e[k] as i32));
        }
        out
    }

    /// Dense coefficient vector with respect to `x{k+1}` (index = power),
    /// each entry free of that variable. Empty for the zero polynomial.
    pub fn coeffs_wrt(&self, k: usize) -> Vec<MPoly> {
        let Some(deg) = self.degree_in(k) else {
            return vec![];
        };
        let mut out = vec![MPoly::zero(); deg as usize + 1];
        for (&e, c) in &self.terms {
            let mut e2 = e;
            e2[k] = 0;
            out[e[k] as usize].add_term(e2, c.clone());
        }
        out
    }

    /// Exact division by the linear difference `x{i+1} - x{j+1}` via
    /// synthetic division in `x{i+1}`; errors when a remainder survives.
    pub fn exact_divide_by_var_diff(&self, i: usize, j: usize) -> Result<MPoly> {
        assert!(i < 4 && j < 4 && i != j);
        let coeffs = self.coeffs_wrt(i);
        if coeffs.is_empty() {
            return Ok(MPoly::zero());
        }
        let xj = MPoly::var(j);
        let mut quotient_coeffs = vec![MPoly::zero(); coeffs.len().saturating_sub(1)];
        let mut carry = MPoly::zero();
        for k in (1..coeffs.len()).rev() {
            let q = &coeffs[k] + &carry;
            carry = &q * &xj;
            quotient_coeffs[k - 1] = q;
        }
        let remainder = &coeffs[0] + &carry;
        if !remainder.is_zero() {
            return Err(EinflagError::NotDivisible);
        }
        let xi = MPoly::var(i);
        let mut out = MPoly::zero();
        let mut power = MPoly::one();
        for q in quotient_coeffs {
            out = &out + &(&q * &power);
            power = &power * &xi;
        }
        Ok(out)
    }

    /// Collapses to a [`BiPoly`] in `(x{a+1}, x{b+1})`; panics if any other
    /// variable occurs.
    pub fn to_bipoly(&self, a: usize, b: usize) -> BiPoly {
        assert!(a < 4 && b < 4 && a != b);
        let mut out = BiPoly::zero();
        for (&e, c) in &self.terms {
            for k in 0..4 {
                assert!(
                    k == a || k == b || e[k] == 0,
                    "polynomial involves a variable outside the requested pair"
                );
            }
            out.add_term(e[a] as u32, e[b] as u32, c.clone());
        }
        out
    }

    /// Collapses to a [`UniPoly`] in `x{k+1}`; panics if any other variable
    /// occurs.
    pub fn to_unipoly(&self, k: usize) -> UniPoly {
        let mut coeffs: Vec<Rational> = Vec::new();
        for (&e, c) in &self.terms {
            for m in 0..4 {
                assert!(
                    m == k || e[m] == 0,
                    "polynomial involves a variable other than the requested one"
                );
            }
            let idx = e[k] as usize;
            if coeffs.len() <= idx {
                coeffs.resize(idx + 1, Rational::zero());
            }
            coeffs[idx] += c;
        }
        UniPoly::new(coeffs)
    }

    /// Embeds a [`BiPoly`] by mapping its first variable to `x{a+1}` and its
    /// second to `x{b+1}`.
    pub fn from_bipoly(p: &BiPoly, a: usize, b: usize) -> MPoly {
        assert!(a < 4 && b < 4 && a != b);
        let mut out = MPoly::zero();
        for (&(i, j), c) in p.terms() {
            let mut e = [0u16; 4];
            e[a] = i as u16;
            e[b] = j as u16;
            out.add_term(e, c.clone());
        }
        out
    }

    /// Swaps two variables everywhere (relabeling substitution).
    pub fn swap_vars(&self, a: usize, b: usize) -> MPoly {
        assert!(a < 4 && b < 4);
        let mut out = MPoly::zero();
        for (&e, c) in &self.terms {
            let mut e2 = e;
            e2.swap(a, b);
            out.add_term(e2, c.clone());
        }
        out
    }

    /// Substitutes a polynomial for `x{k+1}`.
    pub fn substitute(&self, k: usize, poly: &MPoly) -> MPoly {
        let coeffs = self.coeffs_wrt(k);
        let mut acc = MPoly::zero();
        let mut power = MPoly::one();
        for c in coeffs {
            acc = &acc + &(&c * &power);
            power = &power * poly;
        }
        acc
    }

    /// Exact division by a monomial; errors when any term has a smaller
    /// exponent in some variable.
    pub fn divide_monomial(&self, exps: [u16; 4]) -> Result<MPoly> {
        let mut out = MPoly::zero();
        for (&e, c) in &self.terms {
            let mut e2 = e;
            for k in 0..4 {
                if e[k] < exps[k] {
                    return Err(EinflagError::NotDivisible);
                }
                e2[k] = e[k] - exps[k];
            }
            out.add_term(e2, c.clone());
        }
        Ok(out)
    }

    /// The constant `c` with `self == c * other`, when one exists. Zero
    /// matches only zero (with ratio 1).
    pub fn scalar_multiple_of(&self, other: &MPoly) -> Option<Rational> {
        if other.is_zero() {
            return self.is_zero().then(Rational::one);
        }
        let (&key, ref_c) = other.terms.iter().next_back().unwrap();
        let mine = self.coeff(key);
        if mine.is_zero() {
            return None;
        }
        let c = mine / ref_c.clone();
        (*self == other.scale(&c)).then_some(c)
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                let e = [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]];
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if first {
                write!(f, "{c}")?;
                first = false;
            } else if c < &Rational::zero() {
                write!(f, " - {}", -c)?;
            } else {
                write!(f, " + {c}")?;
            }
            for k in 0..4 {
                if e[k] == 1 {
                    write!(f, "*x{}", k + 1)?;
                } else if e[k] > 1 {
                    write!(f, "*x{}^{}", k + 1, e[k])?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::{rat, rat_int};
    use super::*;

    fn sample() -> MPoly {
        // x1^2 x3 - 2 x2 x4 + 7
        MPoly::from_terms([
            ([2, 0, 1, 0], rat_int(1)),
            ([0, 1, 0, 1], rat_int(-2)),
            ([0, 0, 0, 0], rat_int(7)),
        ])
    }

    #[test]
    fn eval_and_partial() {
        let p = sample();
        let x = [rat_int(2), rat_int(3), rat(1, 2), rat_int(5)];
        assert_eq!(p.eval(&x), rat_int(2) - rat_int(30) + rat_int(7));
        let at_x1 = p.eval_partial(0, &rat_int(2));
        assert_eq!(at_x1.coeff([0, 0, 1, 0]), rat_int(4));
    }

    #[test]
    fn divide_by_var_diff() {
        // (x1 - x3) * (x1 x4 + x2) recovered exactly.
        let factor = &(&MPoly::var(0) * &MPoly::var(3)) + &MPoly::var(1);
        let diff = &MPoly::var(0) - &MPoly::var(2);
        let product = &diff * &factor;
        assert_eq!(product.exact_divide_by_var_diff(0, 2).unwrap(), factor);
        assert_eq!(
            sample().exact_divide_by_var_diff(0, 2).unwrap_err(),
            EinflagError::NotDivisible
        );
    }

    #[test]
    fn conversions() {
        let p = MPoly::from_terms([([0, 2, 0, 1], rat_int(3)), ([0, 0, 0, 2], rat_int(-1))]);
        let b = p.to_bipoly(1, 3);
        assert_eq!(b.coeff(2, 1), rat_int(3));
        assert_eq!(MPoly::from_bipoly(&b, 1, 3), p);
        let u = MPoly::from_terms([([0, 0, 3, 0], rat_int(5)), ([0, 0, 0, 0], rat_int(-2))]);
        assert_eq!(u.to_unipoly(2), UniPoly::from_ints(&[-2, 0, 0, 5]));
    }

    #[test]
    fn swap_and_substitute() {
        let p = sample();
        let swapped = p.swap_vars(1, 3);
        assert_eq!(swapped.coeff([0, 1, 0, 1]), rat_int(-2));
        assert_eq!(swapped.coeff([2, 0, 1, 0]), rat_int(1));
        let subbed = p.substitute(0, &MPoly::var(2));
        assert_eq!(subbed.coeff([0, 0, 3, 0]), rat_int(1));
    }

    #[test]
    fn homogeneity_detection() {
        let h = MPoly::from_terms([([1, 1, 1, 0], rat_int(2)), ([0, 0, 0, 3], rat_int(-5))]);
        assert!(h.is_homogeneous(3));
        assert!(!sample().is_homogeneous(3));
    }
}
