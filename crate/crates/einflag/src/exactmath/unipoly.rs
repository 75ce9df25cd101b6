//! Dense univariate polynomials over [`Rational`].
//!
//! Coefficients are stored in ascending power order with the invariant that
//! the last stored coefficient is nonzero (the zero polynomial stores an
//! empty vector). All arithmetic is exact.

use super::{sign, Int, Rational};
use crate::{EinflagError, Result};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A dense univariate polynomial with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    /// Builds a polynomial from ascending-power coefficients, trimming
    /// trailing zeros.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c * x^deg`.
    pub fn monomial(c: Rational, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); deg + 1];
        coeffs[deg] = c;
        UniPoly { coeffs }
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// Convenience constructor from ascending-power integer coefficients.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&k| super::rat_int(k)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree treating the zero polynomial as degree 0.
    pub fn degree_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lc(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient of `x^k` (zero when out of range).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Ascending-power coefficient slice (no trailing zeros).
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Horner evaluation at an exact rational point.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * super::rat_int(k as i64))
            .collect();
        UniPoly::new(coeffs)
    }

    /// Multiplies by a rational scalar.
    pub fn scale(&self, s: &Rational) -> UniPoly {
        if s.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> UniPoly {
        let mut base = self.clone();
        let mut acc = UniPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Quotient and remainder of field division; panics if `div` is zero.
    pub fn divrem(&self, div: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!div.is_zero(), "division by the zero polynomial");
        let dd = div.degree().unwrap();
        if self.degree().map_or(true, |d| d < dd) {
            return (UniPoly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        let inv_lc = Rational::one() / div.lc();
        for k in (dd..rem.len()).rev() {
            let q = &rem[k] * &inv_lc;
            if q.is_zero() {
                continue;
            }
            for (j, c) in div.coeffs.iter().enumerate() {
                let t = &q * c;
                rem[k - dd + j] -= t;
            }
            quot[k - dd] = q;
        }
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// Exact division; errors with [`EinflagError::NotDivisible`] when a
    /// remainder survives.
    pub fn exact_divide(&self, div: &UniPoly) -> Result<UniPoly> {
        if div.is_zero() {
            return Err(EinflagError::NotDivisible);
        }
        let (q, r) = self.divrem(div);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(EinflagError::NotDivisible)
        }
    }

    /// The constant `c` with `self == c * other`, when one exists. Zero
    /// matches only zero (with ratio 1).
    pub fn scalar_multiple_of(&self, other: &UniPoly) -> Option<Rational> {
        if other.is_zero() {
            return self.is_zero().then(Rational::one);
        }
        if self.is_zero() || self.degree() != other.degree() {
            return None;
        }
        let c = self.lc() / other.lc();
        (*self == other.scale(&c)).then_some(c)
    }

    /// Monic greatest common divisor (gcd of anything with zero is the other
    /// argument made monic; gcd of two zeros is zero).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            // Normalizing each remainder keeps coefficient growth linear.
            b = r.primitive_part();
        }
        a.monic()
    }

    /// Scales to leading coefficient 1 (zero stays zero).
    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let inv = Rational::one() / self.lc();
        self.scale(&inv)
    }

    /// The rational `content`: the positive rational `c` such that
    /// `self / c` has coprime integer coefficients, carrying the sign of the
    /// leading coefficient. Zero for the zero polynomial.
    pub fn content(&self) -> Rational {
        if self.is_zero() {
            return Rational::zero();
        }
        let mut num_gcd = Int::zero();
        let mut den_lcm = Int::one();
        for c in &self.coeffs {
            if c.is_zero() {
                continue;
            }
            num_gcd = num_gcd.gcd(&c.numer().abs());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut content = Rational::new(num_gcd, den_lcm);
        if self.lc().is_negative() {
            content = -content;
        }
        content
    }

    /// `self / content()`: coprime integer coefficients, positive leading
    /// coefficient.
    pub fn primitive_part(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let inv = Rational::one() / self.content();
        self.scale(&inv)
    }

    /// The square-free part `self / gcd(self, self')`, returned primitive
    /// with positive leading coefficient.
    pub fn squarefree_part(&self) -> UniPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.primitive_part();
        }
        let g = self.gcd(&self.derivative());
        self.exact_divide(&g)
            .expect("gcd divides its operand")
            .primitive_part()
    }

    /// Yun square-free decomposition: returns `(factor, multiplicity)` pairs
    /// with each factor monic and square-free, such that the product of
    /// `factor^multiplicity` equals `self` up to a rational scalar.
    pub fn squarefree_decomposition(&self) -> Vec<(UniPoly, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let g = f.gcd(&df);
        let mut b = f.exact_divide(&g).expect("gcd divides");
        let mut d = &df.exact_divide(&g).expect("gcd divides") - &b.derivative();
        let mut i = 1usize;
        loop {
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.exact_divide(&a).expect("gcd divides");
            d = &d.exact_divide(&a).expect("gcd divides") - &b.derivative();
            i += 1;
        }
        out
    }

    /// Coefficient sequence reversed (`a_k -> a_{d-k}`); used for
    /// palindromic-polynomial checks.
    pub fn reversed(&self) -> UniPoly {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        UniPoly::new(coeffs)
    }

    /// True when `a_k = a_{d-k}` for all `k`.
    pub fn is_palindromic(&self) -> bool {
        *self == self.reversed()
    }

    /// A strict upper bound on the absolute value of every real root
    /// (Cauchy bound `1 + max |a_k| / |a_d|`). Returns 1 for constants.
    pub fn root_bound(&self) -> Rational {
        match self.degree() {
            None | Some(0) => Rational::one(),
            Some(d) => {
                let lc_abs = self.coeffs[d].abs();
                let mut max = Rational::zero();
                for c in &self.coeffs[..d] {
                    let q = c.abs() / &lc_abs;
                    if q > max {
                        max = q;
                    }
                }
                max + Rational::one()
            }
        }
    }

    /// Renders with the given variable name, highest power first.
    pub fn to_string_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts: Vec<String> = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let body = match (k, mag.is_one()) {
                (0, _) => format!("{mag}"),
                (1, true) => var.to_string(),
                (1, false) => format!("{mag}*{var}"),
                (_, true) => format!("{var}^{k}"),
                (_, false) => format!("{mag}*{var}^{k}"),
            };
            if parts.is_empty() {
                parts.push(if sign(c) < 0 { format!("-{body}") } else { body });
            } else if sign(c) < 0 {
                parts.push(format!("- {body}"));
            } else {
                parts.push(format!("+ {body}"));
            }
        }
        parts.join(" ")
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_var("x"))
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + rhs.coeff(k));
        }
        UniPoly::new(coeffs)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) - rhs.coeff(k));
        }
        UniPoly::new(coeffs)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::new(coeffs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}
