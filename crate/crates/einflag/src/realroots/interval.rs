//! Closed rational intervals with outward-conservative arithmetic.

use crate::exactmath::{Rational, UniPoly};
use crate::{EinflagError, Result};
use num_traits::Zero;
use std::fmt;

/// A closed interval `[lo, hi]` with exact rational endpoints, `lo <= hi`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatInterval {
    lo: Rational,
    hi: Rational,
}

impl RatInterval {
    /// Builds `[lo, hi]`; panics unless `lo <= hi`.
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        RatInterval { lo, hi }
    }

    /// The degenerate interval `[r, r]`.
    pub fn point(r: Rational) -> Self {
        RatInterval {
            lo: r.clone(),
            hi: r,
        }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, r: &Rational) -> bool {
        &self.lo <= r && r <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&Rational::zero())
    }

    /// True when every point of the interval is strictly positive.
    pub fn is_positive(&self) -> bool {
        self.lo > Rational::zero()
    }

    /// True when every point of the interval is strictly negative.
    pub fn is_negative(&self) -> bool {
        self.hi < Rational::zero()
    }

    pub fn add(&self, other: &RatInterval) -> RatInterval {
        RatInterval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn sub(&self, other: &RatInterval) -> RatInterval {
        RatInterval {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
        }
    }

    pub fn neg(&self) -> RatInterval {
        RatInterval {
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }

    pub fn mul(&self, other: &RatInterval) -> RatInterval {
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let mut lo = products[0].clone();
        let mut hi = products[0].clone();
        for p in &products[1..] {
            if p < &lo {
                lo = p.clone();
            }
            if p > &hi {
                hi = p.clone();
            }
        }
        RatInterval { lo, hi }
    }

    /// Scales by an exact rational.
    pub fn scale(&self, s: &Rational) -> RatInterval {
        let a = &self.lo * s;
        let b = &self.hi * s;
        if a <= b {
            RatInterval { lo: a, hi: b }
        } else {
            RatInterval { lo: b, hi: a }
        }
    }

    /// Shifts by an exact rational.
    pub fn shift(&self, s: &Rational) -> RatInterval {
        RatInterval {
            lo: &self.lo + s,
            hi: &self.hi + s,
        }
    }

    /// Reciprocal; errors when the interval contains zero.
    pub fn recip(&self) -> Result<RatInterval> {
        if self.contains_zero() {
            return Err(EinflagError::DenominatorStraddlesZero);
        }
        Ok(RatInterval {
            lo: self.hi.recip(),
            hi: self.lo.recip(),
        })
    }

    pub fn div(&self, other: &RatInterval) -> Result<RatInterval> {
        Ok(self.mul(&other.recip()?))
    }

    pub fn pow(&self, e: u32) -> RatInterval {
        let mut acc = RatInterval::point(Rational::from_integer(1.into()));
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// True when the intervals share no point.
    pub fn disjoint_from(&self, other: &RatInterval) -> bool {
        self.hi < other.lo || other.hi < self.lo
    }

    /// Intersection, or `None` when disjoint.
    pub fn intersect(&self, other: &RatInterval) -> Option<RatInterval> {
        let lo = if self.lo >= other.lo {
            self.lo.clone()
        } else {
            other.lo.clone()
        };
        let hi = if self.hi <= other.hi {
            self.hi.clone()
        } else {
            other.hi.clone()
        };
        if lo <= hi {
            Some(RatInterval { lo, hi })
        } else {
            None
        }
    }
}

impl fmt::Display for RatInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Horner evaluation of a polynomial over an interval argument. The result
/// encloses the exact range of the polynomial on the interval.
pub fn eval_poly_interval(f: &UniPoly, x: &RatInterval) -> RatInterval {
    let mut acc = RatInterval::point(Rational::zero());
    for c in f.coeffs().iter().rev() {
        acc = acc.mul(x).shift(c);
    }
    acc
}

/// Encloses `numer(x) / denom(x)` over an interval argument; errors when the
/// denominator enclosure straddles zero.
pub fn eval_rational_interval(
    numer: &UniPoly,
    denom: &UniPoly,
    x: &RatInterval,
) -> Result<RatInterval> {
    eval_poly_interval(numer, x).div(&eval_poly_interval(denom, x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, rat_int};

    fn iv(lo: (i64, i64), hi: (i64, i64)) -> RatInterval {
        RatInterval::new(rat(lo.0, lo.1), rat(hi.0, hi.1))
    }

    #[test]
    fn basic_accessors() {
        let a = iv((1, 2), (3, 2));
        assert_eq!(a.width(), rat_int(1));
        assert_eq!(a.midpoint(), rat_int(1));
        assert!(a.contains(&rat_int(1)));
        assert!(!a.contains(&rat_int(2)));
        assert!(a.is_positive());
        assert!(RatInterval::point(rat_int(5)).is_point());
    }

    #[test]
    fn arithmetic_encloses() {
        let a = iv((-1, 1), (2, 1));
        let b = iv((3, 1), (4, 1));
        assert_eq!(a.add(&b), iv((2, 1), (6, 1)));
        assert_eq!(a.sub(&b), iv((-5, 1), (-1, 1)));
        assert_eq!(a.mul(&b), iv((-4, 1), (8, 1)));
        assert_eq!(a.neg(), iv((-2, 1), (1, 1)));
        assert_eq!(a.scale(&rat_int(-2)), iv((-4, 1), (2, 1)));
    }

    #[test]
    fn reciprocal_guards_zero() {
        let a = iv((1, 2), (2, 1));
        assert_eq!(a.recip().unwrap(), iv((1, 2), (2, 1)));
        let z = iv((-1, 1), (1, 1));
        assert_eq!(
            z.recip().unwrap_err(),
            crate::EinflagError::DenominatorStraddlesZero
        );
        let touches = iv((0, 1), (1, 1));
        assert!(touches.recip().is_err());
    }

    #[test]
    fn division_and_powers() {
        let a = iv((4, 1), (6, 1));
        let b = iv((2, 1), (2, 1));
        assert_eq!(a.div(&b).unwrap(), iv((2, 1), (3, 1)));
        assert_eq!(iv((-2, 1), (1, 1)).pow(2), iv((-2, 1), (4, 1)));
    }

    #[test]
    fn poly_eval_encloses_exact_values() {
        let f = UniPoly::from_ints(&[-1, 0, 1]); // x^2 - 1
        let x = iv((1, 1), (2, 1));
        let range = eval_poly_interval(&f, &x);
        for t in [rat_int(1), rat(3, 2), rat_int(2)] {
            assert!(range.contains(&f.eval(&t)));
        }
    }

    #[test]
    fn disjointness() {
        assert!(iv((0, 1), (1, 1)).disjoint_from(&iv((2, 1), (3, 1))));
        assert!(!iv((0, 1), (2, 1)).disjoint_from(&iv((1, 1), (3, 1))));
    }
}
