//! Exact arithmetic: arbitrary-precision rationals and the polynomial types
//! used throughout the pipeline.
//!
//! * [`Rational`] - `num_rational::BigRational`, the single scalar type of
//!   the certified path.
//! * [`UniPoly`] - dense univariate polynomials over [`Rational`].
//! * [`BiPoly`] - sparse bivariate polynomials (two anonymous variables).
//! * [`MPoly`] - sparse polynomials in the four metric variables `x1..x4`.
//! * [`resultant`] - subresultant-PRS resultants cross-checked against a
//!   fraction-free Sylvester determinant.

pub mod bipoly;
pub mod mpoly;
pub mod resultant;
pub mod unipoly;

pub use bipoly::{BiPoly, Var};
pub use mpoly::MPoly;
pub use resultant::{resultant, resultant_unipoly};
pub use unipoly::UniPoly;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision integers.
pub type Int = BigInt;
/// Arbitrary-precision rationals: the scalar field of the whole crate.
pub type Rational = num_rational::BigRational;

/// The rational `k`.
pub fn rat_int(k: i64) -> Rational {
    Rational::from_integer(Int::from(k))
}

/// The rational `num/den`. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(Int::from(num), Int::from(den))
}

/// Sign of a rational as `-1`, `0`, or `1`.
pub fn sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// `2^-exp` as an exact rational.
pub fn pow2_neg(exp: u32) -> Rational {
    Rational::new(Int::one(), Int::one() << exp)
}

/// Parse a rational from `a`, `-a`, or `a/b` decimal-free notation.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((a, b)) => {
            let num: Int = a.trim().parse().ok()?;
            let den: Int = b.trim().parse().ok()?;
            if den.is_zero() {
                None
            } else {
                Some(Rational::new(num, den))
            }
        }
        None => {
            let num: Int = s.parse().ok()?;
            Some(Rational::from_integer(num))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_helpers() {
        assert_eq!(rat(2, 4), rat(1, 2));
        assert_eq!(rat_int(-3), rat(-6, 2));
        assert_eq!(sign(&rat(-1, 7)), -1);
        assert_eq!(sign(&rat(0, 7)), 0);
        assert_eq!(sign(&rat(5, 7)), 1);
        assert_eq!(pow2_neg(3), rat(1, 8));
    }

    #[test]
    fn parse_rational_forms() {
        assert_eq!(parse_rational("7/3"), Some(rat(7, 3)));
        assert_eq!(parse_rational("-7 / 3"), Some(rat(-7, 3)));
        assert_eq!(parse_rational("12"), Some(rat_int(12)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }
}
