//! Certified enumeration of invariant Einstein metrics: the two-case split,
//! elimination to quartics, root isolation with exact certificates, the
//! lemma suite, and a floating-point cross-check.

pub mod case1;
pub mod case2;
mod enumerate;
pub mod lemmas;
pub mod newton;
pub mod reference;

pub use case1::{build_case1, solve_case1, Case1System};
pub use case2::{
    build_case2, factor_resultant, solve_case2a, solve_case2b, Case2System,
    ResultantFactorization,
};
pub use enumerate::{
    duality_check, enumerate_einstein, enumerate_einstein_with, enumerations_dual, Enumeration,
};
pub use lemmas::{verify_lemmas, LemmaReport, LemmaVerdict};
pub use newton::{newton_matches_certified, newton_oracle, NewtonComparison};

use crate::exactmath::{pow2_neg, Rational};
use crate::realroots::RatInterval;
use std::fmt;

/// Environment variable overriding the default refinement precision
/// exponent.
pub const PRECISION_ENV_VAR: &str = "EINFLAG_PRECISION";

/// Refinement and safety parameters for interval certification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverParams {
    /// Target interval width exponent: intervals are narrowed below
    /// `2^-precision_exp`.
    pub precision_exp: u32,
    /// Hard refinement floor `2^-cap_exp`; crossing it without a decision is
    /// reported as an error instead of looping.
    pub cap_exp: u32,
}

impl Default for SolverParams {
    fn default() -> Self {
        SolverParams {
            precision_exp: 80,
            cap_exp: 4096,
        }
    }
}

impl SolverParams {
    /// Default parameters with the precision exponent optionally overridden
    /// by the `EINFLAG_PRECISION` environment variable.
    pub fn from_env() -> Self {
        let mut params = SolverParams::default();
        if let Ok(raw) = std::env::var(PRECISION_ENV_VAR) {
            if let Ok(exp) = raw.trim().parse::<u32>() {
                params.precision_exp = exp.clamp(1, params.cap_exp);
            }
        }
        params
    }

    /// The target interval width `2^-precision_exp`.
    pub fn target_width(&self) -> Rational {
        pow2_neg(self.precision_exp)
    }
}

/// One metric coordinate or Einstein constant: either an exact rational or a
/// certified enclosing interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoordValue {
    Exact(Rational),
    Interval(RatInterval),
}

impl CoordValue {
    pub fn lo(&self) -> Rational {
        match self {
            CoordValue::Exact(v) => v.clone(),
            CoordValue::Interval(i) => i.lo().clone(),
        }
    }

    pub fn hi(&self) -> Rational {
        match self {
            CoordValue::Exact(v) => v.clone(),
            CoordValue::Interval(i) => i.hi().clone(),
        }
    }

    pub fn midpoint(&self) -> Rational {
        match self {
            CoordValue::Exact(v) => v.clone(),
            CoordValue::Interval(i) => i.midpoint(),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, CoordValue::Exact(_))
    }

    pub fn as_interval(&self) -> RatInterval {
        match self {
            CoordValue::Exact(v) => RatInterval::point(v.clone()),
            CoordValue::Interval(i) => i.clone(),
        }
    }

    /// True when the two values could describe the same real number: exact
    /// values compare by equality, intervals by overlap.
    pub fn overlaps(&self, other: &CoordValue) -> bool {
        !self.as_interval().disjoint_from(&other.as_interval())
    }
}

impl fmt::Display for CoordValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoordValue::Exact(v) => write!(f, "{v}"),
            CoordValue::Interval(i) => write!(f, "{i}"),
        }
    }
}

/// Whether a solution is one of the closed-form Kaehler metrics or one of
/// the isolated non-Kaehler ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Kahler,
    NonKahler,
}

impl Kind {
    pub fn as_str(&self) -> &'static str {
        match self {
            Kind::Kahler => "kahler",
            Kind::NonKahler => "non_kahler",
        }
    }
}

/// Which branch of the case split produced a solution.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Origin {
    /// The `x1 = x3` slice.
    Case1,
    /// A rational `x3` specialization (1-based index of the linear factor).
    Case2a(u8),
    /// The quartic factor of the case-2 resultant.
    Case2b,
}

impl fmt::Display for Origin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Origin::Case1 => write!(f, "case1"),
            Origin::Case2a(k) => write!(f, "case2a-sub{k}"),
            Origin::Case2b => write!(f, "case2b"),
        }
    }
}

/// How a solution's residual was certified.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResidualCheck {
    /// The full system evaluates to exactly zero at the rational tuple.
    ExactZero,
    /// The coordinate lies on a root of the certified quartic factor and the
    /// cleared substituted equations are exactly divisible by that quartic.
    QuarticMembership,
}

impl ResidualCheck {
    pub fn as_str(&self) -> &'static str {
        match self {
            ResidualCheck::ExactZero => "exact-zero",
            ResidualCheck::QuarticMembership => "quartic-membership",
        }
    }
}

/// Verification data attached to each solution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    /// All four coordinates are certified strictly positive.
    pub positivity: bool,
    /// How the residual was verified.
    pub residual: ResidualCheck,
    /// For interval solutions, the refinement exponent actually reached.
    pub width_exp: Option<u32>,
}

/// One invariant Einstein metric, normalized to `x1 = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EinsteinSolution {
    pub metric: [CoordValue; 4],
    pub einstein_constant: CoordValue,
    pub kind: Kind,
    pub origin: Origin,
    pub certificate: Certificate,
}

impl EinsteinSolution {
    /// Deterministic ordering key: `x3` first, then `x2`, comparing interval
    /// lower endpoints (exact values are degenerate intervals).
    pub fn sort_key(&self) -> (Rational, Rational) {
        (self.metric[2].lo(), self.metric[1].lo())
    }

    /// True when every coordinate of the two solutions could coincide.
    pub fn coincides_with(&self, other: &EinsteinSolution) -> bool {
        self.metric
            .iter()
            .zip(other.metric.iter())
            .all(|(a, b)| a.overlaps(b))
    }
}
