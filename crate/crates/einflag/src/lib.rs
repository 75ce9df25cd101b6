//! Exact enumeration and certification of the invariant Einstein metrics on
//! the flag manifolds `Sp(n)/(U(p) x U(n-p))`.
//!
//! For every integer pair `(n, p)` with `n >= 3` and `1 <= p <= n-1`, the
//! homogeneous space `Sp(n)/(U(p) x U(n-p))` carries a four-parameter family
//! of invariant metrics `(x1, x2, x3, x4)`. This crate computes, in exact
//! rational arithmetic, the complete list of such metrics that are Einstein:
//! four Kahler-Einstein tuples with rational coordinates and two non-Kahler
//! tuples with algebraic coordinates certified by isolating intervals.
//!
//! The pipeline works purely symbolically: the Ricci components are expanded
//! into polynomial equations, a case split on `x1 = x3` versus `x1 != x3`
//! reduces the system to univariate resultants, and every root is certified
//! with Sturm chains and exact interval arithmetic. No floating point enters
//! the certified path; a small `f64` Newton solver exists only as an
//! independent cross-check oracle.
//!
//! * [`exactmath`] - arbitrary-precision rationals, dense univariate and
//!   sparse multivariate polynomials, dual-route resultants.
//! * [`realroots`] - Sturm-chain root counting, isolation, refinement, and
//!   interval evaluation of rational functions.
//! * [`flagmodel`] - the geometry of the space: dimensions, structure
//!   constants, Ricci components, the Einstein system, Kahler-Einstein
//!   metrics.
//! * [`solver`] - the case analysis, certification, classification, lemma
//!   suite, and the Newton oracle.
//! * [`report`] - deterministic table / JSON / CSV renderings.
//! * [`cli`] - the `einflag` command-line front end.

pub mod cli;
pub mod exactmath;
pub mod flagmodel;
pub mod realroots;
pub mod report;
pub mod solver;

use thiserror::Error;

/// Unified error type for the certified pipeline.
///
/// Every variant is a *detected* inconsistency or an honest refusal; the
/// library never guesses past one of these.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum EinflagError {
    /// Parameters outside `n >= 3`, `1 <= p <= n-1` (or malformed CLI input).
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    /// Exact polynomial division was requested but a remainder survived.
    #[error("exact polynomial division left a remainder")]
    NotDivisible,

    /// A rational-function evaluation met a denominator interval containing 0.
    #[error("denominator interval straddles zero; refine the input interval")]
    DenominatorStraddlesZero,

    /// A metric claimed to be Einstein has provably unequal Ricci components.
    #[error("metric is not Einstein: {0}")]
    NotEinstein(String),

    /// A cleared numerator failed the divisibility-by-Q membership check.
    #[error("ideal membership failure: {0}")]
    MembershipFailure(String),

    /// A rational-root branch produced a tuple outside the Kahler list.
    #[error("unexpected non-Kahler tuple in the rational branch: {0}")]
    UnexpectedNonKahler(String),

    /// Sign certification failed to separate a value from zero at the
    /// maximum refinement width (2^-4096).
    #[error("positivity undecided at maximum refinement: {0}")]
    PositivityUndecided(String),

    /// The resultant did not factor as the certified product shape.
    #[error("resultant factorization mismatch: {0}")]
    FactorizationMismatch(String),

    /// A substituted denominator divides the target equation identically.
    #[error("substitution denominator divides the equation")]
    DegenerateDenominator,
}

pub type Result<T> = std::result::Result<T, EinflagError>;
