//! Closed-form reference polynomials and scalars, stored as readable
//! arithmetic expressions over the parameters `n` and `p` and evaluated
//! exactly by a small recursive-descent parser. The solver derives every
//! object independently and certifies it against these transcriptions, so a
//! typo here fails loudly rather than silently shifting a result.

use crate::exactmath::{BiPoly, MPoly, Rational, UniPoly};
use num_traits::Zero;

/// Evaluates an arithmetic expression in `n` and `p` to an exact rational.
/// Supports `+ - * / ^`, parentheses, unary minus, and integer literals.
/// Panics on malformed input: expressions are compile-time constants.
pub fn scalar(src: &str, n: &Rational, p: &Rational) -> Rational {
    let mut parser = Parser {
        bytes: src.as_bytes(),
        pos: 0,
        n,
        p,
        src,
    };
    let value = parser.expr();
    parser.skip_ws();
    assert!(
        parser.pos == parser.bytes.len(),
        "trailing input in expression {src:?} at byte {}",
        parser.pos
    );
    value
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    n: &'a Rational,
    p: &'a Rational,
    src: &'a str,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expr(&mut self) -> Rational {
        let mut acc = self.term();
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term();
            if op == b'+' {
                acc += rhs;
            } else {
                acc -= rhs;
            }
        }
        acc
    }

    fn term(&mut self) -> Rational {
        let mut acc = self.factor();
        while let Some(op @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let rhs = self.factor();
            if op == b'*' {
                acc *= rhs;
            } else {
                assert!(!rhs.is_zero(), "division by zero in {:?}", self.src);
                acc /= rhs;
            }
        }
        acc
    }

    fn factor(&mut self) -> Rational {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return -self.factor();
        }
        let base = self.primary();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let exp: i32 = self.src[start..self.pos]
                .parse()
                .unwrap_or_else(|_| panic!("bad exponent in {:?}", self.src));
            return base.pow(exp);
        }
        base
    }

    fn primary(&mut self) -> Rational {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr();
                assert_eq!(self.peek(), Some(b')'), "unbalanced parens in {:?}", self.src);
                self.pos += 1;
                inner
            }
            Some(b'n') => {
                self.pos += 1;
                self.n.clone()
            }
            Some(b'p') => {
                self.pos += 1;
                self.p.clone()
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let digits = &self.src[start..self.pos];
                Rational::from_integer(
                    digits
                        .parse()
                        .unwrap_or_else(|_| panic!("bad integer in {:?}", self.src)),
                )
            }
            other => panic!("unexpected token {other:?} in {:?}", self.src),
        }
    }
}

/// Univariate polynomial from coefficient expressions listed highest degree
/// first, matching how the closed forms read.
fn upoly(descending: &[&str], n: &Rational, p: &Rational) -> UniPoly {
    let mut coeffs: Vec<Rational> = descending.iter().map(|s| scalar(s, n, p)).collect();
    coeffs.reverse();
    UniPoly::new(coeffs)
}

fn bipoly(terms: &[(u32, u32, &str)], n: &Rational, p: &Rational) -> BiPoly {
    BiPoly::from_terms(terms.iter().map(|(i, j, s)| (*i, *j, scalar(s, n, p))))
}

fn mpoly(terms: &[([u16; 4], &str)], n: &Rational, p: &Rational) -> MPoly {
    MPoly::from_terms(terms.iter().map(|(e, s)| (*e, scalar(s, n, p))))
}

/// A substitution rule `x -> numer(y) / denom(y)` between two coordinates.
#[derive(Clone, Debug)]
pub struct RationalMap {
    pub numer: UniPoly,
    pub denom: UniPoly,
}

impl RationalMap {
    pub fn eval(&self, y: &Rational) -> Option<Rational> {
        let d = self.denom.eval(y);
        (!d.is_zero()).then(|| self.numer.eval(y) / d)
    }
}

/// First residual equation on the `x1 = x3 = 1` slice: quadratic in `x2`
/// (first variable), linear in `x4` (second variable).
pub fn case1_quadratic_x2(n: &Rational, p: &Rational) -> BiPoly {
    bipoly(
        &[
            (2, 0, "n+p+1"),
            (0, 0, "4*(n-p+1)"),
            (1, 0, "-4*(n+1)"),
            (1, 1, "p+1"),
        ],
        n,
        p,
    )
}

/// Second residual equation on the `x1 = x3 = 1` slice: quadratic in `x4`,
/// linear in `x2`. Same variable convention as [`case1_quadratic_x2`].
pub fn case1_quadratic_x4(n: &Rational, p: &Rational) -> BiPoly {
    bipoly(
        &[
            (1, 1, "n-p+1"),
            (0, 2, "2*n-p+1"),
            (0, 1, "-4*(n+1)"),
            (0, 0, "4*(p+1)"),
        ],
        n,
        p,
    )
}

/// Solving [`case1_quadratic_x4`] for its linear variable: `x2` as a rational
/// function of `x4`.
pub fn case1_x2_from_x4(n: &Rational, p: &Rational) -> RationalMap {
    RationalMap {
        numer: upoly(&["-(2*n-p+1)", "4*(n+1)", "-4*(p+1)"], n, p),
        denom: upoly(&["n-p+1", "0"], n, p),
    }
}

/// Solving [`case1_quadratic_x2`] for its linear variable: `x4` as a rational
/// function of `x2`.
pub fn case1_x4_from_x2(n: &Rational, p: &Rational) -> RationalMap {
    RationalMap {
        numer: upoly(&["-(n+p+1)", "4*(n+1)", "-4*(n-p+1)"], n, p),
        denom: upoly(&["p+1", "0"], n, p),
    }
}

/// The quartic in `x4` whose positive roots would give case-1 solutions.
pub fn quartic_f(n: &Rational, p: &Rational) -> UniPoly {
    upoly(
        &[
            "n*(n+1)*(2*n-p+1)",
            "-4*(n+1)*(n^2+2*n*p+n-p^2+p)",
            "2*(n^3+9*n^2*p+7*n^2+4*n*p^2+16*n*p+8*n-2*p^3+2*p^2+6*p+2)",
            "-8*(n+1)*(p+1)*(n+3*p+1)",
            "8*(p+1)^2*(n+p+1)",
        ],
        n,
        p,
    )
}

/// The quartic in `x2` from the complementary elimination; equals
/// [`quartic_f`] with `p` replaced by `n - p`.
pub fn quartic_g(n: &Rational, p: &Rational) -> UniPoly {
    upoly(
        &[
            "n*(n+1)*(n+p+1)",
            "-4*(n+1)*(2*n^2+2*n-p^2-p)",
            "2*(12*n^3-11*n^2*p+25*n^2-2*n*p^2-20*n*p+14*n+2*p^3+2*p^2-6*p+2)",
            "-8*(n+1)*(4*n-3*p+1)*(n-p+1)",
            "8*(n-p+1)^2*(2*n-p+1)",
        ],
        n,
        p,
    )
}

/// Closed form for `f'(2(p-1)/n)`.
pub fn slope_f_at_lower(n: &Rational, p: &Rational) -> Rational {
    scalar(
        "-8*(n-p+1)*(2*n^3-3*n^2*p+13*n^2-8*n*p+16*n+2*p^3-6*p+4)/(n^2)",
        n,
        p,
    )
}

/// Closed form for `f'(2(p+1)/n)`.
pub fn slope_f_at_upper(n: &Rational, p: &Rational) -> Rational {
    scalar(
        "-8*(p+1)*(n-p+1)*(n^2-4*n*p-4*n+2*p^2-2*p-4)/(n^2)",
        n,
        p,
    )
}

/// Closed form for the quarter-discriminant of `f''` divided by `48(n+1)`,
/// whose sign controls whether `f''` has real roots.
pub fn concavity_gap_h(n: &Rational, p: &Rational) -> Rational {
    scalar(
        "(n+3)*p^4 - 2*(n+3)*(2*n+1)*p^3 + (7*n^3+20*n^2+13*n+3)*p^2 \
         - n*(5*n^3+4*n^2-4*n-2)*p + n*(n+1)*(n^3-7*n^2-7*n-2)",
        n,
        p,
    )
}

/// [`concavity_gap_h`] specialized at `p = n/2`.
pub fn concavity_gap_h_at_midline(n: &Rational) -> Rational {
    scalar(
        "-(1/16)*n*(3*n^4+73*n^3+152*n^2+116*n+32)",
        n,
        &Rational::zero(),
    )
}

/// [`concavity_gap_h`] specialized at `p = n - 1`.
pub fn concavity_gap_h_at_edge(n: &Rational) -> Rational {
    scalar("-2*(n^4+4*n^3+10*n^2+6*n-6)", n, &Rational::zero())
}

/// A tangent line of `f` recorded by its tangency abscissa, the value of `f`
/// there, and the slope.
#[derive(Clone, Debug)]
pub struct TangentLine {
    pub abscissa: Rational,
    pub value: Rational,
    pub slope: Rational,
}

impl TangentLine {
    /// The line as a polynomial in the running variable.
    pub fn as_poly(&self) -> UniPoly {
        UniPoly::new(vec![
            &self.value - &(&self.slope * &self.abscissa),
            self.slope.clone(),
        ])
    }

    /// Ordinate of the intersection with another (non-parallel) line.
    pub fn intersection_ordinate(&self, other: &TangentLine) -> Option<Rational> {
        let dslope = &self.slope - &other.slope;
        if dslope.is_zero() {
            return None;
        }
        let a = &self.value - &(&self.slope * &self.abscissa);
        let b = &other.value - &(&other.slope * &other.abscissa);
        let t = (&b - &a) / dslope;
        Some(&a + &(&self.slope * &t))
    }
}

/// The three transcribed tangent lines of `f`, at abscissas `2(p-1)/n`,
/// `2(p+1)/n`, and `2p/n`.
pub fn tangent_lines(n: &Rational, p: &Rational) -> [TangentLine; 3] {
    let line = |abscissa: &str, value: &str, slope: Rational| TangentLine {
        abscissa: scalar(abscissa, n, p),
        value: scalar(value, n, p),
        slope,
    };
    [
        line(
            "2*(p-1)/n",
            "16*(n-p+1)^2*(2*n^2+4*n+p^3-p^2-p+1)/(n^3)",
            slope_f_at_lower(n, p),
        ),
        line(
            "2*(p+1)/n",
            "16*(p+1)^3*(n-p+1)^2/(n^3)",
            slope_f_at_upper(n, p),
        ),
        line(
            "2*p/n",
            "8*(n^4-n^3*p+n^3+2*n^2*p^3-2*n^2*p-4*n*p^4+2*n*p^3+2*n*p^2+2*p^5-2*p^4)/(n^3)",
            scalar(
                "-8*(n-p+1)*(n^3-n^2*p+n^2-2*n*p^2-2*n*p+2*p^3)/(n^2)",
                n,
                p,
            ),
        ),
    ]
}

/// Closed form equal to the ordinate of the intersection of the first and
/// third tangent lines. (The source display attaches this expression to the
/// other intersection; the association here is the computed one.)
pub fn ordinate_l1l3(n: &Rational, p: &Rational) -> Rational {
    scalar(
        "8*(2*n^7-7*n^6*p+29*n^6+2*n^5*p^3+9*n^5*p^2-66*n^5*p+79*n^5-8*n^4*p^4\
         +26*n^4*p^3+28*n^4*p^2-178*n^4*p+84*n^4+14*n^3*p^5-78*n^3*p^4+106*n^3*p^3+72*n^3*p^2\
         -192*n^3*p+38*n^3-12*n^2*p^6+68*n^2*p^5-172*n^2*p^4+144*n^2*p^3+82*n^2*p^2-84*n^2*p\
         +6*n^2+4*n*p^7-20*n*p^6+88*n*p^5-148*n*p^4+64*n*p^3+24*n*p^2-12*n*p-12*p^6+36*p^5\
         -36*p^4+12*p^3)\
         /(n^3*((n-p)^3+(p+12)*(n-p)^2+(p^2+18*p+16)*(n-p)+(p+2)*(p^2+4*p+2)))",
        n,
        p,
    )
}

/// Closed form equal to the ordinate of the intersection of the second and
/// third tangent lines.
pub fn ordinate_l2l3(n: &Rational, p: &Rational) -> Rational {
    scalar(
        "8*(p+1)*(n^6+2*n^5*p^2-3*n^5*p+n^5-8*n^4*p^3+6*n^4*p^2-2*n^4*p-8*n^4\
         +14*n^3*p^4+4*n^3*p^3+18*n^3*p^2+14*n^3*p-14*n^3-12*n^2*p^5-16*n^2*p^4-4*n^2*p^3\
         +28*n^2*p^2+26*n^2*p-6*n^2+4*n*p^6+8*n*p^5-24*n*p^4-28*n*p^3+12*n*p^2+12*n*p\
         +12*p^5-12*p^3)\
         /(n^3*((n-p)^3+p*(n-p)^2+(p^2+6*p+4)*(n-p)+(p+2)*(p^2+4*p+2)))",
        n,
        p,
    )
}

/// Quadratic cofactor of `(x1 - x3)` in the first scaled Ricci difference,
/// in all four metric variables.
pub fn cofactor_c2(n: &Rational, p: &Rational) -> MPoly {
    mpoly(
        &[
            ([1, 0, 0, 1], "n-p+1"),
            ([0, 0, 1, 1], "n-p+1"),
            ([0, 1, 0, 1], "-2*(n+1)"),
            ([1, 1, 0, 0], "p+1"),
            ([0, 1, 1, 0], "p+1"),
        ],
        n,
        p,
    )
}

/// First cleared cubic of the `x1 = 1` system (from `R1 - R2`), in
/// `x2, x3, x4`.
pub fn case2_cubic_a(n: &Rational, p: &Rational) -> MPoly {
    mpoly(
        &[
            ([0, 2, 0, 1], "-(n+p+1)"),
            ([0, 0, 2, 1], "-(n-3*p+1)"),
            ([0, 0, 0, 1], "n+p+1"),
            ([0, 1, 1, 1], "4*(n+1)"),
            ([0, 0, 1, 1], "-4*(n+1)"),
            ([0, 1, 2, 0], "-(p+1)"),
            ([0, 1, 0, 2], "-(p+1)"),
            ([0, 1, 0, 0], "p+1"),
        ],
        n,
        p,
    )
}

/// Second cleared cubic of the `x1 = 1` system (from `R3 - R4`).
pub fn case2_cubic_b(n: &Rational, p: &Rational) -> MPoly {
    mpoly(
        &[
            ([0, 2, 0, 1], "-(n-p+1)"),
            ([0, 1, 2, 0], "2*n-p+1"),
            ([0, 1, 0, 2], "-(2*n-p+1)"),
            ([0, 1, 0, 0], "2*n-3*p-1"),
            ([0, 0, 2, 1], "n-p+1"),
            ([0, 0, 0, 1], "-(n-p+1)"),
            ([0, 1, 1, 0], "-4*(n+1)"),
            ([0, 1, 0, 1], "4*(n+1)"),
        ],
        n,
        p,
    )
}

/// Solving the quadratic cofactor at `x1 = 1` for `x2`: numerator and
/// denominator in `(x3, x4)`.
pub fn case2_x2_map(n: &Rational, p: &Rational) -> (BiPoly, BiPoly) {
    let numer = bipoly(&[(1, 1, "n-p+1"), (0, 1, "n-p+1")], n, p);
    let denom = bipoly(
        &[(0, 1, "2*(n+1)"), (1, 0, "-(p+1)"), (0, 0, "-(p+1)")],
        n,
        p,
    );
    (numer, denom)
}

/// First reduced case-2 equation after eliminating `x2`, in `(x3, x4)`.
pub fn case2_eq_f1(n: &Rational, p: &Rational) -> BiPoly {
    bipoly(
        &[
            (2, 2, "-(3*n^3+5*n^2*p+9*n^2+2*n*p^2+12*n*p+10*n-2*p^3+6*p+4)"),
            (1, 2, "2*(5*n^3+3*n^2*p+15*n^2-2*n*p^2+4*n*p+14*n+2*p^3+2*p+4)"),
            (0, 2, "-(3*n^3+5*n^2*p+9*n^2+2*n*p^2+12*n*p+10*n-2*p^3+6*p+4)"),
            (3, 1, "2*(n+1)*(p+1)*(n+3*p+1)"),
            (3, 0, "4*(p+1)^2*(n-p+1)"),
            (2, 1, "-2*(n+1)*(p+1)*(5*n-p+5)"),
            (2, 0, "4*(p+1)^2*(2*n-p+2)"),
            (1, 3, "2*(n+1)*(p+1)*(n-p+1)"),
            (1, 1, "-2*(n+1)*(p+1)*(5*n-p+5)"),
            (1, 0, "4*(p+1)^2*(n-p+1)"),
            (0, 3, "2*(n+1)*(p+1)*(n-p+1)"),
            (0, 1, "2*(n+1)*(p+1)*(n+3*p+1)"),
            (4, 0, "-2*p*(p+1)^2"),
            (0, 0, "-2*p*(p+1)^2"),
        ],
        n,
        p,
    )
}

/// Second reduced case-2 equation after eliminating `x2`, in `(x3, x4)`.
pub fn case2_eq_f2(n: &Rational, p: &Rational) -> BiPoly {
    bipoly(
        &[
            (3, 0, "2*(p+1)*(n-p)"),
            (2, 1, "-2*(n+1)*(2*n-3*p-1)"),
            (0, 2, "-(3*n^2+4*n*p+8*n-2*p^2+2*p+4)"),
            (1, 2, "-(3*n^2+4*n*p+8*n-2*p^2+2*p+4)"),
            (2, 0, "-2*(p+1)*(n+p+2)"),
            (1, 1, "4*(n+1)*(2*n+p+3)"),
            (1, 0, "-2*(p+1)*(n+p+2)"),
            (0, 3, "2*(n+1)*(2*n-p+1)"),
            (0, 1, "-2*(n+1)*(2*n-3*p-1)"),
            (0, 0, "2*(p+1)*(n-p)"),
        ],
        n,
        p,
    )
}

/// The palindromic quartic factor of the case-2 resultant, in `x3`, at its
/// display normalization (leading coefficient `n^2 (3n+4)`).
pub fn quartic_q(n: &Rational, p: &Rational) -> UniPoly {
    upoly(
        &[
            "n^2*(3*n+4)",
            "-8*n*(2*n^2+n*p+5*n-p^2+3)",
            "2*(13*n^3+8*n^2*p+36*n^2-8*n*p^2+16*n*p+40*n-16*p^2+16)",
            "-8*n*(2*n^2+n*p+5*n-p^2+3)",
            "n^2*(3*n+4)",
        ],
        n,
        p,
    )
}

/// Closed form for the quartic factor evaluated at 1.
pub fn q_value_at_one(n: &Rational, p: &Rational) -> Rational {
    scalar("32*(p+1)*(n-p+1)", n, p)
}

/// Closed form for the quartic factor evaluated at 1/2.
pub fn q_value_at_half(n: &Rational, p: &Rational) -> Rational {
    scalar(
        "(-5*n^3-16*n^2*p-44*n^2+16*n*p^2+128*n*p+80*n-128*p^2+128)/16",
        n,
        p,
    )
}

/// Constant prefactor of the case-2 resultant: everything in front of the
/// four monic linear factors, `(x3+1)^4`, and the quartic factor.
pub fn resultant_prefactor(n: &Rational, p: &Rational) -> Rational {
    scalar(
        "-16*(n+1)^4*(p+1)^2*(n-p+1)^2*n^2*(3*n-2*p+2)*(n+2*p+2)",
        n,
        p,
    )
}

/// Rational roots of the four linear factors of the case-2 resultant, in
/// source order.
pub fn linear_roots(n: &Rational, p: &Rational) -> [Rational; 4] {
    [
        scalar("(n+2*p+2)/n", n, p),
        scalar("(3*n-2*p+2)/n", n, p),
        scalar("n/(n+2*p+2)", n, p),
        scalar("n/(3*n-2*p+2)", n, p),
    ]
}

/// The corrected bilinear constraint tying `x4` to `x3` on the quartic
/// locus, in `(x3, x4)`. (The source display omits the trailing constant
/// term `+ n`; the corrected polynomial is the one that lies in the ideal.)
pub fn x3_x4_constraint(n: &Rational, p: &Rational) -> BiPoly {
    bipoly(
        &[
            (2, 0, "n"),
            (1, 0, "-2*(n+2*p+2)"),
            (0, 0, "n"),
            (1, 1, "n"),
            (0, 1, "n"),
        ],
        n,
        p,
    )
}

/// `x4` as a rational function of `x3` on the quartic locus.
pub fn x4_from_x3(n: &Rational, p: &Rational) -> RationalMap {
    RationalMap {
        numer: upoly(&["-n", "2*(n+2*p+2)", "-n"], n, p),
        denom: upoly(&["n", "n"], n, p),
    }
}

/// `x2` as a rational function of `x3` on the quartic locus.
pub fn x2_from_x3(n: &Rational, p: &Rational) -> RationalMap {
    let shifted = upoly(&["1", "1"], n, p);
    let core = upoly(&["-n", "2*(n+2*p+2)", "-n"], n, p);
    let numer = (&shifted * &core).scale(&scalar("-n+p-1", n, p));
    RationalMap {
        numer,
        denom: upoly(
            &[
                "n*(2*n+p+3)",
                "-2*(2*n^2+3*n*p+5*n+4*p+4)",
                "n*(2*n+p+3)",
            ],
            n,
            p,
        ),
    }
}

/// The bilinear polynomial whose resultant with the quartic factor gives the
/// `x2` companion quartic: `x2 * denom(x3) - numer(x3)` for [`x2_from_x3`],
/// with `x3` first and `x2` second.
pub fn x2_membership_poly(n: &Rational, p: &Rational) -> BiPoly {
    let map = x2_from_x3(n, p);
    let mut out = BiPoly::zero();
    for (k, c) in map.denom.coeffs().iter().enumerate() {
        out.add_term(k as u32, 1, c.clone());
    }
    for (k, c) in map.numer.coeffs().iter().enumerate() {
        out.add_term(k as u32, 0, -c.clone());
    }
    out
}

/// Companion quartic in `x4` (resultant of the quartic factor and the
/// bilinear constraint, divided by [`s_scalar`]).
pub fn quartic_s(n: &Rational, p: &Rational) -> UniPoly {
    upoly(
        &[
            "n^2*(n+1)*(3*n+4)*(2*n-p+1)",
            "4*n*(n+1)*(2*n-p+1)*(n^2-4*n*p-2*p^2-8*p-2)",
            "2*(n^5-19*n^4*p-11*n^4+36*n^3*p^2-18*n^3*p-30*n^3+22*n^2*p^3\
             +130*n^2*p^2+54*n^2*p-22*n^2-16*n*p^4+4*n*p^3+108*n*p^2+68*n*p-4*n\
             -16*p^4-16*p^3+16*p^2+16*p)",
            "-8*(p+1)*(n-2*p)*(n+p+1)*(n^2-6*n*p-2*n+2*p^2-4*p-2)",
            "8*(p+1)^2*(n-2*p)^2*(n+p+1)",
        ],
        n,
        p,
    )
}

/// Companion quartic in `x2`; equals [`quartic_s`] with `p` replaced by
/// `n - p`.
pub fn quartic_t(n: &Rational, p: &Rational) -> UniPoly {
    upoly(
        &[
            "n^2*(n+1)*(3*n+4)*(n+p+1)",
            "-4*n*(n+1)*(n+p+1)*(5*n^2-8*n*p+8*n+2*p^2-8*p+2)",
            "2*(24*n^5-55*n^4*p+89*n^4+6*n^3*p^2-190*n^3*p+116*n^3+42*n^2*p^3\
             +46*n^2*p^2-222*n^2*p+62*n^2-16*n*p^4+60*n*p^3+60*n*p^2-100*n*p+12*n\
             -16*p^4+16*p^3+16*p^2-16*p)",
            "-8*(n-2*p)*(n-p+1)*(2*n-p+1)*(3*n^2-2*n*p+6*n-2*p^2-4*p+2)",
            "8*(n-2*p)^2*(n-p+1)^2*(2*n-p+1)",
        ],
        n,
        p,
    )
}

/// Scalar relating the raw resultant to [`quartic_s`].
pub fn s_scalar(n: &Rational, p: &Rational) -> Rational {
    scalar("32*n^4*(n+p+1)", n, p)
}

/// Scalar relating the raw resultant to [`quartic_t`].
pub fn t_scalar(n: &Rational, p: &Rational) -> Rational {
    scalar("1024*n^4*(n+1)*(p+1)^2*(n-p+1)^2*(n+p+1)^3", n, p)
}

/// Transcribed point values of [`quartic_s`]: pairs `(point, value)`.
pub fn s_special_values(n: &Rational, p: &Rational) -> Vec<(Rational, Rational)> {
    let pair = |pt: &str, val: &str| (scalar(pt, n, p), scalar(val, n, p));
    vec![
        pair("0", "8*(p+1)^2*(n-2*p)^2*(n+p+1)"),
        pair(
            "2*(p+1)/n",
            "-16*(p+1)^2*(n-p+1)^2*(n*(p-1)+4*p^2+4*p)/(n^2)",
        ),
        pair(
            "2*(2*p-n)/n",
            "8*(n-2*p)^2*(n-p+1)^2*(5*n^2-9*n*p+3*n+4*p^2-4*p)/n",
        ),
        pair(
            "(2*p-n)/n",
            "-(n-2*p)^2*(5*n^4*p+9*n^4-4*n^3*p^2+3*n^3*p+33*n^3+4*n^2*p^2\
             -20*n^2*p+40*n^2-20*n*p^3+4*n*p^2-32*n*p+16*n+16*p^4-16*p)/(n^2)",
        ),
    ]
}

/// Reduced system at one rational `x3` specialization: the two specialized
/// equations factor as `alpha * common * reduced_a` and
/// `beta * common * reduced_b`.
#[derive(Clone, Debug)]
pub struct SubCase {
    pub x3: Rational,
    pub alpha: Rational,
    pub beta: Rational,
    pub common: UniPoly,
    pub reduced_a: UniPoly,
    pub reduced_b: UniPoly,
    pub quoted_resultant: Rational,
    /// Root of the common factor: the `x4` value of the solution at this
    /// specialization.
    pub kahler_x4: Rational,
}

/// The four rational `x3` specializations with their transcribed reduced
/// systems and quoted resultant scalars.
pub fn sub_cases(n: &Rational, p: &Rational) -> [SubCase; 4] {
    let sc = |x3: &str,
              alpha: &str,
              beta: &str,
              common: &[&str],
              a: UniPoly,
              b: UniPoly,
              quoted: &str,
              kx4: &str| SubCase {
        x3: scalar(x3, n, p),
        alpha: scalar(alpha, n, p),
        beta: scalar(beta, n, p),
        common: upoly(common, n, p),
        reduced_a: a,
        reduced_b: b,
        quoted_resultant: scalar(quoted, n, p),
        kahler_x4: scalar(kx4, n, p),
    };
    let u = |coeffs: &[&str]| upoly(coeffs, n, p);
    [
        sc(
            "(n+2*p+2)/n",
            "4*(n+p+1)/(n^4)",
            "2/(n^3)",
            &["n", "-(2*p+2)"],
            &u(&["-n*(n-p+1)", "2*(p+1)*(n+p+1)"])
                * &u(&["-n*(n+1)*(p+1)", "(-n-p-1)*(n^2+2*n-2*p^2-2*p)"]),
            u(&[
                "n^2*(n+1)*(2*n-p+1)",
                "-n*(3*n^3+3*n^2*p+7*n^2+4*n*p^2+10*n*p+6*n-2*p^3+2*p^2+6*p+2)",
                "2*(p+1)*(n+p+1)*(n^2+2*p^2+2*p)",
            ]),
            "-8*n^6*(n+1)^3*(p+1)*(n-2*p)*(n-p+1)*(n+p+1)^4*(n^2+2*n*p+4*n-2*p^2+2)",
            "2*(p+1)/n",
        ),
        sc(
            "(3*n-2*p+2)/n",
            "4*(p+1)*(n-p+1)/(n^4)",
            "2*(2*n-p+1)/(n^3)",
            &["n", "-(4*n-2*p+2)"],
            u(&[
                "n^2*(n+1)*(2*n-p+1)",
                "n*(4*n^3-11*n^2*p+n^2+10*n*p^2-10*n*p-4*n-2*p^3+6*p^2-2*p-2)",
                "-2*(p+1)*(2*n-p+1)*(3*n^2-4*n*p+2*n+2*p^2-2*p)",
            ]),
            &u(&["n", "-(2*p+2)"]) * &u(&["n*(n+1)", "n^2-4*n*p+2*p^2-2*p"]),
            "8*n^6*(n+1)^3*(p+1)*(n-2*p)*(n-p+1)*(n^2+2*n*p+4*n-2*p^2+2)",
            "2*(2*n-p+1)/n",
        ),
        sc(
            "n/(n+2*p+2)",
            "4*(n+p+1)/((n+2*p+2)^4)",
            "2/((n+2*p+2)^3)",
            &["n+2*p+2", "-(2*p+2)"],
            &u(&["-(n-p+1)*(n+2*p+2)", "2*(p+1)*(n+p+1)"])
                * &u(&[
                    "-(n+1)*(p+1)*(n+2*p+2)",
                    "-n^3-n^2*p-3*n^2+2*n*p^2-2*n+2*p^3+4*p^2+2*p",
                ]),
            u(&[
                "(n+1)*(2*n-p+1)*(n+2*p+2)^2",
                "-(n+2*p+2)*(3*n^3+3*n^2*p+7*n^2+4*n*p^2+10*n*p+6*n-2*p^3+2*p^2+6*p+2)",
                "2*(p+1)*(n+p+1)*(n^2+2*p^2+2*p)",
            ]),
            "-8*n^2*(n+1)^3*(p+1)*(n-2*p)*(n-p+1)*(n+p+1)^4*(n+2*p+2)^4*(n^2+2*n*p+4*n-2*p^2+2)",
            "2*(p+1)/(n+2*p+2)",
        ),
        sc(
            "n/(3*n-2*p+2)",
            "4*(p+1)*(n-p+1)/((3*n-2*p+2)^4)",
            "2*(2*n-p+1)/((3*n-2*p+2)^3)",
            &["3*n-2*p+2", "-(4*n-2*p+2)"],
            u(&[
                "(n+1)*(3*n-2*p+2)^2*(2*n-p+1)",
                "(3*n-2*p+2)*(4*n^3-11*n^2*p+n^2+10*n*p^2-10*n*p-4*n-2*p^3+6*p^2-2*p-2)",
                "-2*(p+1)*(2*n-p+1)*(3*n^2-4*n*p+2*n+2*p^2-2*p)",
            ]),
            &u(&["3*n-2*p+2", "-(2*p+2)"])
                * &u(&["(n+1)*(3*n-2*p+2)", "n^2-4*n*p+2*p^2-2*p"]),
            "8*n^2*(n+1)^3*(p+1)*(n-2*p)*(3*n-2*p+2)^4*(n-p+1)*(n^2+2*n*p+4*n-2*p^2+2)",
            "2*(2*n-p+1)/(3*n-2*p+2)",
        ),
    ]
}
