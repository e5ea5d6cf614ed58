//! Stieltjes continued fractions
//! `R(u) = c0 + 1/(c1 u + 1/(c2 + 1/(c3 u + ... + 1/T)))`.
//!
//! Coefficients come from Hankel minors:
//! `c_{2j-1} = D̂_{j-1}^2 / (D_{j-1} D_j)` and `c_{2j} = -D_j^2 / (D̂_{j-1} D̂_j)`.
//! The fraction ends in `T = c_{2r}` unless the function has a pole at the
//! origin (`D̂_r = 0`), in which case it ends in `T = c_{2r-1} u`.

use num::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::minors::{hankel_minors, hurwitz_minors};
use crate::polyalg::{associated_function, laurent_expand, Polynomial, RationalFunction};
use crate::rational::Q;

/// How the continued fraction terminates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Tail {
    /// Last term is the constant `c_{2r}` (no pole at the origin).
    Even,
    /// Last term is `c_{2r-1} u` (pole at the origin).
    Odd,
}

/// A Stieltjes continued fraction with `r` poles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StieltjesCF {
    /// Value at infinity `c0`.
    #[serde(serialize_with = "crate::serde_util::rational")]
    pub c0: Q,
    /// `c_1 ... c_K`, all nonzero; `K = 2r` (even tail) or `2r - 1` (odd tail).
    #[serde(serialize_with = "crate::serde_util::rationals")]
    pub c: Vec<Q>,
    /// Terminal form.
    pub tail: Tail,
    /// Number of poles.
    #[serde(skip)]
    pub r: usize,
}

impl StieltjesCF {
    /// `c_i` for `i >= 0`.
    pub fn coeff(&self, i: usize) -> &Q {
        if i == 0 {
            &self.c0
        } else {
            &self.c[i - 1]
        }
    }

    /// Number of negative even-index coefficients `c_{2j}` with `j` in
    /// `from..=to` (indices beyond the fraction are ignored).
    pub fn negative_even_count(&self, from: usize, to: usize) -> usize {
        (from..=to)
            .filter(|&j| 2 * j <= self.c.len())
            .filter(|&j| self.coeff(2 * j).is_negative())
            .count()
    }
}

/// Continued fraction with an extra linear term,
/// `R(u) = -c_{-1} u + c0 + 1/(c1 u + ...)`, used for odd-degree
/// polynomials with `a_1 = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtendedCF {
    /// Coefficient `c_{-1}` of the linear term `-c_{-1} u`.
    #[serde(serialize_with = "crate::serde_util::rational")]
    pub c_minus1: Q,
    /// Fraction of the remainder `R + c_{-1} u`.
    pub inner: StieltjesCF,
}

/// Continued fraction of the associated function of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum PolynomialCF {
    /// `Phi` is finite at infinity.
    Plain(StieltjesCF),
    /// `Phi` grows linearly at infinity.
    Extended(ExtendedCF),
}

/// Expands a function that is finite at infinity into its Stieltjes
/// continued fraction.
pub fn stieltjes_expand(r: &RationalFunction) -> Result<StieltjesCF> {
    let red = r.reduced();
    if let Some(dn) = red.num.degree() {
        if dn > red.den.deg() {
            return Err(Error::InvalidInput(
                "function is not finite at infinity; use the extended expansion".into(),
            ));
        }
    }
    let poles = red.den.deg();
    let series = laurent_expand(&red, poles)?;
    let m = hankel_minors(&series, poles)?;
    let pole_at_zero = poles > 0 && red.den.constant_term().is_zero();
    debug_assert_eq!(pole_at_zero, poles > 0 && m.dhat(poles).is_zero());
    let mut c = Vec::with_capacity(2 * poles);
    let name = |s: &str, j: usize| Error::NoContinuedFraction {
        minor: format!("{s}_{j}"),
    };
    for j in 1..=poles {
        for k in [j - 1, j] {
            if m.d(k).is_zero() {
                return Err(name("D", k));
            }
        }
        if m.dhat(j - 1).is_zero() {
            return Err(name("D̂", j - 1));
        }
        c.push(m.dhat(j - 1) * m.dhat(j - 1) / (m.d(j - 1) * m.d(j)));
        if j == poles && pole_at_zero {
            break;
        }
        if m.dhat(j).is_zero() {
            return Err(name("D̂", j));
        }
        c.push(-(m.d(j) * m.d(j)) / (m.dhat(j - 1) * m.dhat(j)));
    }
    Ok(StieltjesCF {
        c0: series.s_minus1,
        c,
        tail: if pole_at_zero { Tail::Odd } else { Tail::Even },
        r: poles,
    })
}

/// Expands a function with a linear term at infinity: extracts
/// `c_{-1} = -s_{-2}` and expands the remainder.
pub fn stieltjes_expand_extended(r: &RationalFunction) -> Result<ExtendedCF> {
    let red = r.reduced();
    let series = laurent_expand(&red, 0)?;
    let lin = Polynomial::monomial(-series.s_minus2.clone(), 1);
    let inner = stieltjes_expand(&red.add_polynomial(&lin))?;
    Ok(ExtendedCF {
        c_minus1: -series.s_minus2,
        inner,
    })
}

/// Continued fraction of `Phi = p1/p0`, choosing the extended form when
/// `Phi` grows at infinity (odd degree with `a_1 = 0`).
pub fn polynomial_cf(p: &Polynomial) -> Result<PolynomialCF> {
    let phi = associated_function(p)?.reduced();
    let grows = phi.num.degree().is_some_and(|dn| dn > phi.den.deg());
    if grows {
        Ok(PolynomialCF::Extended(stieltjes_expand_extended(&phi)?))
    } else {
        Ok(PolynomialCF::Plain(stieltjes_expand(&phi)?))
    }
}

/// Continued fraction of `Phi` written through Hurwitz determinants:
/// for `n = 2l`, `c_i = Δ_{i-1}^2 / (Δ_{i-2} Δ_i)`, `i = 1..n`; for
/// `n = 2l+1`, `c_i = Δ_i^2 / (Δ_{i-1} Δ_{i+1})`, `i = 0..n-1`; with
/// `Δ_{-1} = 1/a_0` and `Δ_0 = 1`. A vanishing `Δ_n` (root at the origin)
/// shortens the fraction to an odd tail.
pub fn cf_from_hurwitz_minors(p: &Polynomial) -> Result<StieltjesCF> {
    let (p, _) = p.normalized_positive();
    let hm = hurwitz_minors(&p)?;
    let n = hm.degree as isize;
    let d = |j: isize| hm.delta(j);
    let no_cf = |j: isize| Error::NoContinuedFraction {
        minor: format!("Δ_{j}"),
    };
    let odd_degree = n % 2 == 1;
    // Coefficient c_i expressed through three consecutive Δ's.
    let (shift, c0) = if odd_degree {
        if d(1).is_zero() {
            return Err(no_cf(1));
        }
        (0, d(0) * d(0) / (d(-1) * d(1)))
    } else {
        (1, Q::zero())
    };
    let last = if odd_degree { n - 1 } else { n };
    let tail = if n > 0 && d(n).is_zero() {
        Tail::Odd
    } else {
        Tail::Even
    };
    let last = if tail == Tail::Odd { last - 1 } else { last };
    let mut c = Vec::new();
    for i in 1..=last {
        let (lo, mid, hi) = (i - shift - 1, i - shift, i - shift + 1);
        for j in [lo, mid, hi] {
            if d(j).is_zero() {
                return Err(no_cf(j));
            }
        }
        c.push(d(mid) * d(mid) / (d(lo) * d(hi)));
    }
    Ok(StieltjesCF {
        c0,
        r: c.len().div_ceil(2),
        c,
        tail,
    })
}

/// Folds a continued fraction back into a reduced rational function.
pub fn cf_reconstruct(cf: &StieltjesCF) -> RationalFunction {
    let term = |i: usize| -> Polynomial {
        let c = cf.coeff(i).clone();
        if i % 2 == 1 {
            Polynomial::monomial(c, 1)
        } else {
            Polynomial::constant(c)
        }
    };
    let c0 = Polynomial::constant(cf.c0.clone());
    if cf.c.is_empty() {
        return RationalFunction::new(c0, Polynomial::one())
            .expect("unit denominator")
            .reduced();
    }
    // t = num/den is the value of the fraction from index i downwards.
    let k = cf.c.len();
    let (mut num, mut den) = (term(k), Polynomial::one());
    for i in (1..k).rev() {
        // term(i) + 1/t = (term(i) * num + den) / num
        let new_num = &(&term(i) * &num) + &den;
        den = num;
        num = new_num;
    }
    // c0 + 1/t = (c0 * num + den) / num
    RationalFunction::new(&(&c0 * &num) + &den, num)
        .expect("nonzero continued-fraction denominator")
        .reduced()
}

/// Folds an extended fraction back into a rational function.
pub fn extended_reconstruct(cf: &ExtendedCF) -> RationalFunction {
    let inner = cf_reconstruct(&cf.inner);
    inner
        .add_polynomial(&Polynomial::monomial(-cf.c_minus1.clone(), 1))
        .reduced()
}

/// Pole information read off the coefficients: the number of negative
/// poles equals the number of positive `c_{2j}` (`j >= 1`), and the function
/// is an R-function exactly when every `c_{2j-1}` is positive.
pub fn pole_sign_summary(cf: &StieltjesCF) -> (usize, bool) {
    let negative = (1..=cf.c.len() / 2)
        .filter(|&j| cf.coeff(2 * j).is_positive())
        .count();
    let r_function = (1..=cf.c.len().div_ceil(2)).all(|j| cf.coeff(2 * j - 1).is_positive());
    (negative, r_function)
}
