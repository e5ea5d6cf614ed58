//! Exact polynomial and rational-function arithmetic.
//!
//! Polynomials are stored densely with the *leading* coefficient first, so
//! `coeffs[i]` is the coefficient `a_i` of `z^(n-i)` in
//! `p(z) = a_0 z^n + a_1 z^(n-1) + ... + a_n`. This matches the indexing used
//! by every determinant formula in the crate and avoids off-by-one drift.
//!
//! Besides ring arithmetic the module provides the even/odd split
//! `p(z) = p0(z^2) + z p1(z^2)`, the associated function `Phi = p1/p0`, the
//! reflection `p(-z)`, exact gcds and Laurent expansions at infinity.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational, Q};

/// Dense real polynomial with exact rational coefficients, leading first.
///
/// The zero polynomial has no coefficients and no degree.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Q>,
}

impl Polynomial {
    /// Builds a polynomial from leading-first coefficients, stripping leading
    /// zeros.
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        let lead = coeffs.iter().position(|c| !c.is_zero());
        match lead {
            None => coeffs.clear(),
            Some(k) => {
                coeffs.drain(..k);
            }
        }
        Polynomial { coeffs }
    }

    /// Builds a polynomial from leading-first integer coefficients.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Q::from_integer(c.into())).collect())
    }

    /// Builds the monic polynomial with the given roots.
    pub fn from_roots(roots: &[Q]) -> Self {
        roots.iter().fold(Self::one(), |acc, r| {
            &acc * &Self::new(vec![Q::one(), -r.clone()])
        })
    }

    /// The zero polynomial.
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    /// The constant polynomial `1`.
    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    /// A constant polynomial.
    pub fn constant(c: Q) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c z^k`.
    pub fn monomial(c: Q, k: usize) -> Self {
        let mut v = vec![Q::zero(); k + 1];
        v[0] = c;
        Self::new(v)
    }

    /// Parses the comma-separated descending coefficient format, e.g.
    /// `"1,4,1,-6"` or `"1/2,0,-3"`.
    pub fn parse(text: &str) -> Result<Self> {
        let coeffs = text
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs))
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree, treating the zero polynomial as degree 0.
    ///
    /// Only meant for callers that have already excluded the zero polynomial.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    /// Leading-first coefficient slice `a_0 ... a_n`.
    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    /// The coefficient `a_i` (of `z^(n-i)`), zero outside `0..=n`.
    pub fn a(&self, i: isize) -> Q {
        if i < 0 {
            return Q::zero();
        }
        self.coeffs.get(i as usize).cloned().unwrap_or_else(Q::zero)
    }

    /// Coefficient of `z^k`.
    pub fn coeff_of_power(&self, k: usize) -> Q {
        match self.degree() {
            Some(n) if k <= n => self.coeffs[n - k].clone(),
            _ => Q::zero(),
        }
    }

    /// Leading coefficient (zero for the zero polynomial).
    pub fn leading(&self) -> Q {
        self.coeffs.first().cloned().unwrap_or_else(Q::zero)
    }

    /// Constant term `p(0)`.
    pub fn constant_term(&self) -> Q {
        self.coeffs.last().cloned().unwrap_or_else(Q::zero)
    }

    /// Builds a polynomial from coefficients indexed by power (`v[k]` is the
    /// coefficient of `z^k`).
    pub fn from_ascending(mut v: Vec<Q>) -> Self {
        v.reverse();
        Self::new(v)
    }

    /// Coefficients indexed by power.
    pub fn ascending(&self) -> Vec<Q> {
        self.coeffs.iter().rev().cloned().collect()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Q) -> Q {
        self.coeffs.iter().fold(Q::zero(), |acc, c| acc * x + c)
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &Q) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        let n = match self.degree() {
            None | Some(0) => return Self::zero(),
            Some(n) => n,
        };
        Self::new(
            self.coeffs[..n]
                .iter()
                .enumerate()
                .map(|(i, c)| c * Q::from_integer(((n - i) as i64).into()))
                .collect(),
        )
    }

    /// The `j`-th derivative.
    pub fn nth_derivative(&self, j: usize) -> Self {
        (0..j).fold(self.clone(), |p, _| p.derivative())
    }

    /// Divides by the leading coefficient (zero stays zero).
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let inv = self.leading().recip();
        self.scale(&inv)
    }

    /// Euclidean division: returns `(quotient, remainder)`.
    ///
    /// # Panics
    /// Panics when dividing by the zero polynomial.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading();
        let mut rem: Vec<Q> = self.ascending();
        let n = match self.degree() {
            Some(n) if n >= dd => n,
            _ => return (Self::zero(), self.clone()),
        };
        let dv = divisor.ascending();
        let mut quot = vec![Q::zero(); n - dd + 1];
        for k in (0..=n - dd).rev() {
            let c = &rem[k + dd] / &lead;
            if !c.is_zero() {
                for (i, d) in dv.iter().enumerate() {
                    rem[k + i] -= &c * d;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::from_ascending(quot), Self::from_ascending(rem))
    }

    /// Exact division; `None` when the remainder is nonzero.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    /// `p(-z)`.
    pub fn reflect(&self) -> Self {
        reflect(self)
    }

    /// Substitutes `z -> z^2`, i.e. returns `p(z^2)`.
    pub fn compose_square(&self) -> Self {
        let asc = self.ascending();
        let mut out = vec![Q::zero(); asc.len() * 2];
        for (k, c) in asc.into_iter().enumerate() {
            out[2 * k] = c;
        }
        Self::from_ascending(out)
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = self.coeffs.clone();
        v.extend(std::iter::repeat_n(Q::zero(), k));
        Self::new(v)
    }

    /// Multiplicity of `0` as a root (`0` for nonzero constant term).
    pub fn zero_root_multiplicity(&self) -> usize {
        self.coeffs.iter().rev().take_while(|c| c.is_zero()).count()
    }

    /// Returns the polynomial with the sign flipped when the leading
    /// coefficient is negative, together with a flag telling whether it was
    /// flipped.
    pub fn normalized_positive(&self) -> (Self, bool) {
        if self.leading().is_negative() {
            (-self, true)
        } else {
            (self.clone(), false)
        }
    }
}

impl fmt::Display for Polynomial {
    /// Comma-separated descending coefficients; the zero polynomial is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{self}]")
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        v.serialize(s)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (a, b) = (self.ascending(), rhs.ascending());
        let len = a.len().max(b.len());
        let v = (0..len)
            .map(|k| {
                a.get(k).cloned().unwrap_or_else(Q::zero)
                    + b.get(k).cloned().unwrap_or_else(Q::zero)
            })
            .collect();
        Polynomial::from_ascending(v)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut v = vec![Q::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Polynomial::new(v)
    }
}

/// The even/odd decomposition `p(z) = p0(z^2) + z p1(z^2)`; `p0` and `p1` are
/// polynomials in `u = z^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenOddSplit {
    /// Even part in `u`.
    pub p0: Polynomial,
    /// Odd part in `u`.
    pub p1: Polynomial,
}

impl EvenOddSplit {
    /// Reassembles `p0(z^2) + z p1(z^2)`.
    pub fn recombine(&self) -> Polynomial {
        &self.p0.compose_square() + &self.p1.compose_square().shift(1)
    }
}

/// Splits `p` into its even and odd parts.
///
/// For `n = 2l`: `p0 = a0 u^l + a2 u^(l-1) + ... + an` and
/// `p1 = a1 u^(l-1) + ... + a(n-1)`. For `n = 2l+1`:
/// `p0 = a1 u^l + a3 u^(l-1) + ... + an` and `p1 = a0 u^l + ... + a(n-1)`.
pub fn even_odd_split(p: &Polynomial) -> Result<EvenOddSplit> {
    if p.is_zero() {
        return Err(Error::InvalidInput(
            "the zero polynomial has no even/odd split".into(),
        ));
    }
    let asc = p.ascending();
    let mut even = Vec::new();
    let mut odd = Vec::new();
    for (k, c) in asc.into_iter().enumerate() {
        if k % 2 == 0 {
            even.push(c);
        } else {
            odd.push(c);
        }
    }
    Ok(EvenOddSplit {
        p0: Polynomial::from_ascending(even),
        p1: Polynomial::from_ascending(odd),
    })
}

/// The associated function `Phi = p1 / p0` (unreduced).
pub fn associated_function(p: &Polynomial) -> Result<RationalFunction> {
    let split = even_odd_split(p)?;
    if split.p0.is_zero() {
        return Err(Error::DegenerateSplit);
    }
    RationalFunction::new(split.p1, split.p0)
}

/// `p(-z)`: the coefficient `a_j` is negated exactly when `n - j` is odd.
pub fn reflect(p: &Polynomial) -> Polynomial {
    let n = match p.degree() {
        None => return Polynomial::zero(),
        Some(n) => n,
    };
    Polynomial::new(
        p.coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| if (n - j) % 2 == 1 { -c } else { c.clone() })
            .collect(),
    )
}

/// Monic greatest common divisor. `gcd(0, 0)` is the zero polynomial.
pub fn poly_gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_zero() {
        let (_, r) = x.div_rem(&y);
        // Keep intermediate coefficients small.
        x = y;
        y = r.monic();
    }
    x.monic()
}

/// A quotient of two polynomials with a nonzero denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    /// Numerator.
    pub num: Polynomial,
    /// Denominator (never the zero polynomial).
    pub den: Polynomial,
}

impl RationalFunction {
    /// Builds `num / den`; rejects a zero denominator.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidInput("zero denominator".into()));
        }
        Ok(RationalFunction { num, den })
    }

    /// Divides out the gcd and makes the denominator monic. The result is
    /// the unique reduced representative.
    pub fn reduced(&self) -> Self {
        if self.num.is_zero() {
            return RationalFunction {
                num: Polynomial::zero(),
                den: Polynomial::one(),
            };
        }
        let g = poly_gcd(&self.num, &self.den);
        let num = self.num.exact_div(&g).expect("gcd divides numerator");
        let den = self.den.exact_div(&g).expect("gcd divides denominator");
        let lead = den.leading().recip();
        RationalFunction {
            num: num.scale(&lead),
            den: den.scale(&lead),
        }
    }

    /// Number of poles, i.e. the degree of the reduced denominator.
    pub fn pole_count(&self) -> usize {
        self.reduced().den.deg()
    }

    /// Exact equality as functions (cross-multiplication).
    pub fn same_function(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    /// Adds the polynomial `c` to the function.
    pub fn add_polynomial(&self, c: &Polynomial) -> Self {
        RationalFunction {
            num: &self.num + &(c * &self.den),
            den: self.den.clone(),
        }
    }

    /// The reciprocal `den / num`; fails if the numerator vanishes.
    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }
}

/// Laurent coefficients at infinity:
/// `R(u) = s_{-2} u + s_{-1} + s_0/u + s_1/u^2 + ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentSeries {
    /// Coefficient of `u`.
    pub s_minus2: Q,
    /// Constant term.
    pub s_minus1: Q,
    /// `s_0, s_1, ...` (coefficients of `1/u, 1/u^2, ...`).
    pub s: Vec<Q>,
}

impl LaurentSeries {
    /// Checks `den * truncated_series - num` vanishes in every coefficient
    /// the truncation controls (powers `u^(deg den - 1)` down to
    /// `u^(deg den - len(s))`).
    pub fn recomposes(&self, r: &RationalFunction) -> bool {
        let d = r.den.deg();
        // Work in w = 1/u: den(u) = u^d D(w), num(u) = u^(d+1) N(w) and the
        // series is u * T(w) with T = [s_-2, s_-1, s_0, ...].
        let dw = r.den.coeffs();
        let mut nw: Vec<Q> = vec![Q::zero(); d + 2];
        if let Some(nn) = r.num.degree() {
            if nn > d + 1 {
                return false;
            }
            for (i, c) in r.num.coeffs().iter().enumerate() {
                nw[d + 1 - nn + i] = c.clone();
            }
        }
        let mut t = vec![self.s_minus2.clone(), self.s_minus1.clone()];
        t.extend(self.s.iter().cloned());
        (0..t.len()).all(|k| {
            let mut acc = Q::zero();
            for (i, di) in dw.iter().enumerate().take(k + 1) {
                acc += di * &t[k - i];
            }
            let target = nw.get(k).cloned().unwrap_or_else(Q::zero);
            acc == target
        })
    }
}

/// Exact long division of `R` at infinity, returning `s_{-2}, s_{-1}` and
/// `2 * pairs` further coefficients `s_0 ... s_{2 pairs - 1}`.
pub fn laurent_expand(r: &RationalFunction, pairs: usize) -> Result<LaurentSeries> {
    let d = r.den.deg();
    if let Some(nn) = r.num.degree() {
        if nn > d + 1 {
            return Err(Error::UnsupportedGrowth { num: nn, den: d });
        }
    }
    let dw = r.den.coeffs();
    let mut nw: Vec<Q> = vec![Q::zero(); d + 2];
    if let Some(nn) = r.num.degree() {
        for (i, c) in r.num.coeffs().iter().enumerate() {
            nw[d + 1 - nn + i] = c.clone();
        }
    }
    let total = 2 + 2 * pairs;
    let inv_lead = dw[0].recip();
    let mut t: Vec<Q> = Vec::with_capacity(total);
    for k in 0..total {
        let mut acc = nw.get(k).cloned().unwrap_or_else(Q::zero);
        for i in 1..=k.min(d) {
            acc -= &dw[i] * &t[k - i];
        }
        t.push(acc * &inv_lead);
    }
    let mut it = t.into_iter();
    let s_minus2 = it.next().unwrap_or_else(Q::zero);
    let s_minus1 = it.next().unwrap_or_else(Q::zero);
    Ok(LaurentSeries {
        s_minus2,
        s_minus1,
        s: it.collect(),
    })
}
