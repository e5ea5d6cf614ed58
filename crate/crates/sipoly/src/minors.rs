//! Determinant machinery: Hankel minors of Laurent series, Hurwitz minors of
//! polynomials, Hurwitz-type minors of polynomial pairs, sign-change counters
//! and total-nonnegativity scans.

use num::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{Combinations, ExactMatrix};
use crate::polyalg::{LaurentSeries, Polynomial};
use crate::rational::{sign, Q};

/// Hankel minors `D_1..D_r` and `D̂_1..D̂_r` of a Laurent series.
///
/// `D_j = det[s_{i+k}]` and `D̂_j = det[s_{i+k+1}]` for `0 <= i, k < j`;
/// by convention `D_0 = D̂_0 = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HankelMinors {
    /// `D_1 ... D_r`.
    pub d: Vec<Q>,
    /// `D̂_1 ... D̂_r`.
    pub dhat: Vec<Q>,
    /// Requested order.
    pub r: usize,
}

impl HankelMinors {
    /// `D_j` with `D_0 = 1`.
    pub fn d(&self, j: usize) -> Q {
        if j == 0 {
            Q::one()
        } else {
            self.d[j - 1].clone()
        }
    }

    /// `D̂_j` with `D̂_0 = 1`.
    pub fn dhat(&self, j: usize) -> Q {
        if j == 0 {
            Q::one()
        } else {
            self.dhat[j - 1].clone()
        }
    }
}

/// Computes `D_j`, `D̂_j` for `j = 1..=r` by fraction-free elimination.
pub fn hankel_minors(series: &LaurentSeries, r: usize) -> Result<HankelMinors> {
    if series.s.len() < 2 * r {
        return Err(Error::Length {
            needed: 2 * r,
            got: series.s.len(),
        });
    }
    let s = &series.s;
    let h = ExactMatrix::from_fn(r, r, |i, k| s[i + k].clone());
    let hh = ExactMatrix::from_fn(r, r, |i, k| s[i + k + 1].clone());
    Ok(HankelMinors {
        d: h.leading_principal_minors(r),
        dhat: hh.leading_principal_minors(r),
        r,
    })
}

/// Hurwitz determinants `Δ_1..Δ_n` and the minors `η_1..η_{n+1}` of the
/// infinite Hurwitz matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HurwitzMinors {
    /// `Δ_1 ... Δ_n`.
    #[serde(serialize_with = "crate::serde_util::rationals")]
    pub delta: Vec<Q>,
    /// `η_1 ... η_{n+1}` (all later `η_j` vanish).
    #[serde(serialize_with = "crate::serde_util::rationals")]
    pub eta: Vec<Q>,
    /// Degree of the source polynomial.
    pub degree: usize,
    /// Leading coefficient `a_0` of the source polynomial.
    #[serde(skip)]
    pub a0: Q,
}

impl HurwitzMinors {
    /// `Δ_j` for `j >= -1` with `Δ_{-1} = 1/a_0`, `Δ_0 = 1` and `Δ_j = 0`
    /// for `j > n`.
    pub fn delta(&self, j: isize) -> Q {
        match j {
            j if j < -1 => panic!("Δ_{j} is undefined"),
            -1 => self.a0.recip(),
            0 => Q::one(),
            j => self
                .delta
                .get(j as usize - 1)
                .cloned()
                .unwrap_or_else(Q::zero),
        }
    }
}

/// The finite Hurwitz matrix `𝓗_n(p)`: entry `(i, j)` (1-based) is
/// `a_{2j-i}`, i.e. rows `(a1, a3, ...)`, `(a0, a2, ...)`, then both rows
/// shifted one column right, and so on.
pub fn hurwitz_matrix(p: &Polynomial) -> ExactMatrix {
    let n = p.deg();
    ExactMatrix::from_fn(n, n, |i, j| p.a(2 * (j as isize + 1) - (i as isize + 1)))
}

/// The leading `size x size` block of the infinite Hurwitz matrix
/// `H_∞(p)`: rows `(a0, a2, a4, ...)`, `(0, a1, a3, ...)`, `(0, a0, a2, ...)`…
pub fn infinite_hurwitz_block(p: &Polynomial, size: usize) -> ExactMatrix {
    ExactMatrix::from_fn(size, size, |i, j| {
        p.a(2 * (j as isize + 1) - (i as isize + 1) - 1)
    })
}

/// Computes `Δ_1..Δ_n` and `η_1..η_{n+1}`; the identity `η_j = a0 Δ_{j-1}`
/// is checked in debug builds.
pub fn hurwitz_minors(p: &Polynomial) -> Result<HurwitzMinors> {
    let n = p
        .degree()
        .ok_or_else(|| Error::InvalidInput("the zero polynomial has no Hurwitz minors".into()))?;
    let delta = hurwitz_matrix(p).leading_principal_minors(n);
    let eta = infinite_hurwitz_block(p, n + 1).leading_principal_minors(n + 1);
    let a0 = p.leading();
    debug_assert!(eta.iter().enumerate().all(|(j, e)| *e
        == &a0
            * if j == 0 {
                Q::one()
            } else {
                delta[j - 1].clone()
            }));
    Ok(HurwitzMinors {
        delta,
        eta,
        degree: n,
        a0,
    })
}

/// Which finite Hurwitz-type matrix a pair `(p, q)` uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PairLayout {
    /// `deg q < deg p`: the `2n x 2n` matrix with rows
    /// `(b1 ... bn)`, `(a0 ... an)`, shifted pairs below.
    Even,
    /// `deg q = deg p`: the `(2n+1) x (2n+1)` matrix with rows
    /// `(a0 ... an)`, `(b0 ... bn)`, shifted pairs below.
    Odd,
}

/// Leading principal minors `∇_1..∇_K` of the finite Hurwitz-type matrix of
/// a polynomial pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NablaMinors {
    /// `∇_1 ... ∇_K`.
    pub nabla: Vec<Q>,
    /// Layout that produced them.
    pub layout: PairLayout,
}

impl NablaMinors {
    /// `∇_i` (1-based).
    pub fn get(&self, i: usize) -> Q {
        self.nabla[i - 1].clone()
    }
}

/// Builds the finite Hurwitz-type matrix of `(p, q)` in the given layout.
///
/// `q` is read with the same degree-`n` indexing as `p`: `b_i` is the
/// coefficient of `z^(n-i)`, so `b_0` may vanish.
pub fn hurwitz_pair_matrix(p: &Polynomial, q: &Polynomial, layout: PairLayout) -> ExactMatrix {
    let n = p.deg();
    let a = |i: isize| p.a(i);
    let b = |i: isize| {
        if i < 0 || i as usize > n {
            Q::zero()
        } else {
            q.coeff_of_power(n - i as usize)
        }
    };
    match layout {
        PairLayout::Even => ExactMatrix::from_fn(2 * n, 2 * n, |r, c| {
            let (i, j) = (r as isize / 2 + 1, c as isize + 1);
            if r % 2 == 0 {
                b(j - i + 1)
            } else {
                a(j - i)
            }
        }),
        PairLayout::Odd => ExactMatrix::from_fn(2 * n + 1, 2 * n + 1, |r, c| {
            let (i, j) = (r as isize / 2 + 1, c as isize + 1);
            if r % 2 == 0 {
                a(j - i)
            } else {
                b(j - i)
            }
        }),
    }
}

/// `∇` minors of `(p, q)`, choosing the layout by the degree case:
/// `𝓗_{2n}` when `deg q < deg p`, `𝓗_{2n+1}` when `deg q = deg p`.
pub fn nabla_minors(p: &Polynomial, q: &Polynomial) -> Result<NablaMinors> {
    let n = p
        .degree()
        .ok_or_else(|| Error::InvalidInput("p must be nonzero".into()))?;
    let layout = match q.degree() {
        Some(m) if m > n => return Err(Error::InvalidPair { deg_p: n, deg_q: m }),
        Some(m) if m == n => PairLayout::Odd,
        _ => PairLayout::Even,
    };
    Ok(nabla_minors_with_layout(p, q, layout))
}

/// `∇` minors of `(p, q)` in an explicitly chosen layout (used when `q` is
/// written with a possibly vanishing `b_0` but must keep the odd layout).
pub fn nabla_minors_with_layout(p: &Polynomial, q: &Polynomial, layout: PairLayout) -> NablaMinors {
    let m = hurwitz_pair_matrix(p, q, layout);
    let size = m.nrows();
    NablaMinors {
        nabla: m.leading_principal_minors(size),
        layout,
    }
}

/// Frobenius sign-change count.
///
/// Trailing zeros are dropped. Inside a zero run that follows a nonzero
/// entry `D_i`, the entry `D_{i+ν}` receives the sign
/// `(-1)^{ν(ν-1)/2} sgn D_i`; sign changes of the completed sequence are
/// then counted.
pub fn scf_frobenius(seq: &[Q]) -> Result<usize> {
    let end = match seq.iter().rposition(|x| !x.is_zero()) {
        None => return Err(Error::InvalidSequence("all entries vanish".into())),
        Some(e) => e + 1,
    };
    if seq[0].is_zero() {
        return Err(Error::InvalidSequence("leading entry is zero".into()));
    }
    let mut signs = Vec::with_capacity(end);
    let mut anchor = sign(&seq[0]);
    let mut run = 0usize;
    for x in &seq[..end] {
        let s = sign(x);
        if s == 0 {
            run += 1;
            let flip = (run * (run - 1) / 2) % 2 == 1;
            signs.push(if flip { -anchor } else { anchor });
        } else {
            run = 0;
            anchor = s;
            signs.push(s);
        }
    }
    Ok(signs.windows(2).filter(|w| w[0] != w[1]).count())
}

/// Number of strong sign changes: sign changes among the nonzero entries.
pub fn strong_sign_changes(seq: &[Q]) -> Result<usize> {
    let signs: Vec<i8> = seq.iter().map(sign).filter(|&s| s != 0).collect();
    if signs.is_empty() {
        return Err(Error::InvalidSequence("all entries vanish".into()));
    }
    Ok(signs.windows(2).filter(|w| w[0] != w[1]).count())
}

/// Outcome of a total-nonnegativity scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TnVerdict {
    /// All scanned minors are nonnegative.
    TotallyNonnegative,
    /// The first negative minor found (0-based index sets) and its value.
    Violation {
        /// Row indices.
        rows: Vec<usize>,
        /// Column indices.
        cols: Vec<usize>,
        /// Value of the minor.
        value: Q,
    },
}

impl TnVerdict {
    /// True for [`TnVerdict::TotallyNonnegative`].
    pub fn is_tn(&self) -> bool {
        matches!(self, TnVerdict::TotallyNonnegative)
    }
}

/// Checks every minor of order `<= max_order`, enumerating row and column
/// subsets lexicographically and stopping at the first negative minor.
pub fn total_nonnegativity_scan(m: &ExactMatrix, max_order: usize) -> TnVerdict {
    let max_order = max_order.min(m.nrows()).min(m.ncols());
    for k in 1..=max_order {
        for rows in Combinations::new(m.nrows(), k) {
            for cols in Combinations::new(m.ncols(), k) {
                let v = m.minor(&rows, &cols);
                if v.is_negative() {
                    return TnVerdict::Violation {
                        rows,
                        cols,
                        value: v,
                    };
                }
            }
        }
    }
    TnVerdict::TotallyNonnegative
}

/// Sign character of a Hankel matrix of finite rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HankelMode {
    /// `D_j > 0` and `D̂_j > 0` for `j <= r`.
    StrictTp,
    /// `D_j > 0` and `(-1)^j D̂_j > 0` for `j <= r`.
    SignRegular,
}

/// Tests the strict-total-positivity or sign-regularity characterization of
/// a Hankel matrix of rank `r` through its leading minors.
pub fn hankel_character_test(minors: &HankelMinors, mode: HankelMode) -> bool {
    (1..=minors.r).all(|j| {
        let dh = minors.dhat(j);
        minors.d(j).is_positive()
            && match mode {
                HankelMode::StrictTp => dh.is_positive(),
                HankelMode::SignRegular => {
                    if j % 2 == 0 {
                        dh.is_positive()
                    } else {
                        dh.is_negative()
                    }
                }
            }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn qs(v: &[i64]) -> Vec<Q> {
        v.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn frobenius_rule() {
        assert_eq!(scf_frobenius(&qs(&[1, 0, 0, 5])).unwrap(), 2);
        assert_eq!(scf_frobenius(&qs(&[1, -2])).unwrap(), 1);
        assert_eq!(scf_frobenius(&qs(&[1, 2, 4])).unwrap(), 0);
        assert_eq!(scf_frobenius(&qs(&[1, 0, -1])).unwrap(), 1);
        assert_eq!(scf_frobenius(&qs(&[1, -1, 0, 0])).unwrap(), 1);
        assert!(scf_frobenius(&qs(&[0, 1])).is_err());
        assert!(scf_frobenius(&qs(&[0, 0])).is_err());
    }

    #[test]
    fn strong_changes() {
        assert_eq!(strong_sign_changes(&qs(&[1, -2, 3])).unwrap(), 2);
        assert_eq!(strong_sign_changes(&qs(&[1, 0, -1])).unwrap(), 1);
        assert_eq!(strong_sign_changes(&qs(&[-6, 4, 1])).unwrap(), 1);
        assert!(strong_sign_changes(&qs(&[0, 0])).is_err());
    }

    #[test]
    fn pair_matrix_layouts() {
        let p = Polynomial::from_ints(&[1, 1]);
        let q2 = Polynomial::from_ints(&[1, 2]);
        let m = hurwitz_pair_matrix(&p, &q2, PairLayout::Odd);
        assert_eq!(
            m,
            ExactMatrix::from_int_rows(&[&[1, 1, 0], &[1, 2, 0], &[0, 1, 1]])
        );
        let p = Polynomial::from_ints(&[1, 2, 3]);
        let q1 = Polynomial::from_ints(&[5, 7]);
        let m = hurwitz_pair_matrix(&p, &q1, PairLayout::Even);
        assert_eq!(
            m,
            ExactMatrix::from_int_rows(&[
                &[5, 7, 0, 0],
                &[1, 2, 3, 0],
                &[0, 5, 7, 0],
                &[0, 1, 2, 3]
            ])
        );
    }
}
