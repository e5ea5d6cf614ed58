//! Matrices with self-interlacing spectrum: flip conjugation of totally
//! nonnegative matrices, signature sequences of sign-definite matrices,
//! class `n⁺` certification, anti-bidiagonal and anti-tridiagonal
//! constructions.
//!
//! Minor scans enumerate all `C(n, k)^2` minors of each order, so every
//! scanning function refuses dimensions above [`MAX_SCAN_DIM`].

use std::cmp::Ordering;

use num::{Signed, Zero};
use rand::Rng;
use serde::Serialize;

use crate::classify::{classify, Label, SiType};
use crate::error::{Error, Result};
use crate::matrix::{Combinations, ExactMatrix};
use crate::minors::total_nonnegativity_scan;
use crate::polyalg::Polynomial;
use crate::rational::{qf, sign, Q};

/// Largest dimension accepted by the exhaustive minor scans.
pub const MAX_SCAN_DIM: usize = 8;

/// The flip (anti-identity) matrix `J` of order `n`.
pub fn flip(n: usize) -> ExactMatrix {
    ExactMatrix::from_fn(n, n, |i, j| {
        if i + j + 1 == n {
            Q::from_integer(1.into())
        } else {
            Q::zero()
        }
    })
}

/// Common signs `ε_k` of the nonzero minors of each order; `None` when all
/// minors of that order vanish.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignatureSequence {
    /// `ε_1, ε_2, ...`.
    pub eps: Vec<Option<i8>>,
}

impl SignatureSequence {
    /// The signs `ε_k = (-1)^{k(k-1)/2}` of a flipped totally nonnegative
    /// matrix, `k = 1..=n`.
    pub fn flip_pattern(n: usize) -> Vec<i8> {
        (1..=n)
            .map(|k| if (k * (k - 1) / 2) % 2 == 0 { 1 } else { -1 })
            .collect()
    }

    /// True when every order has nonzero minors with the sign
    /// `(-1)^{k(k-1)/2}`.
    pub fn matches_flip_pattern(&self) -> bool {
        self.eps
            .iter()
            .zip(Self::flip_pattern(self.eps.len()))
            .all(|(e, want)| *e == Some(want))
    }

    /// True when no order is `None` and every order has sign `+1`.
    pub fn is_all_positive(&self) -> bool {
        self.eps.iter().all(|e| *e == Some(1))
    }
}

/// One minor, identified by 0-based row and column index sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinorIndex {
    /// Row indices.
    pub rows: Vec<usize>,
    /// Column indices.
    pub cols: Vec<usize>,
}

/// Result of a sign-definiteness scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "verdict")]
pub enum SignatureVerdict {
    /// Nonzero minors of every scanned order share a sign.
    SignDefinite(SignatureSequence),
    /// Two minors of the same order with opposite signs.
    NotSignDefinite {
        /// The order where the signs first disagree.
        order: usize,
        /// A positive minor.
        positive: MinorIndex,
        /// A negative minor.
        negative: MinorIndex,
    },
}

impl SignatureVerdict {
    /// The signature sequence, if the matrix is sign definite.
    pub fn sequence(&self) -> Option<&SignatureSequence> {
        match self {
            SignatureVerdict::SignDefinite(s) => Some(s),
            SignatureVerdict::NotSignDefinite { .. } => None,
        }
    }
}

fn require_square(m: &ExactMatrix) -> Result<usize> {
    if m.is_square() {
        Ok(m.nrows())
    } else {
        Err(Error::InvalidMatrix(format!(
            "expected a square matrix, got {}x{}",
            m.nrows(),
            m.ncols()
        )))
    }
}

fn require_scannable(m: &ExactMatrix) -> Result<usize> {
    let n = require_square(m)?;
    if n > MAX_SCAN_DIM {
        return Err(Error::InvalidInput(format!(
            "minor scans are limited to dimension {MAX_SCAN_DIM}, got {n}"
        )));
    }
    Ok(n)
}

/// Scans all minors of orders `1..=max_order` and reports their common
/// sign per order, or a pair of minors with opposite signs.
pub fn signature_scan(m: &ExactMatrix, max_order: usize) -> Result<SignatureVerdict> {
    let n = require_scannable(m)?;
    if max_order > n {
        return Err(Error::InvalidInput(format!(
            "max order {max_order} exceeds the dimension {n}"
        )));
    }
    let mut eps = Vec::with_capacity(max_order);
    for k in 1..=max_order {
        let mut pos: Option<MinorIndex> = None;
        let mut neg: Option<MinorIndex> = None;
        'scan: for rows in Combinations::new(n, k) {
            for cols in Combinations::new(n, k) {
                let s = sign(&m.minor(&rows, &cols));
                let slot = match s {
                    1 => &mut pos,
                    -1 => &mut neg,
                    _ => continue,
                };
                if slot.is_none() {
                    *slot = Some(MinorIndex {
                        rows: rows.clone(),
                        cols: cols.clone(),
                    });
                    if pos.is_some() && neg.is_some() {
                        break 'scan;
                    }
                }
            }
        }
        match (pos, neg) {
            (Some(positive), Some(negative)) => {
                return Ok(SignatureVerdict::NotSignDefinite {
                    order: k,
                    positive,
                    negative,
                })
            }
            (Some(_), None) => eps.push(Some(1)),
            (None, Some(_)) => eps.push(Some(-1)),
            (None, None) => eps.push(None),
        }
    }
    Ok(SignatureVerdict::SignDefinite(SignatureSequence { eps }))
}

/// Certifies class `n⁺` for a sign-definite matrix through its square:
/// true iff `M²` is nonsingular, totally nonnegative and has positive
/// entries right above and right below the diagonal. Such an `M²` is
/// oscillating, so a power of `M` is strictly sign definite.
///
/// The sign-definiteness of `M` itself is a precondition and is not
/// rechecked.
pub fn class_n_plus_check(m: &ExactMatrix) -> Result<bool> {
    let n = require_scannable(m)?;
    let sq = m.mul(m);
    let bands = (0..n.saturating_sub(1))
        .all(|j| sq.get(j, j + 1).is_positive() && sq.get(j + 1, j).is_positive());
    Ok(bands && !sq.det().is_zero() && total_nonnegativity_scan(&sq, n).is_tn())
}

/// True when `A` is totally nonnegative (all minors of every order `>= 0`).
pub fn is_totally_nonnegative(a: &ExactMatrix) -> Result<bool> {
    let n = require_scannable(a)?;
    Ok(total_nonnegativity_scan(a, n).is_tn())
}

/// The entry condition that makes `(JA)²` oscillating: for every
/// `i = 1..n-1` there are `r_1, r_2` with
/// `a_{n-i, r_1} a_{n+1-r_1, i} > 0` and `a_{n+1-i, r_2} a_{n+1-r_2, i+1} > 0`
/// (1-based indices).
pub fn satisfies_entries_condition(a: &ExactMatrix) -> Result<bool> {
    let n = require_square(a)?;
    // 1-based accessor.
    let at = |i: usize, j: usize| a.get(i - 1, j - 1);
    let pos = |x: &Q, y: &Q| (x * y).is_positive();
    Ok((1..n).all(|i| {
        let r1 = (1..=n).any(|r| pos(at(n - i, r), at(n + 1 - r, i)));
        let r2 = (1..=n).any(|r| pos(at(n + 1 - i, r), at(n + 1 - r, i + 1)));
        r1 && r2
    }))
}

fn check_positive(name: &str, xs: &[Q]) -> Result<()> {
    match xs.iter().position(|x| !x.is_positive()) {
        Some(i) => Err(Error::InvalidMatrix(format!(
            "{name} entries must be positive, entry {i} is {x}",
            x = crate::rational::format_rational(&xs[i])
        ))),
        None => Ok(()),
    }
}

fn check_band_data(a1: &Q, b: &[Q], c: &[Q]) -> Result<()> {
    if b.len() != c.len() {
        return Err(Error::InvalidMatrix(format!(
            "b and c need equal lengths, got {} and {}",
            b.len(),
            c.len()
        )));
    }
    check_positive("a", std::slice::from_ref(a1))?;
    check_positive("b", b)?;
    check_positive("c", c)
}

/// The anti-bidiagonal matrix with `a_1` on the main diagonal, `b_2..b_n`
/// above it and `c_2..c_n` below it.
///
/// The nonzero entries form the staircase `(1,n), (2,n), (2,n-1),
/// (3,n-1), ...` ending at `(n,1)`; read from the top it carries
/// `b_n, b_{n-1}, ..., b_2, a_1, c_2, ..., c_n`. `b` and `c` hold
/// `b_2..b_n` and `c_2..c_n`.
pub fn anti_bidiagonal(a1: &Q, b: &[Q], c: &[Q]) -> Result<ExactMatrix> {
    check_band_data(a1, b, c)?;
    let n = b.len() + 1;
    let mut path: Vec<Q> = b.iter().rev().cloned().collect();
    path.push(a1.clone());
    path.extend(c.iter().cloned());
    let mut m = ExactMatrix::zeros(n, n);
    for (t, v) in path.into_iter().enumerate() {
        // Even steps sit on the anti-diagonal, odd steps one to the right.
        let (i, j) = if t % 2 == 0 {
            (t / 2, n - 1 - t / 2)
        } else {
            (t.div_ceil(2), n - 1 - (t - 1) / 2)
        };
        *m.get_mut(i, j) = v;
    }
    Ok(m)
}

/// The tridiagonal matrix `K` with `a_1` in the top-left corner, `b_j` at
/// `(j-1, j)`, `c_j` at `(j, j-1)` (1-based) and zeros elsewhere on the
/// diagonal; it has the same spectrum as [`anti_bidiagonal`].
pub fn tridiagonal_equivalent(a1: &Q, b: &[Q], c: &[Q]) -> Result<ExactMatrix> {
    check_band_data(a1, b, c)?;
    let n = b.len() + 1;
    let mut m = ExactMatrix::zeros(n, n);
    *m.get_mut(0, 0) = a1.clone();
    for k in 0..n - 1 {
        *m.get_mut(k, k + 1) = b[k].clone();
        *m.get_mut(k + 1, k) = c[k].clone();
    }
    Ok(m)
}

/// Entries of a tridiagonal (Jacobi) matrix: diagonal `a_1..a_n`,
/// superdiagonal `b_1..b_{n-1}`, subdiagonal `c_1..c_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiData {
    /// Diagonal.
    pub a: Vec<Q>,
    /// Superdiagonal.
    pub b: Vec<Q>,
    /// Subdiagonal.
    pub c: Vec<Q>,
}

impl JacobiData {
    fn check(&self) -> Result<usize> {
        let n = self.a.len();
        if n == 0 || self.b.len() + 1 != n || self.c.len() + 1 != n {
            return Err(Error::InvalidMatrix(format!(
                "Jacobi data needs n >= 1 diagonal and n-1 off-diagonal entries, got {}, {}, {}",
                n,
                self.b.len(),
                self.c.len()
            )));
        }
        Ok(n)
    }

    /// The tridiagonal matrix `M_J`.
    pub fn tridiagonal(&self) -> Result<ExactMatrix> {
        let n = self.check()?;
        let mut m = ExactMatrix::zeros(n, n);
        for k in 0..n {
            *m.get_mut(k, k) = self.a[k].clone();
        }
        for k in 0..n - 1 {
            *m.get_mut(k, k + 1) = self.b[k].clone();
            *m.get_mut(k + 1, k) = self.c[k].clone();
        }
        Ok(m)
    }

    /// The anti-tridiagonal matrix `A_J = M_J J`: row `k` carries `b_k`,
    /// `a_k`, `c_{k-1}` in columns `n-k`, `n+1-k`, `n+2-k` (1-based).
    pub fn anti_tridiagonal(&self) -> Result<ExactMatrix> {
        let n = self.check()?;
        Ok(self.tridiagonal()?.mul(&flip(n)))
    }

    /// Reads the data back from an anti-tridiagonal matrix, rejecting
    /// entries off the three anti-diagonals and nonpositive band entries.
    pub fn from_anti_tridiagonal(aj: &ExactMatrix) -> Result<Self> {
        let n = require_square(aj)?;
        if n == 0 {
            return Err(Error::InvalidMatrix("empty matrix".into()));
        }
        let m = aj.mul(&flip(n));
        for i in 0..n {
            for j in 0..n {
                if i.abs_diff(j) > 1 && !m.get(i, j).is_zero() {
                    return Err(Error::InvalidMatrix(format!(
                        "entry ({}, {}) lies off the anti-tridiagonal band",
                        i + 1,
                        n - j
                    )));
                }
            }
        }
        let data = JacobiData {
            a: (0..n).map(|k| m.get(k, k).clone()).collect(),
            b: (0..n - 1).map(|k| m.get(k, k + 1).clone()).collect(),
            c: (0..n - 1).map(|k| m.get(k + 1, k).clone()).collect(),
        };
        check_positive("a", &data.a)?;
        check_positive("b", &data.b)?;
        check_positive("c", &data.c)?;
        Ok(data)
    }
}

/// Both sides of the anti-tridiagonal criterion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AntiTridiagonalConditions {
    /// `(-1)^{k(k-1)/2} A_J(1..k; n+1-k..n) > 0` for `k = 1..n`.
    pub corner_minors: bool,
    /// All leading principal minors of the flipped matrix `M_J = A_J J`
    /// are positive.
    pub flipped_leading_minors: bool,
}

/// Evaluates the corner-minor condition on `A_J` and the leading-minor
/// condition on `M_J = A_J J` separately.
pub fn anti_tridiagonal_conditions(aj: &ExactMatrix) -> Result<AntiTridiagonalConditions> {
    let data = JacobiData::from_anti_tridiagonal(aj)?;
    let n = data.a.len();
    let signs = SignatureSequence::flip_pattern(n);
    let corner_minors = (1..=n).all(|k| {
        let rows: Vec<usize> = (0..k).collect();
        let cols: Vec<usize> = (n - k..n).collect();
        let v = aj.minor(&rows, &cols);
        if signs[k - 1] > 0 {
            v.is_positive()
        } else {
            v.is_negative()
        }
    });
    let flipped_leading_minors = data
        .tridiagonal()?
        .leading_principal_minors(n)
        .iter()
        .all(Signed::is_positive);
    Ok(AntiTridiagonalConditions {
        corner_minors,
        flipped_leading_minors,
    })
}

/// Decides whether an anti-tridiagonal matrix with positive band entries
/// is sign definite of class `n⁺` with a self-interlacing spectrum, via
/// its corner minors.
pub fn anti_tridiagonal_criterion(aj: &ExactMatrix) -> Result<bool> {
    let c = anti_tridiagonal_conditions(aj)?;
    debug_assert_eq!(c.corner_minors, c.flipped_leading_minors);
    Ok(c.corner_minors)
}

/// Exact characteristic polynomial `det(zI - M)`.
pub fn char_poly(m: &ExactMatrix) -> Result<Polynomial> {
    require_square(m)?;
    Ok(m.char_poly())
}

/// Ordering of a self-interlacing spectrum sorted by decreasing modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpectrumForm {
    /// `λ_1 > -λ_2 > λ_3 > ... > 0`.
    PositiveLeading,
    /// `-λ_1 > λ_2 > -λ_3 > ... > 0`.
    NegativeLeading,
}

/// The self-interlacing form of the spectrum of `M`, decided exactly from
/// its characteristic polynomial; `None` when the spectrum is not
/// self-interlacing.
pub fn si_spectrum_form(m: &ExactMatrix) -> Result<Option<SpectrumForm>> {
    let p = char_poly(m)?;
    let n = p.deg();
    if n == 0 {
        return Ok(None);
    }
    // Sign of the largest-modulus eigenvalue for each type.
    let from_type = |t: SiType| {
        let positive = match t {
            SiType::I => n % 2 == 1,
            SiType::II => n % 2 == 0,
        };
        if positive {
            SpectrumForm::PositiveLeading
        } else {
            SpectrumForm::NegativeLeading
        }
    };
    if n == 1 {
        // A single nonzero eigenvalue is trivially self-interlacing; the
        // classifier files a negative one under stability instead.
        let lam = -p.a(1) / p.a(0);
        return Ok(match sign(&lam) {
            1 => Some(SpectrumForm::PositiveLeading),
            -1 => Some(SpectrumForm::NegativeLeading),
            _ => None,
        });
    }
    let report = classify(&p);
    Ok(match (report.label, report.si_type) {
        (Label::SelfInterlacing, Some(t)) => Some(from_type(t)),
        _ => None,
    })
}

/// True when the eigenvalues of `M` are real, simple, nonzero, alternate
/// in sign and strictly decrease in modulus.
pub fn si_spectrum_check(m: &ExactMatrix) -> Result<bool> {
    Ok(si_spectrum_form(m)?.is_some())
}

/// Floating-point reading of the spectrum: eigenvalues sorted by
/// decreasing modulus must be real, alternate in sign and have relative
/// modulus gaps of at least `sqrt(tol)`; imaginary parts and gaps inside
/// the band `(tol, sqrt(tol))` are indeterminate.
pub fn numeric_spectrum_form(m: &ExactMatrix, tol: f64) -> Result<Option<SpectrumForm>> {
    require_square(m)?;
    let mut eig = crate::oracle::numeric_eigenvalues(m);
    if eig.is_empty() {
        return Ok(None);
    }
    let scale = eig.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if scale == 0.0 {
        return Ok(None);
    }
    let indeterminate = |what: &str, x: f64| {
        Err(Error::OracleFailure(format!(
            "indeterminate {what}: normalized value {x:e} inside the tolerance band"
        )))
    };
    for z in &eig {
        let r = z.im.abs() / scale;
        if r > tol && r < tol.sqrt() {
            return indeterminate("imaginary part", r);
        }
        if r >= tol.sqrt() {
            return Ok(None);
        }
    }
    eig.sort_by(|a, b| b.norm().partial_cmp(&a.norm()).unwrap_or(Ordering::Equal));
    for w in eig.windows(2) {
        let gap = (w[0].norm() - w[1].norm()) / scale;
        if gap <= tol {
            return Ok(None);
        }
        if gap < tol.sqrt() {
            return indeterminate("modulus gap", gap);
        }
        if (w[0].re > 0.0) == (w[1].re > 0.0) {
            return Ok(None);
        }
    }
    if eig.last().is_some_and(|z| z.norm() / scale < tol.sqrt()) {
        return indeterminate(
            "smallest eigenvalue",
            eig.last().map_or(0.0, |z| z.norm()) / scale,
        );
    }
    Ok(Some(if eig[0].re > 0.0 {
        SpectrumForm::PositiveLeading
    } else {
        SpectrumForm::NegativeLeading
    }))
}

/// A random bidiagonal factor with positive diagonal entries; the
/// off-diagonal is nonnegative (zero with probability `1/3`), or strictly
/// positive when `positive_band` is set.
fn bidiagonal_factor<R: Rng>(
    n: usize,
    upper: bool,
    positive_band: bool,
    rng: &mut R,
) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(n, n);
    for k in 0..n {
        *m.get_mut(k, k) = qf(rng.gen_range(1..=8), 4);
    }
    for k in 0..n.saturating_sub(1) {
        let v = if positive_band || rng.gen_range(0..3) > 0 {
            qf(rng.gen_range(1..=8), 4)
        } else {
            Q::zero()
        };
        let (i, j) = if upper { (k, k + 1) } else { (k + 1, k) };
        *m.get_mut(i, j) = v;
    }
    m
}

/// A nonsingular totally nonnegative matrix as a product of nonnegative
/// bidiagonal factors (lower factors first, then upper ones). The last
/// upper factor has a positive superdiagonal, so the product has positive
/// diagonal and superdiagonal entries and satisfies
/// [`satisfies_entries_condition`].
pub fn random_tn_matrix<R: Rng>(n: usize, rng: &mut R) -> ExactMatrix {
    let mut m = ExactMatrix::identity(n);
    for _ in 0..rng.gen_range(0..=2) {
        m = m.mul(&bidiagonal_factor(n, false, false, rng));
    }
    for _ in 0..rng.gen_range(0..=1) {
        m = m.mul(&bidiagonal_factor(n, true, false, rng));
    }
    m.mul(&bidiagonal_factor(n, true, true, rng))
}

/// Draws positive anti-bidiagonal data `(a_1, b_2..b_n, c_2..c_n)` on the
/// grid `{1/4, ..., 2}`.
pub fn random_anti_bidiagonal_data<R: Rng>(n: usize, rng: &mut R) -> (Q, Vec<Q>, Vec<Q>) {
    let mut draw = |count: usize| {
        (0..count)
            .map(|_| qf(rng.gen_range(1..=8), 4))
            .collect::<Vec<Q>>()
    };
    let a1 = draw(1).remove(0);
    let b = draw(n - 1);
    let c = draw(n - 1);
    (a1, b, c)
}
