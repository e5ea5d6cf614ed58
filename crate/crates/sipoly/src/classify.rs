//! Classification of real polynomials by zero location.
//!
//! Every predicate here is exact: the decisions are sign tests on Hurwitz
//! and Hankel minors, Frobenius sign-change counts and strong sign changes
//! of coefficient sequences. No root finding takes place.
//!
//! The master classifier [`classify`] assigns one label following a fixed
//! precedence (most specific first):
//! hurwitz-stable, quasi-stable, self-interlacing, almost-self-interlacing,
//! quasi-self-interlacing, generalized-hurwitz, unclassified.
//! Labels of type II are obtained by classifying `p(-z)`; they are reported
//! for the self-interlacing family and for generalized Hurwitz polynomials
//! of order `k >= 1`, and their `order_k` refers to `p(-z)`.

use num::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::minors::{
    hankel_minors, hurwitz_matrix, hurwitz_minors, scf_frobenius, strong_sign_changes,
    total_nonnegativity_scan, HankelMinors, HurwitzMinors,
};
use crate::polyalg::{
    associated_function, even_odd_split, laurent_expand, poly_gcd, reflect, Polynomial,
    RationalFunction,
};
use crate::rational::{neg_one_pow, Q};
use crate::stieltjes::{polynomial_cf, PolynomialCF};

/// Class label of a polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Label {
    /// All zeros in the open left half-plane.
    HurwitzStable,
    /// All zeros in the closed left half-plane, `m >= 1` of them on the
    /// imaginary axis.
    QuasiStable,
    /// Real simple zeros alternating in sign with growing magnitudes.
    SelfInterlacing,
    /// `z` times a self-interlacing polynomial.
    AlmostSelfInterlacing,
    /// Dual to a quasi-stable polynomial with degeneracy index `m >= 2`.
    QuasiSelfInterlacing,
    /// Generalized Hurwitz of order `k` not covered by a finer label.
    GeneralizedHurwitz,
    /// Outside the taxonomy.
    Unclassified,
}

impl Label {
    /// The kebab-case name used in reports.
    pub fn as_str(&self) -> &'static str {
        match self {
            Label::HurwitzStable => "hurwitz-stable",
            Label::QuasiStable => "quasi-stable",
            Label::SelfInterlacing => "self-interlacing",
            Label::AlmostSelfInterlacing => "almost-self-interlacing",
            Label::QuasiSelfInterlacing => "quasi-self-interlacing",
            Label::GeneralizedHurwitz => "generalized-hurwitz",
            Label::Unclassified => "unclassified",
        }
    }

    fn in_si_family(&self) -> bool {
        matches!(
            self,
            Label::SelfInterlacing | Label::AlmostSelfInterlacing | Label::QuasiSelfInterlacing
        )
    }
}

impl std::fmt::Display for Label {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Type of a label: type II means the pattern belongs to `p(-z)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SiType {
    /// The polynomial itself has the pattern.
    I,
    /// `p(-z)` has the pattern.
    II,
}

/// Evidence collected while classifying.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificates {
    /// The input had a negative leading coefficient and was negated.
    pub normalized: bool,
    /// Hurwitz determinants `Δ_1..Δ_n` of the normalized polynomial.
    #[serde(serialize_with = "crate::serde_util::rationals")]
    pub delta: Vec<Q>,
    /// Whether `Δ_{n-1}, Δ_{n-3}, ...` are all positive.
    pub gate_passed: bool,
    /// First gate minor that is not positive, e.g. `Δ_3`.
    pub failed_gate: Option<String>,
    /// Order from the Frobenius sign-change formula.
    pub scf_order: Option<usize>,
    /// Order from the strong-sign-change coefficient formula.
    pub v_order: Option<usize>,
    /// Multiplicity of the zero root.
    pub zero_root_multiplicity: usize,
    /// Degree of `gcd(p(z), p(-z))` (common zeros symmetric about the
    /// imaginary axis).
    pub symmetric_gcd_degree: usize,
    /// The label was obtained from `p(-z)`.
    pub reflected: bool,
}

/// Result of [`classify`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    /// Class label.
    pub label: Label,
    /// Order `k` when the polynomial is generalized Hurwitz (of `p(-z)` for
    /// type II reports).
    pub order_k: Option<usize>,
    /// Degeneracy index `m` for the quasi-stable family.
    pub degeneracy_m: Option<usize>,
    /// Type I or II for the self-interlacing family and generalized Hurwitz
    /// polynomials.
    pub si_type: Option<SiType>,
    /// Supporting minors and counts.
    pub certificates: Certificates,
}

/// `⌊(n+1)/2⌋`, the largest possible generalized Hurwitz order.
pub fn max_order(n: usize) -> usize {
    n.div_ceil(2)
}

// ---------------------------------------------------------------------------
// R-functions
// ---------------------------------------------------------------------------

/// Certificate that a rational function is an R-function.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RFunctionCertificate {
    /// Number of poles (degree of the reduced denominator).
    pub pole_count: usize,
    /// `D_1..D_r`, all positive.
    #[serde(serialize_with = "crate::serde_util::rationals")]
    pub d: Vec<Q>,
    /// Number of negative poles.
    pub negative_pole_count: usize,
    /// Number of positive poles.
    pub positive_pole_count: usize,
    /// Whether the origin is a pole.
    pub pole_at_zero: bool,
    #[serde(skip)]
    minors: HankelMinors,
}

/// Decides whether `R` maps the upper half-plane into the lower one:
/// the linear coefficient `s_{-2}` at infinity is nonpositive and
/// `D_j(R) > 0` for `j = 1..r`. Returns the certificate when it is.
pub fn is_r_function(r: &RationalFunction) -> Option<RFunctionCertificate> {
    let red = r.reduced();
    let poles = red.den.deg();
    if let Some(dn) = red.num.degree() {
        if dn > poles + 1 || (dn + 1 < poles && !red.num.is_zero()) {
            return None;
        }
    }
    let series = laurent_expand(&red, poles).ok()?;
    if series.s_minus2.is_positive() {
        return None;
    }
    let minors = hankel_minors(&series, poles).ok()?;
    if !(1..=poles).all(|j| minors.d(j).is_positive()) {
        return None;
    }
    let pole_at_zero = poles > 0 && red.den.constant_term().is_zero();
    let negative = negative_pole_scf(&minors, poles, pole_at_zero);
    Some(RFunctionCertificate {
        pole_count: poles,
        d: minors.d.clone(),
        negative_pole_count: negative,
        positive_pole_count: poles - negative - usize::from(pole_at_zero),
        pole_at_zero,
        minors,
    })
}

fn negative_pole_scf(m: &HankelMinors, r: usize, pole_at_zero: bool) -> usize {
    let k = if pole_at_zero { r - 1 } else { r };
    let seq: Vec<Q> = (0..=k).map(|j| m.dhat(j)).collect();
    scf_frobenius(&seq).expect("sequence starts with D̂_0 = 1")
}

/// Pole signs of an R-function: `(negative, positive, pole_at_zero)` with
/// the negative count given by `SCF(1, D̂_1, ..., D̂_k)`, `k = r - 1` when
/// the origin is a pole and `k = r` otherwise.
///
/// The same-sign shortcuts are checked in debug builds: all poles negative
/// exactly when `(-1)^j D̂_j > 0`, all positive exactly when `D̂_j > 0`.
pub fn pole_sign_count(_r: &RationalFunction, cert: &RFunctionCertificate) -> (usize, usize, bool) {
    let (neg, pos, zero) = (
        cert.negative_pole_count,
        cert.positive_pole_count,
        cert.pole_at_zero,
    );
    debug_assert_eq!(neg, negative_pole_scf(&cert.minors, cert.pole_count, zero));
    debug_assert!(
        zero || neg != cert.pole_count
            || (1..=cert.pole_count).all(|j| (neg_one_pow(j) * cert.minors.dhat(j)).is_positive())
    );
    debug_assert!(
        zero || pos != cert.pole_count
            || (1..=cert.pole_count).all(|j| cert.minors.dhat(j).is_positive())
    );
    (neg, pos, zero)
}

/// All negative poles, read from the sign-regular pattern `(-1)^j D̂_j > 0`.
pub fn all_poles_negative(cert: &RFunctionCertificate) -> bool {
    (1..=cert.pole_count).all(|j| (neg_one_pow(j) * cert.minors.dhat(j)).is_positive())
}

/// All positive poles, read from the strictly positive pattern `D̂_j > 0`.
pub fn all_poles_positive(cert: &RFunctionCertificate) -> bool {
    (1..=cert.pole_count).all(|j| cert.minors.dhat(j).is_positive())
}

// ---------------------------------------------------------------------------
// Hurwitz stability
// ---------------------------------------------------------------------------

/// Hurwitz stability by determinants: `a_0 > 0` (after normalization) and
/// `Δ_1, ..., Δ_n > 0`.
pub fn is_stable_delta(p: &Polynomial) -> bool {
    let (p, _) = p.normalized_positive();
    match hurwitz_minors(&p) {
        Ok(hm) => hm.delta.iter().all(Signed::is_positive),
        Err(_) => false,
    }
}

/// Hurwitz stability through the infinite Hurwitz matrix:
/// `η_1, ..., η_{n+1} > 0`.
pub fn is_stable_eta(p: &Polynomial) -> bool {
    let (p, _) = p.normalized_positive();
    match hurwitz_minors(&p) {
        Ok(hm) => hm.eta.iter().all(Signed::is_positive),
        Err(_) => false,
    }
}

/// Hurwitz stability through total nonnegativity of the finite Hurwitz
/// matrix: `𝓗_n(p)` nonsingular and every minor of order `<= max_order`
/// nonnegative. The scan is exhaustive (exponential in `n`).
pub fn is_stable_tn(p: &Polynomial, max_order: usize) -> bool {
    let (p, _) = p.normalized_positive();
    if p.is_zero() {
        return false;
    }
    let h = hurwitz_matrix(&p);
    if h.nrows() == 0 {
        return true;
    }
    !h.det().is_zero() && total_nonnegativity_scan(&h, max_order).is_tn()
}

/// Coefficients `a_n, a_{n-2}, ...` (step 2 downwards from `top`, indices
/// `>= 0`).
fn coeff_run(p: &Polynomial, top: isize) -> Vec<Q> {
    (0..=top.max(-1))
        .rev()
        .step_by(2)
        .filter(|&i| i >= 0)
        .map(|i| p.a(i))
        .collect()
}

/// Minors `Δ_top, Δ_{top-2}, ...` with indices `>= 1`.
fn delta_run(hm: &HurwitzMinors, top: isize) -> Vec<(isize, Q)> {
    let mut out = Vec::new();
    let mut j = top;
    while j >= 1 {
        out.push((j, hm.delta(j)));
        j -= 2;
    }
    out
}

/// The four Liénard–Chipart stability tests (`variant` in `1..=4`):
///
/// 1. `a_n, a_{n-2}, ... > 0` and `Δ_{n-1}, Δ_{n-3}, ... > 0`;
/// 2. `a_n, a_{n-1}, a_{n-3}, ... > 0` and `Δ_{n-1}, Δ_{n-3}, ... > 0`;
/// 3. `a_n, a_{n-2}, ... > 0` and `Δ_n, Δ_{n-2}, ... > 0`;
/// 4. `a_n, a_{n-1}, a_{n-3}, ... > 0` and `Δ_n, Δ_{n-2}, ... > 0`.
///
/// # Panics
/// Panics if `variant` is not in `1..=4`.
pub fn lienard_chipart(p: &Polynomial, variant: u8) -> bool {
    assert!((1..=4).contains(&variant), "variant must be 1..=4");
    let (p, _) = p.normalized_positive();
    let n = match p.degree() {
        None => return false,
        Some(n) => n as isize,
    };
    let Ok(hm) = hurwitz_minors(&p) else {
        return false;
    };
    let mut coeffs = vec![p.a(n)];
    if variant % 2 == 1 {
        coeffs.extend(coeff_run(&p, n - 2));
    } else {
        coeffs.extend(coeff_run(&p, n - 1));
    }
    let deltas = if variant <= 2 {
        delta_run(&hm, n - 1)
    } else {
        delta_run(&hm, n)
    };
    coeffs.iter().all(Signed::is_positive) && deltas.iter().all(|(_, d)| d.is_positive())
}

// ---------------------------------------------------------------------------
// Quasi-stability
// ---------------------------------------------------------------------------

/// Whether every root of `f` is real (multiplicities allowed), by the
/// Hermite criterion: the Hankel form of the power sums of the roots, i.e.
/// of the series of `f'/f`, is positive definite on its rank.
pub fn all_roots_real(f: &Polynomial) -> bool {
    if f.deg() == 0 {
        return true;
    }
    let logd = RationalFunction::new(f.derivative(), f.clone())
        .expect("nonzero polynomial")
        .reduced();
    let r = logd.den.deg();
    let series = laurent_expand(&logd, r).expect("proper function");
    let m = hankel_minors(&series, r).expect("enough coefficients");
    (1..=r).all(|j| m.d(j).is_positive())
}

/// Degeneracy index `m` when `p` is quasi-stable (all zeros in the closed
/// left half-plane); `m` counts imaginary-axis zeros with multiplicity, so
/// `Some(0)` means Hurwitz stable.
///
/// Decided exactly: the imaginary-axis part is `g = gcd(p(z), p(-z))`,
/// which must have the form `z^e f(z^2)` with `f` real-rooted and
/// nonpositive-rooted, and the cofactor `p/g` must be Hurwitz stable.
pub fn quasi_stable(p: &Polynomial) -> Option<usize> {
    let (p, _) = p.normalized_positive();
    let n = p.degree()?;
    if n == 0 {
        return Some(0);
    }
    let g = poly_gcd(&p, &reflect(&p));
    let m = g.deg();
    if m > 0 {
        let split = even_odd_split(&g).ok()?;
        // g(-z) = ±g(z), so exactly one part is nonzero.
        let f = if split.p1.is_zero() {
            split.p0
        } else if split.p0.is_zero() {
            split.p1
        } else {
            return None;
        };
        if !all_roots_real(&f) || !f.monic().coeffs().iter().all(|c| !c.is_negative()) {
            return None;
        }
    }
    let rest = p.exact_div(&g).expect("gcd divides p");
    if !is_stable_delta(&rest) {
        return None;
    }
    debug_assert!(quasi_stable_delta_pattern(&p, m));
    Some(m)
}

/// The determinant pattern of a quasi-stable polynomial with degeneracy
/// index `m`: `Δ_1, ..., Δ_{n-m} > 0` and the remaining minors vanish.
/// Necessary for quasi-stability but not sufficient.
pub fn quasi_stable_delta_pattern(p: &Polynomial, m: usize) -> bool {
    let (p, _) = p.normalized_positive();
    let Ok(hm) = hurwitz_minors(&p) else {
        return false;
    };
    let n = hm.degree;
    m <= n
        && hm.delta[..n - m].iter().all(Signed::is_positive)
        && hm.delta[n - m..].iter().all(Zero::is_zero)
}

// ---------------------------------------------------------------------------
// Generalized Hurwitz order
// ---------------------------------------------------------------------------

/// Gate for generalized Hurwitz polynomials: `Δ_{n-1}, Δ_{n-3}, ... > 0`.
/// Returns the index of the first minor that fails.
fn gate(hm: &HurwitzMinors) -> std::result::Result<(), isize> {
    let n = hm.degree as isize;
    match delta_run(hm, n - 1)
        .into_iter()
        .find(|(_, d)| !d.is_positive())
    {
        Some((j, _)) => Err(j),
        None => Ok(()),
    }
}

fn scf_order(p: &Polynomial, hm: &HurwitzMinors) -> usize {
    let n = hm.degree as isize;
    let root_at_zero = p.constant_term().is_zero();
    let top = if root_at_zero { n - 2 } else { n };
    // Ascending reading (1, ..., Δ_{top-2}, Δ_top) of the sequence
    // (Δ_top, Δ_{top-2}, ..., 1): it always starts with a nonzero entry.
    let mut seq = vec![Q::one()];
    seq.extend(delta_run(hm, top).into_iter().rev().map(|(_, d)| d));
    let k = scf_frobenius(&seq).expect("sequence starts with 1");
    k + usize::from(root_at_zero)
}

/// Generalized Hurwitz order by determinants: `None` unless
/// `Δ_{n-1}, Δ_{n-3}, ... > 0`; then `k = SCF(Δ_n, Δ_{n-2}, ..., 1)` when
/// `p(0) != 0` and `k = SCF(Δ_{n-2}, Δ_{n-4}, ..., 1) + 1` when `p(0) = 0`.
pub fn generalized_hurwitz_order(p: &Polynomial) -> Option<usize> {
    let (p, _) = p.normalized_positive();
    let hm = hurwitz_minors(&p).ok()?;
    gate(&hm).ok()?;
    Some(scf_order(&p, &hm))
}

/// Both coefficient formulas for the order,
/// `v(a_n, a_{n-2}, ..., 1)` and `v(a_n, a_{n-1}, a_{n-3}, ..., 1)`
/// (each shifted by one when `a_n = 0`, in which case the `a_n` entry is
/// dropped), or `None` when the gate fails.
pub fn lienard_chipart_order_forms(p: &Polynomial) -> Option<(usize, usize)> {
    let (p, _) = p.normalized_positive();
    let hm = hurwitz_minors(&p).ok()?;
    gate(&hm).ok()?;
    let n = hm.degree as isize;
    let an_zero = p.a(n).is_zero();
    let v = |mut seq: Vec<Q>| {
        seq.push(Q::one());
        strong_sign_changes(&seq).expect("ends with 1")
    };
    let mut even = vec![p.a(n)];
    even.extend(coeff_run(&p, n - 2));
    let mut mixed = if an_zero { vec![] } else { vec![p.a(n)] };
    mixed.extend(coeff_run(&p, n - 1));
    let bump = usize::from(an_zero);
    Some((v(even) + bump, v(mixed) + bump))
}

/// Generalized Hurwitz order by strong sign changes of coefficients,
/// `k = v(a_n, a_{n-2}, ..., 1) (+1 if a_n = 0)`; the alternative form
/// through `a_n, a_{n-1}, a_{n-3}, ...` is checked in debug builds.
/// `None` when the gate fails.
pub fn generalized_lienard_chipart_order(p: &Polynomial) -> Option<usize> {
    let (k, alt) = lienard_chipart_order_forms(p)?;
    debug_assert_eq!(k, alt);
    Some(k)
}

/// Order read off the Stieltjes continued fraction of `Phi`.
///
/// When `Phi` is finite at infinity (`n` even, or `n` odd with `a_1 != 0`)
/// and `Δ_{n-2j} != 0` for `j = 1..l`: `k` equals the number of negative
/// `c_{2j}`, `j = 0..l`, when `p(0) != 0`, and one more than that count
/// over `j = 0..l-1` when `p(0) = 0`.
///
/// For odd `n` with `a_1 = 0` (`c_{-1} = -a_0/a_3`) and
/// `Δ_{2j+1} != 0` for `j = 1..l-1`: `k - 1` negative `c_{2j}` over
/// `j = 1..l-1` when `p(0) != 0`, and `k - 2` over `j = 1..l-2` when
/// `p(0) = 0`.
///
/// The polynomial is expected to be generalized Hurwitz.
pub fn order_from_continued_fraction(p: &Polynomial) -> Result<usize> {
    let (p, _) = p.normalized_positive();
    let hm = hurwitz_minors(&p)?;
    let n = hm.degree as isize;
    let l = (n / 2) as usize;
    let zero_root = p.constant_term().is_zero();
    let need = |j: isize| -> Result<()> {
        if hm.delta(j).is_zero() {
            Err(Error::NoContinuedFraction {
                minor: format!("Δ_{j}"),
            })
        } else {
            Ok(())
        }
    };
    let odd_a1_zero = n % 2 == 1 && p.a(1).is_zero();
    if odd_a1_zero {
        for j in 1..l as isize {
            need(2 * j + 1)?;
        }
    } else {
        for j in 1..=l as isize {
            need(n - 2 * j)?;
        }
    }
    match polynomial_cf(&p)? {
        PolynomialCF::Plain(cf) => {
            if zero_root {
                Ok(1 + cf.negative_even_count(0, l.saturating_sub(1)))
            } else {
                Ok(cf.negative_even_count(0, l))
            }
        }
        PolynomialCF::Extended(ext) => {
            if zero_root {
                Ok(2 + ext.inner.negative_even_count(1, l.saturating_sub(2)))
            } else {
                Ok(1 + ext.inner.negative_even_count(1, l.saturating_sub(1)))
            }
        }
    }
}

/// Order through the poles of `Phi`: the number of nonnegative poles, plus
/// one when `n` is odd and `a_0 a_1 <= 0`. `None` when `Phi` is not an
/// R-function (then `p` is not generalized Hurwitz).
pub fn order_from_poles(p: &Polynomial) -> Option<usize> {
    let (p, _) = p.normalized_positive();
    let n = p.degree()?;
    if n == 0 {
        return Some(0);
    }
    let phi = match associated_function(&p) {
        Ok(phi) => phi,
        // p is odd: only a0 z is generalized Hurwitz (order 1); for higher
        // degrees every zero off the origin comes with its mirror image.
        Err(_) => return (n == 1).then_some(1),
    };
    let cert = is_r_function(&phi)?;
    let (neg, _, _) = pole_sign_count(&phi, &cert);
    let nonnegative = cert.pole_count - neg;
    let extra = n % 2 == 1 && !(p.a(0) * p.a(1)).is_positive();
    Some(nonnegative + usize::from(extra))
}

// ---------------------------------------------------------------------------
// Duality
// ---------------------------------------------------------------------------

/// Dual polynomial `q(z) = (-1)^{n(n+1)/2} [p_0(-z^2) - z p_1(-z^2)]`,
/// equivalently `b_j = (-1)^{j(j-1)/2} a_j` for even `n` and
/// `b_j = (-1)^{j(j+1)/2} a_j` for odd `n`. `p` is self-interlacing of
/// type I exactly when `q` is Hurwitz stable; the map is an involution.
pub fn dual_transform(p: &Polynomial) -> Polynomial {
    let Some(n) = p.degree() else {
        return Polynomial::zero();
    };
    let odd = n % 2 == 1;
    let q = Polynomial::new(
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(j, a)| {
                let e = if odd {
                    j * (j + 1) / 2
                } else {
                    j * j.saturating_sub(1) / 2
                };
                neg_one_pow(e) * a
            })
            .collect(),
    );
    debug_assert_eq!(q, dual_by_split(p));
    q
}

fn dual_by_split(p: &Polynomial) -> Polynomial {
    let n = p.deg();
    let split = even_odd_split(p).expect("nonzero");
    let neg = |f: &Polynomial| {
        // f(-u)
        Polynomial::from_ascending(
            f.ascending()
                .into_iter()
                .enumerate()
                .map(|(k, c)| neg_one_pow(k) * c)
                .collect(),
        )
    };
    let even = neg(&split.p0).compose_square();
    let odd = neg(&split.p1).compose_square().shift(1);
    (&even - &odd).scale(&neg_one_pow(n * (n + 1) / 2))
}

/// Type-II dual `p_0(-z^2) + z p_1(-z^2)`, the dual of `p(-z)` up to sign.
pub fn dual_transform_type_two(p: &Polynomial) -> Polynomial {
    dual_transform(&reflect(p))
}

// ---------------------------------------------------------------------------
// Master classifier
// ---------------------------------------------------------------------------

/// One applicable label with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Candidate {
    label: Label,
    m: Option<usize>,
}

struct TypeOne {
    candidates: Vec<Candidate>,
    order: Option<usize>,
    certificates: Certificates,
}

/// All type-I labels that apply to a polynomial with positive leading
/// coefficient, in precedence order.
fn type_one(p: &Polynomial) -> TypeOne {
    let n = p.deg();
    let hm = hurwitz_minors(p).expect("nonzero polynomial");
    let zero_mult = p.zero_root_multiplicity();
    let mut cert = Certificates {
        normalized: false,
        delta: hm.delta.clone(),
        gate_passed: false,
        failed_gate: None,
        scf_order: None,
        v_order: None,
        zero_root_multiplicity: zero_mult,
        symmetric_gcd_degree: poly_gcd(p, &reflect(p)).deg(),
        reflected: false,
    };
    let mut candidates = Vec::new();
    let cand = |label, m| Candidate { label, m };
    match gate(&hm) {
        Ok(()) => {
            let k = scf_order(p, &hm);
            let v = generalized_lienard_chipart_order(p);
            debug_assert_eq!(Some(k), v);
            cert.gate_passed = true;
            cert.scf_order = Some(k);
            cert.v_order = v;
            let root_at_zero = zero_mult > 0;
            if k == 0 {
                candidates.push(cand(Label::HurwitzStable, None));
            }
            if k == 1 && root_at_zero {
                debug_assert_eq!(quasi_stable(p), Some(1));
                candidates.push(cand(Label::QuasiStable, Some(1)));
            }
            if k == max_order(n) && n > 0 {
                if root_at_zero {
                    candidates.push(cand(Label::AlmostSelfInterlacing, Some(1)));
                } else {
                    candidates.push(cand(Label::SelfInterlacing, None));
                }
            }
            candidates.push(cand(Label::GeneralizedHurwitz, None));
            TypeOne {
                candidates,
                order: Some(k),
                certificates: cert,
            }
        }
        Err(j) => {
            cert.failed_gate = Some(format!("Δ_{j}"));
            if let Some(m) = quasi_stable(p) {
                candidates.push(cand(Label::QuasiStable, Some(m)));
            }
            if let Some(m) = quasi_stable(&dual_transform(p)) {
                let label = match m {
                    0 => Label::SelfInterlacing,
                    1 => Label::AlmostSelfInterlacing,
                    _ => Label::QuasiSelfInterlacing,
                };
                candidates.push(cand(label, (m > 0).then_some(m)));
            }
            TypeOne {
                candidates,
                order: None,
                certificates: cert,
            }
        }
    }
}

/// Classifies a nonzero polynomial.
///
/// A negative leading coefficient is normalized away first. Type-I labels
/// are decided from the Hurwitz determinants of `p` (with exact
/// quasi-stability tests when the generalized Hurwitz gate fails); if none
/// applies, `p(-z)` is examined for a self-interlacing-family label or a
/// generalized Hurwitz order `k >= 1`, which is then reported with type II.
/// The zero polynomial is unclassified.
pub fn classify(p: &Polynomial) -> ClassificationReport {
    let unclassified = |certificates| ClassificationReport {
        label: Label::Unclassified,
        order_k: None,
        degeneracy_m: None,
        si_type: None,
        certificates,
    };
    if p.is_zero() {
        return unclassified(Certificates {
            normalized: false,
            delta: vec![],
            gate_passed: false,
            failed_gate: Some("zero polynomial".into()),
            scf_order: None,
            v_order: None,
            zero_root_multiplicity: 0,
            symmetric_gcd_degree: 0,
            reflected: false,
        });
    }
    let (p, normalized) = p.normalized_positive();
    let one = type_one(&p);
    let mut certificates = one.certificates;
    certificates.normalized = normalized;
    if let Some(c) = one.candidates.first() {
        let si_type =
            (c.label.in_si_family() || c.label == Label::GeneralizedHurwitz).then_some(SiType::I);
        return ClassificationReport {
            label: c.label,
            order_k: one.order,
            degeneracy_m: c.m,
            si_type,
            certificates,
        };
    }
    let (r, _) = reflect(&p).normalized_positive();
    let two = type_one(&r);
    let type_two = two.candidates.iter().find(|c| {
        c.label.in_si_family()
            || (c.label == Label::GeneralizedHurwitz && two.order.is_some_and(|k| k >= 1))
    });
    if let Some(c) = type_two {
        certificates.reflected = true;
        return ClassificationReport {
            label: c.label,
            order_k: two.order,
            degeneracy_m: c.m,
            si_type: Some(SiType::II),
            certificates,
        };
    }
    unclassified(certificates)
}

/// Self-interlacing of type I by determinants:
/// `Δ_{n-1}, Δ_{n-3}, ... > 0` and `(-1)^{⌊(n+1)/2⌋-i} Δ_{n-2i} > 0`.
pub fn is_self_interlacing_delta(p: &Polynomial) -> bool {
    let (p, _) = p.normalized_positive();
    let Ok(hm) = hurwitz_minors(&p) else {
        return false;
    };
    let n = hm.degree;
    if n == 0 || gate(&hm).is_err() {
        return false;
    }
    let half = max_order(n);
    (0..)
        .map(|i| (i, n as isize - 2 * i as isize))
        .take_while(|&(_, j)| j >= 1)
        .all(|(i, j)| (neg_one_pow(half - i) * hm.delta(j)).is_positive())
}

// ---------------------------------------------------------------------------
// Preservation families
// ---------------------------------------------------------------------------

/// The family `p_j(z) = p_0^{(j)}(z^2) + z p_1^{(j)}(z^2)` for
/// `j = 1..⌊n/2⌋-1` (derivatives taken in `u = z^2`). Each member is
/// also computed from the explicit coefficient formula
/// `a_i -> a_i e(e-1)...(e-j+1)` with `e = ⌊(n-i)/2⌋`, and the two are
/// checked to agree.
pub fn derivative_family(p: &Polynomial) -> Vec<Polynomial> {
    let n = p.deg();
    if p.is_zero() || n < 2 {
        return Vec::new();
    }
    let split = even_odd_split(p).expect("nonzero");
    (1..n / 2)
        .map(|j| {
            let member = &split.p0.nth_derivative(j).compose_square()
                + &split.p1.nth_derivative(j).compose_square().shift(1);
            debug_assert_eq!(member, derivative_member_explicit(p, j));
            member
        })
        .collect()
}

/// Member `j` of the derivative family from the explicit coefficient
/// formula.
pub fn derivative_member_explicit(p: &Polynomial, j: usize) -> Polynomial {
    let n = p.deg();
    let mut asc = vec![Q::zero(); n + 1];
    for (i, a) in p.coeffs().iter().enumerate() {
        let power = n - i;
        let (e, parity) = (power / 2, power % 2);
        if e < j {
            continue;
        }
        let falling: i64 = ((e - j + 1)..=e).map(|x| x as i64).product();
        asc[2 * (e - j) + parity] += a * Q::from_integer(falling.into());
    }
    Polynomial::from_ascending(asc)
}

/// Subsampled polynomial with stride `r` and `k = ⌊n/r⌋` (coefficients
/// `a_i` with `i > n` read as zero):
/// `a_0 z^{2k} + a_{2r-1} z^{2k-1} + a_{2r} z^{2k-2} + ... + a_{2rk-1} z + a_{2rk}`
/// for even `n`, and
/// `a_0 z^{2k+1} + a_1 z^{2k} + a_{2r} z^{2k-1} + a_{2r+1} z^{2k-2} + ... + a_{2rk+1}`
/// for odd `n`. Quasi-stability is preserved.
pub fn subsample_family(p: &Polynomial, r: usize) -> Result<Polynomial> {
    let n = p
        .degree()
        .ok_or_else(|| Error::InvalidInput("zero polynomial".into()))?;
    if r == 0 || r > n {
        return Err(Error::InvalidInput(format!(
            "stride r = {r} must satisfy 1 <= r <= n = {n}"
        )));
    }
    let k = n / r;
    let a = |i: usize| p.a(i as isize);
    let mut coeffs = vec![a(0)];
    if n % 2 == 0 {
        for t in 1..=k {
            coeffs.push(a(2 * r * t - 1));
            coeffs.push(a(2 * r * t));
        }
    } else {
        coeffs.push(a(1));
        for t in 1..=k {
            coeffs.push(a(2 * r * t));
            coeffs.push(a(2 * r * t + 1));
        }
    }
    Ok(Polynomial::new(coeffs))
}

/// Stability through the function `R = (-1)^n p(-z) / p(z)`: `p` is Hurwitz
/// stable exactly when `(-1)^{j(j+1)/2} D_j(R) > 0` for `j = 1..n`.
/// A common factor of `p(z)` and `p(-z)` lowers the pole count below `n`,
/// which already rules out stability.
pub fn new_stability_criterion(p: &Polynomial) -> bool {
    let Some(n) = p.degree() else {
        return false;
    };
    if n == 0 {
        return true;
    }
    let num = reflect(p).scale(&neg_one_pow(n));
    let r = RationalFunction::new(num, p.clone())
        .expect("nonzero")
        .reduced();
    if r.den.deg() < n {
        return false;
    }
    let series = laurent_expand(&r, n).expect("finite at infinity");
    let m = hankel_minors(&series, n).expect("enough coefficients");
    (1..=n).all(|j| (neg_one_pow(j * (j + 1) / 2) * m.d(j)).is_positive())
}

/// The finite Hurwitz matrix of the normalized polynomial (convenience for
/// reports and scans).
pub fn normalized_hurwitz_matrix(p: &Polynomial) -> ExactMatrix {
    hurwitz_matrix(&p.normalized_positive().0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn module_examples() {
        let r = classify(&p(&[1, 2, 1]));
        assert_eq!((r.label, r.order_k), (Label::HurwitzStable, Some(0)));
        let r = classify(&p(&[1, 1, -2]));
        assert_eq!(
            (r.label, r.order_k, r.si_type),
            (Label::SelfInterlacing, Some(1), Some(SiType::I))
        );
        let r = classify(&p(&[1, 4, 1, -6]));
        assert_eq!((r.label, r.order_k), (Label::GeneralizedHurwitz, Some(1)));
        let r = classify(&p(&[1, 1, 0]));
        assert_eq!((r.label, r.degeneracy_m), (Label::QuasiStable, Some(1)));
    }

    #[test]
    fn delta_pattern_alone_does_not_certify_quasi_stability() {
        // (z - 1)(z + 1)^2 has the pattern of m = 2 but a root at +1.
        let q = p(&[1, 1, -1, -1]);
        assert!(quasi_stable_delta_pattern(&q, 2));
        assert_eq!(quasi_stable(&q), None);
        assert_ne!(classify(&q).label, Label::QuasiStable);
    }

    #[test]
    fn degree_one() {
        assert_eq!(classify(&p(&[1, 3])).label, Label::HurwitzStable);
        let r = classify(&p(&[1, -3]));
        assert_eq!((r.label, r.order_k), (Label::SelfInterlacing, Some(1)));
        let r = classify(&p(&[2, 0]));
        assert_eq!((r.label, r.degeneracy_m), (Label::QuasiStable, Some(1)));
        assert_eq!(classify(&p(&[-1, -3])).label, Label::HurwitzStable);
    }

    #[test]
    fn type_two_labels() {
        // (z + 1)(z - 2): reflection of (z - 1)(z + 2).
        let r = classify(&p(&[1, -1, -2]));
        assert_eq!(
            (r.label, r.si_type),
            (Label::SelfInterlacing, Some(SiType::II))
        );
        assert_eq!(r.order_k, Some(1));
        // -z^3 + 4z^2 - z - 6 negated: reflection of a generalized polynomial.
        let r = classify(&p(&[1, -4, 1, 6]));
        assert_eq!(
            (r.label, r.si_type, r.order_k),
            (Label::GeneralizedHurwitz, Some(SiType::II), Some(1))
        );
        // z (z - 1) is almost self-interlacing of type II.
        let r = classify(&p(&[1, -1, 0]));
        assert_eq!(
            (r.label, r.si_type),
            (Label::AlmostSelfInterlacing, Some(SiType::II))
        );
        // Anti-stable polynomials are outside the taxonomy.
        assert_eq!(classify(&p(&[1, -2, 1])).label, Label::Unclassified);
    }
}
