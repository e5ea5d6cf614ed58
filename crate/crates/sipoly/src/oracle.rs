//! Independent ground truth: floating-point roots, classification straight
//! from the root-location definitions, instance generation from prescribed
//! root structure, and the experiment on "strange" polynomials.
//!
//! Nothing in this module is used by [`crate::classify`]; it exists to test
//! the exact criteria against the definitions they characterize.
//!
//! Roots are computed per squarefree factor (exact Yun decomposition), so
//! the numeric solver only ever sees simple roots and multiplicities are
//! exact. Decisions on root positions use a tolerance band: a normalized
//! quantity `<= tol` counts as zero, one `>= sqrt(tol)` as nonzero, and
//! anything in between makes the verdict indeterminate.

use std::cmp::Ordering;

use num::complex::Complex64;
use num::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::classify::{dual_transform, max_order, Label, SiType};
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::polyalg::{
    even_odd_split, laurent_expand, poly_gcd, reflect, Polynomial, RationalFunction,
};
use crate::rational::{q, qf, to_f64, Q};

/// Default decision tolerance on magnitude-normalized roots.
pub const DEFAULT_TOL: f64 = 1e-8;

// ---------------------------------------------------------------------------
// Root finding
// ---------------------------------------------------------------------------

/// Roots of a polynomial with exact multiplicities.
#[derive(Clone, Debug, PartialEq)]
pub struct RootSet {
    /// Distinct roots with their multiplicities.
    pub distinct: Vec<(Complex64, usize)>,
}

impl RootSet {
    /// All roots, each repeated according to its multiplicity.
    pub fn roots(&self) -> Vec<Complex64> {
        self.distinct
            .iter()
            .flat_map(|&(z, m)| std::iter::repeat_n(z, m))
            .collect()
    }

    /// Number of roots counted with multiplicity.
    pub fn len(&self) -> usize {
        self.distinct.iter().map(|&(_, m)| m).sum()
    }

    /// True when there are no roots.
    pub fn is_empty(&self) -> bool {
        self.distinct.is_empty()
    }

    /// Largest root modulus (`0` for an empty set).
    pub fn max_modulus(&self) -> f64 {
        self.distinct
            .iter()
            .map(|(z, _)| z.norm())
            .fold(0.0, f64::max)
    }

    /// The roots of `p(-z)`.
    pub fn negated(&self) -> RootSet {
        RootSet {
            distinct: self.distinct.iter().map(|&(z, m)| (-z, m)).collect(),
        }
    }
}

impl Serialize for RootSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let roots = self.roots();
        let mut seq = s.serialize_seq(Some(roots.len()))?;
        for z in roots {
            seq.serialize_element(&[z.re, z.im])?;
        }
        seq.end()
    }
}

/// Squarefree decomposition `p = c * f_1 f_2^2 f_3^3 ...` (Yun); returns the
/// nonconstant monic factors `f_i` with their multiplicities `i`.
pub fn squarefree_factors(p: &Polynomial) -> Vec<(Polynomial, usize)> {
    let mut out = Vec::new();
    if p.deg() == 0 {
        return out;
    }
    let a = p.monic();
    let mut c = poly_gcd(&a, &a.derivative());
    let mut w = a.exact_div(&c).expect("gcd divides");
    let mut i = 1;
    while w.deg() > 0 {
        let y = poly_gcd(&w, &c);
        let z = w.exact_div(&y).expect("gcd divides");
        if z.deg() > 0 {
            out.push((z, i));
        }
        w = y.clone();
        c = c.exact_div(&y).expect("gcd divides");
        i += 1;
    }
    out
}

fn horner(c: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut v = Complex64::new(0.0, 0.0);
    let mut d = Complex64::new(0.0, 0.0);
    for &a in c {
        d = d * z + v;
        v = v * z + a;
    }
    (v, d)
}

fn residual_ok(c: &[f64], z: Complex64) -> bool {
    let (v, _) = horner(c, z);
    let r = z.norm();
    let scale: f64 = c
        .iter()
        .rev()
        .enumerate()
        .map(|(k, a)| a.abs() * r.powi(k as i32))
        .sum();
    v.norm() <= 1e-10 * scale.max(f64::MIN_POSITIVE)
}

/// Aberth–Ehrlich simultaneous iteration for a polynomial with simple roots.
fn aberth(c: &[f64]) -> Option<Vec<Complex64>> {
    let n = c.len() - 1;
    let lead = c[0];
    let c: Vec<f64> = c.iter().map(|a| a / lead).collect();
    let bound = (1..=n)
        .map(|i| c[i].abs().powf(1.0 / i as f64))
        .fold(0.0, f64::max)
        .max(1e-3);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let t = std::f64::consts::TAU * k as f64 / n as f64 + 0.4;
            Complex64::from_polar(bound, t)
        })
        .collect();
    for _ in 0..2000 {
        let mut worst: f64 = 0.0;
        for k in 0..n {
            let (v, d) = horner(&c, z[k]);
            if v.norm() == 0.0 {
                continue;
            }
            let w = v / d;
            let s: Complex64 = (0..n)
                .filter(|&j| j != k)
                .map(|j| (z[k] - z[j]).inv())
                .sum();
            let corr = w / (Complex64::new(1.0, 0.0) - w * s);
            if !corr.re.is_finite() || !corr.im.is_finite() {
                return None;
            }
            z[k] -= corr;
            worst = worst.max(corr.norm() / z[k].norm().max(1.0));
        }
        if worst < 1e-15 {
            break;
        }
    }
    // Newton polish.
    for zk in z.iter_mut() {
        for _ in 0..3 {
            let (v, d) = horner(&c, *zk);
            if d.norm() > 0.0 {
                *zk -= v / d;
            }
        }
    }
    z.iter().all(|&zk| residual_ok(&c, zk)).then_some(z)
}

/// Eigenvalues of the companion matrix.
fn companion(c: &[f64]) -> Option<Vec<Complex64>> {
    let n = c.len() - 1;
    let m = nalgebra::DMatrix::from_fn(n, n, |i, j| {
        if i == 0 {
            -c[j + 1] / c[0]
        } else if i == j + 1 {
            1.0
        } else {
            0.0
        }
    });
    let z: Vec<Complex64> = m
        .complex_eigenvalues()
        .iter()
        .map(|e| Complex64::new(e.re, e.im))
        .collect();
    z.iter().all(|&zk| residual_ok(c, zk)).then_some(z)
}

fn simple_roots(f: &Polynomial) -> Result<Vec<Complex64>> {
    let c: Vec<f64> = f.coeffs().iter().map(to_f64).collect();
    match c.len() {
        0 | 1 => Ok(vec![]),
        2 => Ok(vec![Complex64::new(-c[1] / c[0], 0.0)]),
        _ => aberth(&c).or_else(|| companion(&c)).ok_or_else(|| {
            Error::OracleFailure(format!("root iteration did not converge for {f}"))
        }),
    }
}

/// All roots of `p` with multiplicities: exact squarefree decomposition,
/// then Aberth–Ehrlich iteration on each factor with a companion-matrix
/// eigenvalue fallback. Every root satisfies `|f(z)| <= 1e-10 * sum |a_i||z|^i`
/// for its factor `f`.
pub fn numeric_roots(p: &Polynomial) -> Result<RootSet> {
    if p.deg() == 0 {
        return Err(Error::InvalidInput("roots need degree >= 1".into()));
    }
    let mut distinct = Vec::new();
    for (f, m) in squarefree_factors(p) {
        for z in simple_roots(&f)? {
            distinct.push((z, m));
        }
    }
    Ok(RootSet { distinct })
}

// ---------------------------------------------------------------------------
// Discrete root patterns
// ---------------------------------------------------------------------------

/// A real root reduced to what the definitions need.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct RealSite {
    /// `-1`, `0` or `1`.
    sign: i8,
    /// Rank of `|x|` among the distinct magnitudes of real roots.
    rank: usize,
    mult: usize,
}

/// Root configuration as sign/order data, shared by exact and numeric
/// inputs.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Pattern {
    /// Real roots sorted by magnitude.
    real: Vec<RealSite>,
    /// Real-part signs of nonreal roots, with multiplicity.
    nonreal: Vec<(i8, usize)>,
    degree: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Band {
    Zero,
    Nonzero,
}

fn band(x: f64, scale: f64, tol: f64) -> Result<Band> {
    let a = x.abs() / scale;
    if a <= tol {
        Ok(Band::Zero)
    } else if a >= tol.sqrt() {
        Ok(Band::Nonzero)
    } else {
        Err(Error::OracleFailure(format!(
            "indeterminate: normalized quantity {a:e} inside the tolerance band"
        )))
    }
}

fn sign_band(x: f64, scale: f64, tol: f64) -> Result<i8> {
    Ok(match band(x, scale, tol)? {
        Band::Zero => 0,
        Band::Nonzero => {
            if x > 0.0 {
                1
            } else {
                -1
            }
        }
    })
}

fn numeric_pattern(roots: &RootSet, tol: f64) -> Result<Pattern> {
    let scale = roots.max_modulus().max(f64::MIN_POSITIVE);
    // Distinct roots must be separated.
    for (i, (a, _)) in roots.distinct.iter().enumerate() {
        for (b, _) in &roots.distinct[i + 1..] {
            band((a - b).norm(), scale, tol)?;
            if band((a - b).norm(), scale, tol)? == Band::Zero {
                return Err(Error::OracleFailure(
                    "indeterminate: distinct roots coincide".into(),
                ));
            }
        }
    }
    let mut reals = Vec::new();
    let mut nonreal = Vec::new();
    for &(z, m) in &roots.distinct {
        if band(z.im, scale, tol)? == Band::Zero {
            reals.push((z.re, m));
        } else {
            nonreal.push((sign_band(z.re, scale, tol)?, m));
        }
    }
    reals.sort_by(|a, b| a.0.abs().partial_cmp(&b.0.abs()).unwrap_or(Ordering::Equal));
    let mut real = Vec::with_capacity(reals.len());
    let mut rank = 0;
    for (i, &(x, m)) in reals.iter().enumerate() {
        if i > 0 && band(x.abs() - reals[i - 1].0.abs(), scale, tol)? == Band::Nonzero {
            rank += 1;
        }
        real.push(RealSite {
            sign: sign_band(x, scale, tol)?,
            rank,
            mult: m,
        });
    }
    Ok(Pattern {
        real,
        nonreal,
        degree: roots.len(),
    })
}

fn exact_pattern(real_roots: &[Q], pairs: &[(Q, Q)]) -> Pattern {
    let mut reals: Vec<Q> = real_roots.to_vec();
    reals.sort_by(|a, b| a.abs().cmp(&b.abs()).then(a.cmp(b)));
    let mut real: Vec<RealSite> = Vec::new();
    let mut rank = 0;
    for (i, x) in reals.iter().enumerate() {
        if i > 0 && reals[i - 1] == *x {
            real.last_mut().expect("previous root").mult += 1;
            continue;
        }
        if i > 0 && reals[i - 1].abs() != x.abs() {
            rank += 1;
        }
        real.push(RealSite {
            sign: crate::rational::sign(x),
            rank,
            mult: 1,
        });
    }
    let mut nonreal = Vec::new();
    for (re, _) in pairs {
        nonreal.push((crate::rational::sign(re), 2));
    }
    Pattern {
        real,
        nonreal,
        degree: real_roots.len() + 2 * pairs.len(),
    }
}

impl Pattern {
    fn stable(&self) -> bool {
        self.real.iter().all(|r| r.sign < 0) && self.nonreal.iter().all(|&(s, _)| s < 0)
    }

    fn quasi_stable(&self) -> Option<usize> {
        if self.real.iter().any(|r| r.sign > 0) || self.nonreal.iter().any(|&(s, _)| s > 0) {
            return None;
        }
        let m = self
            .real
            .iter()
            .filter(|r| r.sign == 0)
            .map(|r| r.mult)
            .sum::<usize>()
            + self
                .nonreal
                .iter()
                .filter(|&&(s, _)| s == 0)
                .map(|&(_, m)| m)
                .sum::<usize>();
        Some(m)
    }

    /// Simple real nonzero roots with strictly increasing magnitudes whose
    /// signs alternate starting with `first`.
    fn alternating(sites: &[RealSite], first: i8) -> bool {
        sites.iter().enumerate().all(|(i, r)| {
            let expected = if i % 2 == 0 { first } else { -first };
            r.mult == 1 && r.sign == expected && (i == 0 || sites[i - 1].rank < r.rank)
        })
    }

    fn self_interlacing(&self) -> bool {
        self.nonreal.is_empty() && self.degree > 0 && Self::alternating(&self.real, 1)
    }

    /// `z` times a self-interlacing polynomial whose smallest root is
    /// negative (the type-I member of the almost self-interlacing family).
    fn almost_self_interlacing(&self) -> bool {
        self.nonreal.is_empty()
            && self
                .real
                .first()
                .is_some_and(|r| r.sign == 0 && r.mult == 1)
            && Self::alternating(&self.real[1..], -1)
    }

    /// Generalized Hurwitz order from the definition (`0` for stable).
    fn generalized_order(&self) -> Option<usize> {
        if self.nonreal.iter().any(|&(s, _)| s >= 0) {
            return None;
        }
        let mus: Vec<&RealSite> = self.real.iter().filter(|r| r.sign >= 0).collect();
        if mus.iter().any(|r| r.mult != 1) {
            return None;
        }
        let k = mus.len();
        if k == 0 {
            return Some(0);
        }
        let negatives: Vec<&RealSite> = self.real.iter().filter(|r| r.sign < 0).collect();
        if negatives
            .iter()
            .any(|x| mus.iter().any(|m| m.rank == x.rank))
        {
            return None; // p(-mu) = 0
        }
        let count = |lo: Option<usize>, hi: Option<usize>| -> usize {
            negatives
                .iter()
                .filter(|x| lo.is_none_or(|l| x.rank > l) && hi.is_none_or(|h| x.rank < h))
                .map(|x| x.mult)
                .sum()
        };
        // (-mu_1, 0): even; a zero mu_1 leaves the interval empty.
        if mus[0].sign > 0 && count(None, Some(mus[0].rank)) % 2 != 0 {
            return None;
        }
        for w in mus.windows(2) {
            if count(Some(w[0].rank), Some(w[1].rank)) % 2 != 1 {
                return None;
            }
        }
        let outer = count(Some(mus[k - 1].rank), None);
        let want_odd = self.degree.is_multiple_of(2);
        if (outer % 2 == 1) != want_odd {
            return None;
        }
        // Smallest-magnitude negatives below a zero mu_1 are counted in the
        // intervals above since rank(0) is the smallest rank.
        Some(k)
    }
}

/// Classification obtained from root locations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RootClassification {
    /// Label by the definitions and the shared precedence order.
    pub label: Label,
    /// Generalized Hurwitz order (of `p(-z)` for type II).
    pub order_k: Option<usize>,
    /// Degeneracy index for the quasi-stable family.
    pub degeneracy_m: Option<usize>,
    /// Type I or II.
    pub si_type: Option<SiType>,
}

struct PatternLabels {
    candidates: Vec<(Label, Option<usize>)>,
    order: Option<usize>,
}

impl PatternLabels {
    fn empty() -> Self {
        PatternLabels {
            candidates: Vec::new(),
            order: None,
        }
    }
}

fn pattern_labels(pat: &Pattern, dual_m: Option<usize>) -> PatternLabels {
    let mut candidates = Vec::new();
    let order = pat.generalized_order();
    if pat.stable() {
        candidates.push((Label::HurwitzStable, None));
    }
    if let Some(m) = pat.quasi_stable().filter(|&m| m >= 1) {
        candidates.push((Label::QuasiStable, Some(m)));
    }
    if pat.self_interlacing() {
        candidates.push((Label::SelfInterlacing, None));
    }
    if pat.almost_self_interlacing() {
        candidates.push((Label::AlmostSelfInterlacing, Some(1)));
    }
    if let Some(m) = dual_m.filter(|&m| m >= 2) {
        candidates.push((Label::QuasiSelfInterlacing, Some(m)));
    }
    if order.is_some() {
        candidates.push((Label::GeneralizedHurwitz, None));
    }
    PatternLabels { candidates, order }
}

fn combine(one: PatternLabels, two: PatternLabels) -> RootClassification {
    if let Some(&(label, m)) = one.candidates.first() {
        let typed = matches!(
            label,
            Label::SelfInterlacing
                | Label::AlmostSelfInterlacing
                | Label::QuasiSelfInterlacing
                | Label::GeneralizedHurwitz
        );
        return RootClassification {
            label,
            order_k: one.order,
            degeneracy_m: m,
            si_type: typed.then_some(SiType::I),
        };
    }
    let found = two.candidates.iter().find(|(l, _)| match l {
        Label::SelfInterlacing | Label::AlmostSelfInterlacing | Label::QuasiSelfInterlacing => true,
        Label::GeneralizedHurwitz => two.order.is_some_and(|k| k >= 1),
        _ => false,
    });
    match found {
        Some(&(label, m)) => RootClassification {
            label,
            order_k: two.order,
            degeneracy_m: m,
            si_type: Some(SiType::II),
        },
        None => RootClassification {
            label: Label::Unclassified,
            order_k: None,
            degeneracy_m: None,
            si_type: None,
        },
    }
}

/// Classifies a root set by the definitions alone (half-plane membership,
/// realness, simplicity, interval parities), with the same label precedence
/// as the exact classifier. Quasi-self-interlacing needs the dual
/// polynomial and is therefore only detected by
/// [`classify_polynomial_by_roots`].
///
/// Returns an oracle-failure error when some decision falls inside the
/// tolerance band.
pub fn classify_by_roots(roots: &RootSet, tol: f64) -> Result<RootClassification> {
    let one = pattern_labels(&numeric_pattern(roots, tol)?, None);
    let two = pattern_labels(&numeric_pattern(&roots.negated(), tol)?, None);
    Ok(combine(one, two))
}

/// Root-based classification of a polynomial, including the
/// quasi-self-interlacing test on the roots of its duals.
pub fn classify_polynomial_by_roots(p: &Polynomial, tol: f64) -> Result<RootClassification> {
    if p.deg() == 0 {
        return Ok(RootClassification {
            label: Label::HurwitzStable,
            order_k: Some(0),
            degeneracy_m: None,
            si_type: None,
        });
    }
    let roots = numeric_roots(p)?;
    // The dual only matters when no other label applies: a generalized
    // Hurwitz polynomial shares at most a simple zero at the origin with
    // p(-z), so it is never quasi-self-interlacing with m >= 2. Skipping the
    // dual otherwise keeps its (uncontrolled) roots out of the decision.
    let labels = |pat: Pattern, f: &Polynomial| -> Result<PatternLabels> {
        let plain = pattern_labels(&pat, None);
        if !plain.candidates.is_empty() {
            return Ok(plain);
        }
        let dual_m = numeric_pattern(&numeric_roots(&dual_transform(f))?, tol)?.quasi_stable();
        Ok(pattern_labels(&pat, dual_m))
    };
    let one = labels(numeric_pattern(&roots, tol)?, p)?;
    if !one.candidates.is_empty() {
        return Ok(combine(one, PatternLabels::empty()));
    }
    let two = labels(numeric_pattern(&roots.negated(), tol)?, &reflect(p))?;
    Ok(combine(one, two))
}

/// Number of roots in the closed right half-plane, counted with
/// multiplicity.
pub fn closed_rhp_count(roots: &RootSet, tol: f64) -> Result<usize> {
    let scale = roots.max_modulus().max(f64::MIN_POSITIVE);
    let mut n = 0;
    for &(z, m) in &roots.distinct {
        if sign_band(z.re, scale, tol)? >= 0 {
            n += m;
        }
    }
    Ok(n)
}

// ---------------------------------------------------------------------------
// Instance generation
// ---------------------------------------------------------------------------

/// Root structure to realize.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Target {
    /// All roots in the open left half-plane.
    HurwitzStable,
    /// Closed left half-plane with `m` imaginary-axis roots.
    QuasiStable {
        /// Degeneracy index.
        m: usize,
    },
    /// Self-interlacing of the given type.
    SelfInterlacing(SiType),
    /// Generalized Hurwitz (type I) of order `k >= 1`.
    GeneralizedHurwitz {
        /// Order.
        k: usize,
    },
}

/// Exact root data of an instance: real roots (with repetition) and
/// complex-conjugate pairs `re ± i im` with `im > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureSpec {
    /// Intended structure.
    pub target: Target,
    /// Degree.
    pub degree: usize,
    /// Real roots, repeated by multiplicity.
    pub real_roots: Vec<Q>,
    /// Complex pairs `(re, im)`.
    pub complex_pairs: Vec<(Q, Q)>,
}

/// Expected classification of a generated instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Expected {
    /// Label.
    pub label: Label,
    /// Order `k`.
    pub order_k: Option<usize>,
    /// Degeneracy index `m`.
    pub degeneracy_m: Option<usize>,
    /// Type.
    pub si_type: Option<SiType>,
}

impl StructureSpec {
    fn pattern(&self) -> Pattern {
        exact_pattern(&self.real_roots, &self.complex_pairs)
    }

    /// Checks that the root data has the target structure (exactly, on the
    /// rational roots).
    pub fn validate(&self) -> Result<()> {
        let bad = |why: &str| Err(Error::Unrealizable(format!("{:?}: {why}", self.target)));
        if self.real_roots.len() + 2 * self.complex_pairs.len() != self.degree {
            return bad("root count differs from the degree");
        }
        if self.complex_pairs.iter().any(|(_, im)| !im.is_positive()) {
            return bad("complex pairs need a positive imaginary part");
        }
        let pat = self.pattern();
        let ok = match self.target {
            Target::HurwitzStable => pat.stable(),
            Target::QuasiStable { m } => m >= 1 && pat.quasi_stable() == Some(m),
            Target::SelfInterlacing(SiType::I) => pat.self_interlacing(),
            Target::SelfInterlacing(SiType::II) => {
                let neg: Vec<Q> = self.real_roots.iter().map(|x| -x).collect();
                !neg.is_empty() && exact_pattern(&neg, &[]).self_interlacing()
            }
            Target::GeneralizedHurwitz { k } => {
                k >= 1 && k <= max_order(self.degree) && pat.generalized_order() == Some(k)
            }
        };
        if ok {
            Ok(())
        } else {
            bad("root data does not have the target structure")
        }
    }

    /// Classification implied by the construction and the label precedence
    /// (stable, quasi-stable, self-interlacing, almost self-interlacing,
    /// generalized Hurwitz).
    pub fn expected(&self) -> Expected {
        let n = self.degree;
        let e = |label, order_k, degeneracy_m, si_type| Expected {
            label,
            order_k,
            degeneracy_m,
            si_type,
        };
        match self.target {
            Target::HurwitzStable => e(Label::HurwitzStable, Some(0), None, None),
            Target::QuasiStable { m } => {
                e(Label::QuasiStable, (m == 1).then_some(1), Some(m), None)
            }
            Target::SelfInterlacing(t) => {
                e(Label::SelfInterlacing, Some(max_order(n)), None, Some(t))
            }
            Target::GeneralizedHurwitz { k } => {
                let zero = self.real_roots.iter().any(Zero::is_zero);
                if zero && k == 1 {
                    e(Label::QuasiStable, Some(1), Some(1), None)
                } else if k == max_order(n) && zero {
                    e(
                        Label::AlmostSelfInterlacing,
                        Some(k),
                        Some(1),
                        Some(SiType::I),
                    )
                } else if k == max_order(n) {
                    e(Label::SelfInterlacing, Some(k), None, Some(SiType::I))
                } else {
                    e(Label::GeneralizedHurwitz, Some(k), None, Some(SiType::I))
                }
            }
        }
    }
}

/// Expands the root data into an exact polynomial after validating it. The
/// seed picks a positive leading multiplier in `{1, 2, 3}` (seed `0` gives
/// a monic polynomial).
pub fn generate_instance(spec: &StructureSpec, seed: u64) -> Result<Polynomial> {
    spec.validate()?;
    let mut p = Polynomial::from_roots(&spec.real_roots);
    for (re, im) in &spec.complex_pairs {
        let quad = Polynomial::new(vec![q(1), -(re * q(2)), re * re + im * im]);
        p = &p * &quad;
    }
    let lead = if seed == 0 {
        q(1)
    } else {
        q(ChaCha8Rng::seed_from_u64(seed).gen_range(1..=3))
    };
    Ok(p.scale(&lead))
}

/// Draws `count` distinct magnitudes from the grid `{1/8, 2/8, ..., 5}`,
/// sorted increasingly.
fn grid_magnitudes<R: Rng>(rng: &mut R, count: usize) -> Vec<Q> {
    let mut idx: Vec<i64> = (1..=40).collect();
    idx.shuffle(rng);
    let mut chosen: Vec<i64> = idx.into_iter().take(count).collect();
    chosen.sort_unstable();
    chosen.into_iter().map(|k| qf(k, 8)).collect()
}

fn grid_value<R: Rng>(rng: &mut R) -> Q {
    qf(rng.gen_range(1..=40), 8)
}

fn stable_roots<R: Rng>(rng: &mut R, degree: usize) -> (Vec<Q>, Vec<(Q, Q)>) {
    let pairs = rng.gen_range(0..=degree / 2);
    let mut real: Vec<Q> = Vec::new();
    for _ in 0..degree - 2 * pairs {
        if !real.is_empty() && rng.gen_bool(0.15) {
            let last = real.last().cloned().expect("nonempty");
            real.push(last);
        } else {
            real.push(-grid_value(rng));
        }
    }
    let complex = (0..pairs)
        .map(|_| (-grid_value(rng), grid_value(rng)))
        .collect();
    (real, complex)
}

/// Draws root data with the target structure (magnitudes on the `k/8`
/// grid, distinct magnitudes wherever the structure requires them).
pub fn sample_spec<R: Rng>(target: Target, degree: usize, rng: &mut R) -> Result<StructureSpec> {
    let unreal = |why: &str| {
        Err(Error::Unrealizable(format!(
            "{target:?}, degree {degree}: {why}"
        )))
    };
    let (real_roots, complex_pairs) = match target {
        Target::HurwitzStable => stable_roots(rng, degree),
        Target::QuasiStable { m } => {
            if m == 0 || m > degree || m > 2 {
                return unreal("supported degeneracy indices are 1 and 2");
            }
            let (mut real, mut pairs) = stable_roots(rng, degree - m);
            if m == 1 || rng.gen_bool(0.5) {
                real.extend(std::iter::repeat_n(Q::zero(), m));
            } else {
                pairs.push((Q::zero(), grid_value(rng)));
            }
            (real, pairs)
        }
        Target::SelfInterlacing(t) => {
            if degree == 0 {
                return unreal("degree must be positive");
            }
            let first = if t == SiType::I { 1 } else { -1 };
            let real = grid_magnitudes(rng, degree)
                .into_iter()
                .enumerate()
                .map(|(i, x)| if (i % 2 == 0) == (first == 1) { x } else { -x })
                .collect();
            (real, vec![])
        }
        Target::GeneralizedHurwitz { k } => {
            if k == 0 || k > max_order(degree) {
                return unreal("order out of range");
            }
            generalized_roots(rng, degree, k)
        }
    };
    let spec = StructureSpec {
        target,
        degree,
        real_roots,
        complex_pairs,
    };
    spec.validate()?;
    Ok(spec)
}

/// Root layout for a generalized Hurwitz polynomial of order `k`.
fn generalized_roots<R: Rng>(rng: &mut R, n: usize, k: usize) -> (Vec<Q>, Vec<(Q, Q)>) {
    let zero_mu = rng.gen_bool(0.25);
    let outer_base = usize::from(n.is_multiple_of(2));
    let mut budget = n - (2 * k - 1 + outer_base);
    // Negative-root counts: below mu_1, between consecutive mu's, outside.
    let mut below = 0usize;
    let mut inner = vec![1usize; k - 1];
    let mut outer = outer_base;
    let mut pairs = 0usize;
    while budget >= 2 {
        match rng.gen_range(0..4) {
            0 if !zero_mu => below += 2,
            1 if k > 1 => {
                let i = rng.gen_range(0..k - 1);
                inner[i] += 2;
            }
            2 => outer += 2,
            _ => pairs += 1,
        }
        budget -= 2;
    }
    // Slots in increasing magnitude: 'n' negative root, 'm' a mu.
    let mut slots = Vec::new();
    slots.extend(std::iter::repeat_n('n', below));
    if !zero_mu {
        slots.push('m');
    }
    for c in &inner {
        slots.extend(std::iter::repeat_n('n', *c));
        slots.push('m');
    }
    slots.extend(std::iter::repeat_n('n', outer));
    let mags = grid_magnitudes(rng, slots.len());
    let mut real: Vec<Q> = slots
        .iter()
        .zip(mags)
        .map(|(s, x)| if *s == 'm' { x } else { -x })
        .collect();
    if zero_mu {
        real.push(Q::zero());
    }
    let complex = (0..pairs)
        .map(|_| (-grid_value(rng), grid_value(rng)))
        .collect();
    (real, complex)
}

/// Convenience: samples root data for `target` from `seed` and expands it.
pub fn random_instance(
    target: Target,
    degree: usize,
    seed: u64,
) -> Result<(StructureSpec, Polynomial)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let spec = sample_spec(target, degree, &mut rng)?;
    let p = generate_instance(&spec, seed)?;
    Ok((spec, p))
}

// ---------------------------------------------------------------------------
// Partial fractions
// ---------------------------------------------------------------------------

/// Numeric Mittag-Leffler form
/// `R(u) = -alpha u + beta + sum gamma_j / (u - pole_j)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NumericPartialFraction {
    /// Negated linear coefficient.
    pub alpha: f64,
    /// Constant term.
    pub beta: f64,
    /// Pole locations, increasing.
    pub poles: Vec<f64>,
    /// Residues at the poles.
    pub residues: Vec<f64>,
}

impl NumericPartialFraction {
    /// The R-function sign conditions: all residues positive and
    /// `alpha >= 0`.
    pub fn is_r_function(&self) -> bool {
        self.alpha >= 0.0 && self.residues.iter().all(|&g| g > 0.0)
    }
}

/// Partial fractions of a function whose reduced denominator has simple
/// real roots; residues are `num(x)/den'(x)`.
pub fn numeric_partial_fractions(r: &RationalFunction) -> Result<NumericPartialFraction> {
    let red = r.reduced();
    let series = laurent_expand(&red, 0)?;
    let poles = if red.den.deg() == 0 {
        vec![]
    } else {
        let roots = numeric_roots(&red.den)?;
        let scale = roots.max_modulus().max(1.0);
        let mut xs = Vec::new();
        for &(z, m) in &roots.distinct {
            if m > 1 {
                return Err(Error::InvalidInput("multiple pole".into()));
            }
            if z.im.abs() > DEFAULT_TOL * scale {
                return Err(Error::InvalidInput("nonreal pole".into()));
            }
            xs.push(z.re);
        }
        xs.sort_by(|a, b| a.partial_cmp(b).unwrap_or(Ordering::Equal));
        xs
    };
    let fc = |p: &Polynomial| p.coeffs().iter().map(to_f64).collect::<Vec<f64>>();
    let (num, dd) = (fc(&red.num), fc(&red.den.derivative()));
    let eval = |c: &[f64], x: f64| c.iter().fold(0.0, |acc, a| acc * x + a);
    let residues = poles
        .iter()
        .map(|&x| eval(&num, x) / eval(&dd, x))
        .collect();
    Ok(NumericPartialFraction {
        alpha: -to_f64(&series.s_minus2),
        beta: to_f64(&series.s_minus1),
        poles,
        residues,
    })
}

// ---------------------------------------------------------------------------
// Strange polynomials
// ---------------------------------------------------------------------------

/// Zero counts and pattern checks for one auxiliary polynomial.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StrangeCounts {
    /// Coefficients of the auxiliary polynomial.
    #[serde(serialize_with = "crate::serde_util::rationals")]
    pub coeffs: Vec<Q>,
    /// Its roots.
    pub roots: RootSet,
    /// Roots in the open right half-plane.
    pub rhp: usize,
    /// Roots in the open left half-plane.
    pub lhp: usize,
    /// Roots on the imaginary axis.
    pub imaginary_axis: usize,
    /// All roots simple.
    pub simple: bool,
    /// At least one nonreal root.
    pub has_nonreal: bool,
    /// `rhp = ⌊(n+1)/2⌋`, `lhp = ⌊n/2⌋`, nothing on the axis, all simple.
    pub counts_hold: bool,
    /// Distinct right-half-plane moduli `λ` and left-half-plane moduli `μ`
    /// interlace as `λ_1 < μ_1 < λ_2 < μ_2 < ...`.
    pub interlacing_holds: bool,
}

/// Report on the auxiliary polynomials of a stable polynomial.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StrangeReport {
    /// Degree of `p`.
    pub degree: usize,
    /// `q(z) = p_0(-z^2) + z p_1(z^2)`.
    pub q: StrangeCounts,
    /// `p_0(z^2) + z p_1(-z^2)`.
    pub companion: StrangeCounts,
}

fn neg_u(f: &Polynomial) -> Polynomial {
    Polynomial::from_ascending(
        f.ascending()
            .into_iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { -c } else { c })
            .collect(),
    )
}

fn strange_counts(f: &Polynomial, n: usize, tol: f64) -> Result<StrangeCounts> {
    let roots = numeric_roots(f)?;
    let scale = roots.max_modulus().max(f64::MIN_POSITIVE);
    let (mut rhp, mut lhp, mut axis) = (0, 0, 0);
    let mut lam = Vec::new();
    let mut mu = Vec::new();
    let mut has_nonreal = false;
    for &(z, m) in &roots.distinct {
        if z.im.abs() > tol * scale {
            has_nonreal = true;
        }
        match sign_band(z.re, scale, tol)? {
            1 => {
                rhp += m;
                lam.push(z.norm());
            }
            -1 => {
                lhp += m;
                mu.push(z.norm());
            }
            _ => axis += m,
        }
    }
    let distinct = |v: &mut Vec<f64>| {
        v.sort_by(|a, b| a.partial_cmp(b).unwrap_or(Ordering::Equal));
        v.dedup_by(|a, b| (*a - *b).abs() <= tol * scale);
    };
    distinct(&mut lam);
    distinct(&mut mu);
    let simple = roots.distinct.iter().all(|&(_, m)| m == 1);
    let mut merged: Vec<(f64, char)> = lam.iter().map(|&x| (x, 'l')).collect();
    merged.extend(mu.iter().map(|&x| (x, 'm')));
    merged.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap_or(Ordering::Equal));
    let interlacing_holds = !merged.is_empty()
        && merged
            .iter()
            .enumerate()
            .all(|(i, &(_, c))| c == if i % 2 == 0 { 'l' } else { 'm' })
        && merged.windows(2).all(|w| w[1].0 - w[0].0 > tol * scale);
    Ok(StrangeCounts {
        coeffs: f.coeffs().to_vec(),
        roots,
        rhp,
        lhp,
        imaginary_axis: axis,
        simple,
        has_nonreal,
        counts_hold: rhp == n.div_ceil(2) && lhp == n / 2 && axis == 0 && simple,
        interlacing_holds,
    })
}

/// Builds `q(z) = p_0(-z^2) + z p_1(z^2)` and `p_0(z^2) + z p_1(-z^2)` for a
/// Hurwitz stable `p` and reports their zero counts and the interlacing of
/// moduli. Exploratory: nothing is asserted.
pub fn strange_experiment(p: &Polynomial) -> Result<StrangeReport> {
    if !crate::classify::is_stable_delta(p) || p.deg() == 0 {
        return Err(Error::InvalidInput(
            "the experiment needs a Hurwitz stable polynomial of degree >= 1".into(),
        ));
    }
    let n = p.deg();
    let split = even_odd_split(p)?;
    let q = &neg_u(&split.p0).compose_square() + &split.p1.compose_square().shift(1);
    let c = &split.p0.compose_square() + &neg_u(&split.p1).compose_square().shift(1);
    Ok(StrangeReport {
        degree: n,
        q: strange_counts(&q, n, DEFAULT_TOL)?,
        companion: strange_counts(&c, n, DEFAULT_TOL)?,
    })
}

/// Eigenvalues of an exact matrix in floating point.
pub fn numeric_eigenvalues(m: &ExactMatrix) -> Vec<Complex64> {
    m.to_f64()
        .complex_eigenvalues()
        .iter()
        .map(|e| Complex64::new(e.re, e.im))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    fn sorted_real(rs: &RootSet) -> Vec<f64> {
        let mut v: Vec<f64> = rs.roots().iter().map(|z| z.re).collect();
        v.sort_by(|a, b| a.partial_cmp(b).unwrap());
        v
    }

    #[test]
    fn roots_of_examples() {
        let r = sorted_real(&numeric_roots(&p(&[1, 4, 1, -6])).unwrap());
        for (a, b) in r.iter().zip([-3.0, -2.0, 1.0]) {
            assert!((a - b).abs() < 1e-12);
        }
        let r = numeric_roots(&p(&[1, 2, 1])).unwrap();
        assert_eq!(r.distinct.len(), 1);
        assert_eq!(r.distinct[0].1, 2);
    }

    #[test]
    fn root_classification_examples() {
        let c =
            classify_by_roots(&numeric_roots(&p(&[1, 4, 1, -6])).unwrap(), DEFAULT_TOL).unwrap();
        assert_eq!((c.label, c.order_k), (Label::GeneralizedHurwitz, Some(1)));
        let c = classify_by_roots(&numeric_roots(&p(&[1, 2, 1])).unwrap(), DEFAULT_TOL).unwrap();
        assert_eq!(c.label, Label::HurwitzStable);
        let c = classify_by_roots(&numeric_roots(&p(&[1, 1, -2])).unwrap(), DEFAULT_TOL).unwrap();
        assert_eq!(
            (c.label, c.si_type),
            (Label::SelfInterlacing, Some(SiType::I))
        );
    }

    #[test]
    fn generator_examples() {
        let spec = StructureSpec {
            target: Target::SelfInterlacing(SiType::I),
            degree: 2,
            real_roots: vec![q(1), q(-2)],
            complex_pairs: vec![],
        };
        assert_eq!(generate_instance(&spec, 0).unwrap(), p(&[1, 1, -2]));
        let spec = StructureSpec {
            target: Target::GeneralizedHurwitz { k: 1 },
            degree: 3,
            real_roots: vec![q(1), q(-2), q(-3)],
            complex_pairs: vec![],
        };
        assert_eq!(generate_instance(&spec, 0).unwrap(), p(&[1, 4, 1, -6]));
        let bad = StructureSpec {
            target: Target::SelfInterlacing(SiType::I),
            degree: 2,
            real_roots: vec![q(2), q(-1)],
            complex_pairs: vec![],
        };
        assert!(generate_instance(&bad, 0).is_err());
    }

    #[test]
    fn partial_fraction_examples() {
        let r = RationalFunction::new(p(&[1, 1]), p(&[4, -6])).unwrap();
        let pf = numeric_partial_fractions(&r).unwrap();
        assert!((pf.poles[0] - 1.5).abs() < 1e-12 && (pf.residues[0] - 0.625).abs() < 1e-12);
        let r = RationalFunction::new(p(&[1]), p(&[1, 0, 1])).unwrap();
        assert!(numeric_partial_fractions(&r).is_err());
    }

    #[test]
    fn strange_degree_two() {
        let rep = strange_experiment(&p(&[1, 2, 1])).unwrap();
        assert!(rep.q.counts_hold);
        assert!(!rep.q.has_nonreal);
        assert!(!rep.q.interlacing_holds);
        assert!(strange_experiment(&p(&[1, 1, -2])).is_err());
    }
}
