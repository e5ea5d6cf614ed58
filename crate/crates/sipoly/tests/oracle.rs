//! The numeric oracle: root finding, root-pattern classification, instance
//! generation, partial fractions and the auxiliary-polynomial experiment.

mod common;

use common::{
    any_instance, instances_of, p, r, rf, si_one_family, small_poly, stable_family, targets,
};
use num::complex::Complex64;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sipoly::classify::{classify, is_r_function, max_order};
use sipoly::oracle::{
    classify_by_roots, classify_polynomial_by_roots, closed_rhp_count, generate_instance,
    numeric_partial_fractions, numeric_roots, random_instance, sample_spec, squarefree_factors,
    strange_experiment, RootSet, StructureSpec, Target, DEFAULT_TOL,
};
use sipoly::polyalg::associated_function;
use sipoly::rational::to_f64;
use sipoly::{Error, Label, Polynomial, SiType};

fn sorted_real_parts(rs: &RootSet) -> Vec<f64> {
    let mut v: Vec<f64> = rs.roots().iter().map(|z| z.re).collect();
    v.sort_by(|a, b| a.partial_cmp(b).unwrap());
    v
}

fn close(a: &[f64], b: &[f64]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-10)
}

fn real_roots(xs: &[f64]) -> RootSet {
    RootSet {
        distinct: xs.iter().map(|&x| (Complex64::new(x, 0.0), 1)).collect(),
    }
}

// ---------------------------------------------------------------------------
// Root finding
// ---------------------------------------------------------------------------

#[test]
fn numeric_roots_examples() {
    let rs = numeric_roots(&p(&[1, 1, -2])).unwrap();
    assert!(close(&sorted_real_parts(&rs), &[-2.0, 1.0]));
    let rs = numeric_roots(&p(&[1, 2, 1])).unwrap();
    assert_eq!(rs.distinct.len(), 1);
    assert_eq!(rs.distinct[0].1, 2);
    assert!(close(&sorted_real_parts(&rs), &[-1.0, -1.0]));
    let rs = numeric_roots(&p(&[1, 4, 1, -6])).unwrap();
    assert!(close(&sorted_real_parts(&rs), &[-3.0, -2.0, 1.0]));
}

#[test]
fn numeric_roots_of_larger_examples() {
    let rs = numeric_roots(&p(&[1, 2, -13, -14, 24])).unwrap();
    assert!(close(&sorted_real_parts(&rs), &[-4.0, -2.0, 1.0, 3.0]));
    let rs = numeric_roots(&p(&[2, 9, 7, -6])).unwrap();
    assert!(close(&sorted_real_parts(&rs), &[-3.0, -2.0, 0.5]));
    // (z^2 + z + 1)^2: a double complex pair.
    let rs = numeric_roots(&p(&[1, 2, 3, 2, 1])).unwrap();
    assert_eq!(rs.len(), 4);
    assert!(rs
        .distinct
        .iter()
        .all(|&(z, m)| m == 2 && (z.re + 0.5).abs() < 1e-10));
}

#[test]
fn squarefree_examples() {
    // (z + 1)^2 (z - 2)
    let f = squarefree_factors(&p(&[1, 0, -3, -2]));
    assert_eq!(f, vec![(p(&[1, -2]), 1), (p(&[1, 1]), 2)]);
    assert!(squarefree_factors(&p(&[3])).is_empty());
}

#[test]
fn numeric_roots_rejects_constants() {
    assert!(matches!(
        numeric_roots(&p(&[4])),
        Err(Error::InvalidInput(_))
    ));
}

// ---------------------------------------------------------------------------
// Classification by roots
// ---------------------------------------------------------------------------

#[test]
fn classify_by_roots_examples() {
    let c = classify_by_roots(&real_roots(&[1.0, -2.0, -3.0]), DEFAULT_TOL).unwrap();
    assert_eq!((c.label, c.order_k), (Label::GeneralizedHurwitz, Some(1)));
    let c = classify_by_roots(
        &RootSet {
            distinct: vec![(Complex64::new(-1.0, 0.0), 2)],
        },
        DEFAULT_TOL,
    )
    .unwrap();
    assert_eq!((c.label, c.order_k), (Label::HurwitzStable, Some(0)));
    let c = classify_by_roots(&real_roots(&[1.0, -2.0]), DEFAULT_TOL).unwrap();
    assert_eq!(
        (c.label, c.si_type),
        (Label::SelfInterlacing, Some(SiType::I))
    );
    let c = classify_by_roots(&real_roots(&[-1.0, 2.0]), DEFAULT_TOL).unwrap();
    assert_eq!(
        (c.label, c.si_type),
        (Label::SelfInterlacing, Some(SiType::II))
    );
}

#[test]
fn classify_by_roots_refuses_boundary_cases() {
    // A root 1e-5 off the imaginary axis is neither clearly on it nor off it.
    let rs = real_roots(&[-1.0, 1e-5]);
    assert!(matches!(
        classify_by_roots(&rs, DEFAULT_TOL),
        Err(Error::OracleFailure(_))
    ));
}

#[test]
fn classify_polynomial_by_roots_detects_quasi_self_interlacing() {
    let c = classify_polynomial_by_roots(&p(&[1, 0, -5, 0, 4]), DEFAULT_TOL).unwrap();
    assert_eq!(
        (c.label, c.degeneracy_m),
        (Label::QuasiSelfInterlacing, Some(4))
    );
    let c = classify_polynomial_by_roots(&p(&[1, -1, -14, 4, 48]), DEFAULT_TOL).unwrap();
    assert_eq!(c.label, Label::Unclassified);
}

#[test]
fn closed_rhp_count_examples() {
    let rs = numeric_roots(&p(&[1, 4, 1, -6])).unwrap();
    assert_eq!(closed_rhp_count(&rs, DEFAULT_TOL), Ok(1));
    let rs = numeric_roots(&p(&[1, 1, 0])).unwrap();
    assert_eq!(closed_rhp_count(&rs, DEFAULT_TOL), Ok(1));
}

// ---------------------------------------------------------------------------
// Instance generation
// ---------------------------------------------------------------------------

/// A rational `num/den`.
type Frac = (i64, i64);

fn spec(target: Target, real: &[Frac], pairs: &[(Frac, Frac)]) -> StructureSpec {
    StructureSpec {
        target,
        degree: real.len() + 2 * pairs.len(),
        real_roots: real.iter().map(|&(n, d)| r(n, d)).collect(),
        complex_pairs: pairs
            .iter()
            .map(|&((a, b), (c, d))| (r(a, b), r(c, d)))
            .collect(),
    }
}

#[test]
fn generate_instance_examples() {
    let s = spec(Target::SelfInterlacing(SiType::I), &[(1, 1), (-2, 1)], &[]);
    assert_eq!(generate_instance(&s, 0).unwrap(), p(&[1, 1, -2]));
    let s = spec(Target::HurwitzStable, &[(-1, 1), (-1, 1)], &[]);
    assert_eq!(generate_instance(&s, 0).unwrap(), p(&[1, 2, 1]));
    let s = spec(
        Target::GeneralizedHurwitz { k: 1 },
        &[(1, 1), (-2, 1), (-3, 1)],
        &[],
    );
    assert_eq!(generate_instance(&s, 0).unwrap(), p(&[1, 4, 1, -6]));
    // (z^2 + 2z + 5)(z + 1)
    let s = spec(Target::HurwitzStable, &[(-1, 1)], &[((-1, 1), (2, 1))]);
    assert_eq!(generate_instance(&s, 0).unwrap(), p(&[1, 3, 7, 5]));
}

#[test]
fn generate_instance_scales_by_seed() {
    let s = spec(Target::HurwitzStable, &[(-1, 1)], &[]);
    for seed in 1..20 {
        let q = generate_instance(&s, seed).unwrap();
        let lead = q.leading();
        assert!(lead >= r(1, 1) && lead <= r(3, 1));
        assert_eq!(q.monic(), p(&[1, 1]));
    }
}

#[test]
fn generate_instance_rejects_unrealizable_specs() {
    let bad = [
        // wrong magnitude order for type I
        spec(Target::SelfInterlacing(SiType::I), &[(2, 1), (-1, 1)], &[]),
        // root on the wrong side
        spec(Target::HurwitzStable, &[(1, 1)], &[]),
        // order out of range
        spec(Target::GeneralizedHurwitz { k: 2 }, &[(1, 1), (-2, 1)], &[]),
        // no imaginary-axis root
        spec(Target::QuasiStable { m: 1 }, &[(-1, 1)], &[]),
    ];
    for s in bad {
        assert!(
            matches!(generate_instance(&s, 0), Err(Error::Unrealizable(_))),
            "{s:?}"
        );
    }
    let mut s = spec(Target::HurwitzStable, &[(-1, 1)], &[]);
    s.degree = 2;
    assert!(generate_instance(&s, 0).is_err());
}

#[test]
fn sampling_rejects_unsupported_targets() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    assert!(sample_spec(Target::QuasiStable { m: 3 }, 5, &mut rng).is_err());
    assert!(sample_spec(Target::GeneralizedHurwitz { k: 3 }, 4, &mut rng).is_err());
    assert!(sample_spec(Target::SelfInterlacing(SiType::I), 0, &mut rng).is_err());
}

#[test]
fn random_instance_is_deterministic() {
    for t in targets(6) {
        assert_eq!(random_instance(t, 6, 42), random_instance(t, 6, 42));
    }
}

// ---------------------------------------------------------------------------
// Partial fractions
// ---------------------------------------------------------------------------

#[test]
fn partial_fraction_examples() {
    let f = numeric_partial_fractions(&rf(&[2], &[1, 1])).unwrap();
    assert!(close(&f.poles, &[-1.0]) && close(&f.residues, &[2.0]));
    assert!(f.is_r_function());
    let f = numeric_partial_fractions(&rf(&[1, 1], &[4, -6])).unwrap();
    assert!(close(&f.poles, &[1.5]) && close(&f.residues, &[0.625]));
    assert!((f.beta - 0.25).abs() < 1e-12);
    assert!(numeric_partial_fractions(&rf(&[1], &[1, 0, 1])).is_err());
    // -1/u has a negative residue.
    assert!(!numeric_partial_fractions(&rf(&[-1], &[1, 0]))
        .unwrap()
        .is_r_function());
}

// ---------------------------------------------------------------------------
// Auxiliary polynomials of stable polynomials
// ---------------------------------------------------------------------------

#[test]
fn strange_degree_two() {
    let rep = strange_experiment(&p(&[1, 2, 1])).unwrap();
    assert_eq!(Polynomial::new(rep.q.coeffs.clone()), p(&[-1, 2, 1]));
    assert!(rep.q.counts_hold);
    assert!(!rep.q.has_nonreal);
    assert!(!rep.q.interlacing_holds);
    let mut roots = sorted_real_parts(&rep.q.roots);
    roots.iter_mut().for_each(|x| *x = (*x * 1e9).round() / 1e9);
    let s = 2f64.sqrt();
    assert!(close(
        &roots,
        &[
            ((1.0 - s) * 1e9).round() / 1e9,
            ((1.0 + s) * 1e9).round() / 1e9
        ]
    ));
}

#[test]
fn strange_degree_three() {
    let rep = strange_experiment(&p(&[1, 3, 3, 1])).unwrap();
    assert_eq!(Polynomial::new(rep.q.coeffs.clone()), p(&[1, -3, 3, 1]));
    assert_eq!((rep.q.rhp, rep.q.lhp), (2, 1));
    assert!(rep.q.has_nonreal && rep.q.counts_hold);
    let rep = strange_experiment(&p(&[1, 6, 11, 6])).unwrap();
    assert_eq!(Polynomial::new(rep.q.coeffs.clone()), p(&[1, -6, 11, 6]));
}

#[test]
fn strange_requires_stability() {
    assert!(matches!(
        strange_experiment(&p(&[1, 1, -2])),
        Err(Error::InvalidInput(_))
    ));
}

// ---------------------------------------------------------------------------
// Properties
// ---------------------------------------------------------------------------

fn eval_c(q: &Polynomial, z: Complex64) -> Complex64 {
    q.coeffs()
        .iter()
        .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + to_f64(c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    /// Roots have small residuals, the right count and conjugate symmetry.
    #[test]
    fn roots_are_accurate(q in small_poly(8)) {
        let rs = numeric_roots(&q).unwrap();
        prop_assert_eq!(rs.len(), q.deg());
        let norm: f64 = q.coeffs().iter().map(|c| to_f64(c).abs()).sum();
        for &(z, m) in &rs.distinct {
            let scale: f64 = q.coeffs().iter().rev().enumerate()
                .map(|(k, c)| to_f64(c).abs() * z.norm().powi(k as i32)).sum();
            prop_assert!(eval_c(&q, z).norm() <= 1e-9 * scale.max(norm), "{} at {}", q, z);
            let mate = rs.distinct.iter().find(|(w, _)| (w - z.conj()).norm() <= 1e-8 * (1.0 + z.norm()));
            prop_assert!(mate.is_some_and(|&(_, k)| k == m));
        }
    }

    /// Generated instances are classified identically by the definitions on
    /// their roots, by the exact classifier and by the construction, with no
    /// indeterminate verdicts.
    #[test]
    fn oracle_agreement((spec, q) in any_instance(8)) {
        let want = spec.expected();
        let by_roots = classify_polynomial_by_roots(&q, DEFAULT_TOL).unwrap();
        prop_assert_eq!(
            (by_roots.label, by_roots.order_k, by_roots.degeneracy_m, by_roots.si_type),
            (want.label, want.order_k, want.degeneracy_m, want.si_type),
            "{}", q
        );
        let exact = classify(&q);
        prop_assert_eq!(exact.label, by_roots.label);
        prop_assert_eq!(exact.order_k, by_roots.order_k);
        // Without duals the root classifier agrees except for
        // quasi-self-interlacing, which the generator never produces.
        let plain = classify_by_roots(&numeric_roots(&q).unwrap(), DEFAULT_TOL).unwrap();
        prop_assert_eq!(plain, by_roots);
    }

    #[test]
    fn generated_instances_match_their_spec((spec, q) in any_instance(8)) {
        prop_assert!(spec.validate().is_ok());
        prop_assert_eq!(q.deg(), spec.degree);
        let monic = generate_instance(&spec, 0).unwrap();
        prop_assert_eq!(q.monic(), monic);
        if let Target::GeneralizedHurwitz { k } = spec.target {
            prop_assert!(k >= 1 && k <= max_order(spec.degree));
        }
    }

    /// `Phi` is an R-function exactly when its numeric partial fractions
    /// have real simple poles, positive residues and `alpha >= 0`.
    #[test]
    fn r_function_bridge(q in prop_oneof![
        any_instance(8).prop_map(|(_, q)| q),
        small_poly(6),
    ]) {
        let Ok(phi) = associated_function(&q) else { return Ok(()) };
        let exact = is_r_function(&phi).is_some();
        match numeric_partial_fractions(&phi) {
            Ok(pf) => {
                // Near-zero residues cannot be decided in floating point.
                prop_assume!(pf.residues.iter().all(|g| g.abs() > 1e-9));
                prop_assert_eq!(pf.is_r_function(), exact, "{}", q);
            }
            Err(_) => prop_assert!(!exact, "{}", q),
        }
    }

    /// Stable polynomials have `Phi` with negative poles only; type-I
    /// self-interlacing polynomials have positive poles only.
    #[test]
    fn mittag_leffler_pole_signs_stable((_, q) in instances_of(stable_family, 2, 8)) {
        let pf = numeric_partial_fractions(&associated_function(&q).unwrap()).unwrap();
        prop_assert!(pf.is_r_function());
        prop_assert!(pf.poles.iter().all(|&w| w < 0.0));
    }

    #[test]
    fn mittag_leffler_pole_signs_self_interlacing((_, q) in instances_of(si_one_family, 2, 8)) {
        let pf = numeric_partial_fractions(&associated_function(&q).unwrap()).unwrap();
        prop_assert!(pf.is_r_function());
        prop_assert!(pf.poles.iter().all(|&w| w > 0.0));
    }

    /// The experiment is defined for every stable polynomial; `q(0) = p(0)`
    /// and every root is accounted for.
    #[test]
    fn strange_report_is_consistent((_, q) in instances_of(stable_family, 1, 8)) {
        let rep = strange_experiment(&q).unwrap();
        prop_assert_eq!(rep.q.coeffs.last(), q.coeffs().last());
        for c in [&rep.q, &rep.companion] {
            prop_assert_eq!(c.rhp + c.lhp + c.imaginary_axis, q.deg());
        }
    }
}
