//! Hankel, Hurwitz and Hurwitz-type minors: frozen values and the exact
//! identities that tie them together.

mod common;

use common::{p, qs, r, rf, small_poly};
use num::{Signed, Zero};
use proptest::prelude::*;
use sipoly::matrix::ExactMatrix;
use sipoly::minors::{
    hankel_character_test, hankel_minors, hurwitz_matrix, hurwitz_minors, infinite_hurwitz_block,
    nabla_minors, nabla_minors_with_layout, scf_frobenius, strong_sign_changes,
    total_nonnegativity_scan, HankelMode, PairLayout, TnVerdict,
};
use sipoly::polyalg::{associated_function, laurent_expand, reflect, LaurentSeries};
use sipoly::rational::{neg_one_pow, pow};
use sipoly::{Error, Polynomial, RationalFunction, Q};

fn hankel_of(f: &RationalFunction, order: usize) -> sipoly::HankelMinors {
    hankel_minors(&laurent_expand(f, order).unwrap(), order).unwrap()
}

// ---------------------------------------------------------------------------
// Hankel minors
// ---------------------------------------------------------------------------

#[test]
fn hankel_of_stable_function() {
    let h = hankel_of(&rf(&[2], &[1, 1]), 1);
    assert_eq!((h.d(1), h.dhat(1)), (r(2, 1), r(-2, 1)));
}

#[test]
fn hankel_vanishes_beyond_rank() {
    let h = hankel_of(&rf(&[1], &[1, -2]), 2);
    assert_eq!(h.d, qs(&[1, 0]));
    assert_eq!(h.dhat, qs(&[2, 0]));
}

#[test]
fn hankel_of_zero_series() {
    let series = LaurentSeries {
        s_minus2: Q::zero(),
        s_minus1: Q::zero(),
        s: vec![Q::zero(); 4],
    };
    let h = hankel_minors(&series, 2).unwrap();
    assert!(h.d.iter().chain(&h.dhat).all(Zero::is_zero));
}

#[test]
fn hankel_needs_enough_coefficients() {
    let series = laurent_expand(&rf(&[1], &[1, 1]), 1).unwrap();
    assert_eq!(
        hankel_minors(&series, 2),
        Err(Error::Length { needed: 4, got: 2 })
    );
}

#[test]
fn hankel_with_constant_term() {
    let h = hankel_of(&rf(&[1, 1], &[4, -6]), 2);
    assert_eq!(h.d, vec![r(5, 8), r(0, 1)]);
    assert_eq!(h.dhat, vec![r(15, 16), r(0, 1)]);
}

// ---------------------------------------------------------------------------
// Hurwitz minors
// ---------------------------------------------------------------------------

#[test]
fn hurwitz_minors_of_square() {
    let h = hurwitz_minors(&p(&[1, 2, 1])).unwrap();
    assert_eq!(h.delta, qs(&[2, 2]));
    assert_eq!(h.eta, qs(&[1, 2, 2]));
}

#[test]
fn hurwitz_minors_of_self_interlacing_quadratic() {
    assert_eq!(hurwitz_minors(&p(&[1, 1, -2])).unwrap().delta, qs(&[1, -2]));
}

#[test]
fn hurwitz_minors_of_generalized_cubic() {
    assert_eq!(
        hurwitz_minors(&p(&[1, 4, 1, -6])).unwrap().delta,
        qs(&[4, 10, -60])
    );
}

#[test]
fn hurwitz_minors_of_larger_examples() {
    let cases: [(&[i64], &[i64]); 5] = [
        (&[1, 2, 3, 2, 1], &[2, 4, 4, 4]),
        (&[1, 3, 6, 9, 8, 4], &[3, 9, 21, 32, 128]),
        (&[1, -1, -14, 4, 48], &[-1, 10, -8, -384]),
        (&[1, 2, -13, -14, 24], &[2, -12, 72, 1728]),
        (&[2, 9, 7, -6], &[9, 75, -450]),
    ];
    for (c, want) in cases {
        assert_eq!(hurwitz_minors(&p(c)).unwrap().delta, qs(want), "{c:?}");
    }
}

#[test]
fn hurwitz_minor_conventions() {
    let h = hurwitz_minors(&p(&[2, 9, 7, -6])).unwrap();
    assert_eq!(h.delta(-1), r(1, 2));
    assert_eq!(h.delta(0), r(1, 1));
    assert_eq!(h.delta(4), r(0, 1));
}

#[test]
fn hurwitz_matrix_layout() {
    let h = hurwitz_matrix(&p(&[1, 2, 1]));
    assert_eq!(h, ExactMatrix::from_int_rows(&[&[2, 0], &[1, 1]]));
}

// ---------------------------------------------------------------------------
// Hurwitz-type pair minors
// ---------------------------------------------------------------------------

#[test]
fn nabla_of_polynomial_and_reflection() {
    let n = nabla_minors(&p(&[1, 1, -2]), &p(&[1, -1, -2])).unwrap();
    assert_eq!(n.layout, PairLayout::Odd);
    assert_eq!(n.nabla, qs(&[1, -2, -2, 8, -16]));
}

#[test]
fn nabla_with_constant_second_polynomial() {
    let n = nabla_minors(&p(&[1, 2, 1]), &p(&[1])).unwrap();
    assert_eq!(n.layout, PairLayout::Even);
    assert_eq!(n.nabla, qs(&[0, -1, -1, -1]));
}

#[test]
fn nabla_of_linear_pair() {
    let n = nabla_minors(&p(&[1, 1]), &p(&[1, 2])).unwrap();
    assert_eq!(n.nabla, qs(&[1, 1, 1]));
}

#[test]
fn nabla_rejects_higher_degree_second_polynomial() {
    assert_eq!(
        nabla_minors(&p(&[1, 1]), &p(&[1, 0, 1])),
        Err(Error::InvalidPair { deg_p: 1, deg_q: 2 })
    );
}

// ---------------------------------------------------------------------------
// Sign-change counters
// ---------------------------------------------------------------------------

#[test]
fn frobenius_examples() {
    assert_eq!(scf_frobenius(&qs(&[1, 0, 0, 5])).unwrap(), 2);
    assert_eq!(scf_frobenius(&qs(&[1, -2])).unwrap(), 1);
    assert_eq!(scf_frobenius(&qs(&[1, 2, 4])).unwrap(), 0);
    assert_eq!(scf_frobenius(&qs(&[1, 0, 3])).unwrap(), 0);
    assert_eq!(scf_frobenius(&qs(&[1, -1, 0, 0])).unwrap(), 1);
    assert!(matches!(
        scf_frobenius(&qs(&[0, 1])),
        Err(Error::InvalidSequence(_))
    ));
}

#[test]
fn strong_sign_change_examples() {
    assert_eq!(strong_sign_changes(&qs(&[1, -2, 3])).unwrap(), 2);
    assert_eq!(strong_sign_changes(&qs(&[1, 0, -1])).unwrap(), 1);
    assert_eq!(strong_sign_changes(&qs(&[-6, 4, 1])).unwrap(), 1);
    assert!(strong_sign_changes(&qs(&[0, 0])).is_err());
}

// ---------------------------------------------------------------------------
// Total nonnegativity and Hankel sign character
// ---------------------------------------------------------------------------

#[test]
fn tn_scan_examples() {
    let h = ExactMatrix::from_int_rows(&[&[2, 0], &[1, 1]]);
    assert!(total_nonnegativity_scan(&h, 2).is_tn());
    assert_eq!(h.det(), r(2, 1));
    let m = ExactMatrix::from_int_rows(&[&[1, 2], &[1, 1]]);
    assert_eq!(
        total_nonnegativity_scan(&m, 2),
        TnVerdict::Violation {
            rows: vec![0, 1],
            cols: vec![0, 1],
            value: r(-1, 1)
        }
    );
    assert!(total_nonnegativity_scan(&ExactMatrix::identity(3), 3).is_tn());
}

#[test]
fn hankel_character_examples() {
    let si = hankel_of(&associated_function(&p(&[1, 1, -2])).unwrap(), 1);
    assert!(hankel_character_test(&si, HankelMode::StrictTp));
    let stable = hankel_of(&associated_function(&p(&[1, 2, 1])).unwrap(), 1);
    assert!(hankel_character_test(&stable, HankelMode::SignRegular));
    let bad = sipoly::HankelMinors {
        d: qs(&[-1]),
        dhat: qs(&[1]),
        r: 1,
    };
    assert!(!hankel_character_test(&bad, HankelMode::StrictTp));
    assert!(!hankel_character_test(&bad, HankelMode::SignRegular));
}

// ---------------------------------------------------------------------------
// Identities
// ---------------------------------------------------------------------------

/// `h_1 = z ((-1)^n p(-z) - p(z))`.
fn h1(q: &Polynomial) -> Polynomial {
    let n = q.deg();
    let refl = reflect(q).scale(&neg_one_pow(n));
    (&refl - q).shift(1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn eta_is_shifted_delta(q in small_poly(8)) {
        let h = hurwitz_minors(&q).unwrap();
        for j in 1..=q.deg() + 1 {
            prop_assert_eq!(h.eta[j - 1].clone(), &h.a0 * h.delta(j as isize - 1));
        }
        // Beyond n + 1 the infinite-matrix minors vanish.
        let big = infinite_hurwitz_block(&q, q.deg() + 3);
        let lead = big.leading_principal_minors(q.deg() + 3);
        prop_assert!(lead[q.deg() + 1..].iter().all(Zero::is_zero));
    }

    /// Hurwitz minors of `p` against Hankel minors of its associated
    /// function, both parities, `a_1 != 0`.
    #[test]
    fn hurwitz_hankel_relations(q in small_poly(8)) {
        let n = q.deg();
        prop_assume!(!q.a(1).is_zero());
        let l = n / 2;
        let phi = associated_function(&q).unwrap();
        let series = laurent_expand(&phi, l.max(1)).unwrap();
        let hk = hankel_minors(&series, l).unwrap();
        let h = hurwitz_minors(&q).unwrap();
        let a0 = q.leading();
        if n % 2 == 0 {
            for j in 1..=l {
                prop_assert_eq!(h.delta(2 * j as isize - 1), pow(&a0, 2 * j - 1) * hk.d(j));
                prop_assert_eq!(h.delta(2 * j as isize), neg_one_pow(j) * pow(&a0, 2 * j) * hk.dhat(j));
            }
        } else {
            let scale = &a0 / &series.s_minus1;
            for j in 1..=l {
                prop_assert_eq!(h.delta(2 * j as isize), pow(&scale, 2 * j) * hk.d(j));
            }
            for j in 0..=l {
                prop_assert_eq!(
                    h.delta(2 * j as isize + 1),
                    neg_one_pow(j) * pow(&scale, 2 * j + 1) * hk.dhat(j)
                );
            }
        }
    }

    /// Odd degree with `a_1 = 0`, `a_3 != 0`.
    #[test]
    fn vanishing_a1_relations(l in 1usize..=3, lead in 1i64..=3, rest in prop::collection::vec(-6i64..=6, 7)) {
        let n = 2 * l + 1;
        let mut c = vec![lead, 0];
        c.extend(rest.into_iter().take(n - 1));
        let q = p(&c);
        prop_assume!(!q.a(3).is_zero());
        let phi = associated_function(&q).unwrap();
        let hk = hankel_minors(&laurent_expand(&phi, l).unwrap(), l).unwrap();
        let h = hurwitz_minors(&q).unwrap();
        let (a0, a3) = (q.a(0), q.a(3));
        prop_assert_eq!(h.delta(2), -(&a0 * &a3));
        prop_assert_eq!(h.delta(3), -(&a0 * &a3 * &a3));
        for j in 1..=l {
            prop_assert_eq!(h.delta(2 * j as isize), -(&a0 * pow(&a3, 2 * j - 1)) * hk.d(j - 1));
            prop_assert_eq!(
                h.delta(2 * j as isize + 1),
                neg_one_pow(j) * &a0 * pow(&a3, 2 * j) * hk.dhat(j - 1)
            );
        }
    }

    /// Kronecker: Hankel minors vanish beyond the number of poles; `D̂_r`
    /// vanishes exactly when there is a pole at the origin.
    #[test]
    fn kronecker_rank(num in small_poly(4), den in small_poly(5)) {
        prop_assume!(num.deg() <= den.deg());
        let f = RationalFunction::new(num, den).unwrap();
        let red = f.reduced();
        let rank = red.den.deg();
        let h = hankel_of(&f, rank + 2);
        if rank > 0 {
            prop_assert!(!h.d(rank).is_zero());
            let pole_at_zero = red.den.constant_term().is_zero();
            prop_assert_eq!(h.dhat(rank).is_zero(), pole_at_zero);
            if pole_at_zero {
                prop_assert!(!h.dhat(rank - 1).is_zero());
            }
        }
        prop_assert!(h.d(rank + 1).is_zero() && h.d(rank + 2).is_zero());
    }

    /// `∇_{2j}(p, (-1)^n p(-z)) = (-1)^{j(j+1)/2} 2^j a_0 Δ_{j-1} Δ_j`.
    #[test]
    fn pair_minors_with_reflection(q in small_poly(8)) {
        let n = q.deg();
        let refl = reflect(&q).scale(&neg_one_pow(n));
        let nab = nabla_minors_with_layout(&q, &refl, PairLayout::Odd);
        let h = hurwitz_minors(&q).unwrap();
        for j in 1..=n {
            let want = neg_one_pow(j * (j + 1) / 2)
                * pow(&r(2, 1), j)
                * q.leading()
                * h.delta(j as isize - 1)
                * h.delta(j as isize);
            prop_assert_eq!(nab.get(2 * j), want);
        }
    }

    /// `∇_{2j}(p, h_1) = (-1)^{j(j-1)/2} 2^j Δ_j^2`.
    #[test]
    fn pair_minors_with_h1(q in small_poly(8)) {
        let nab = nabla_minors_with_layout(&q, &h1(&q), PairLayout::Odd);
        let h = hurwitz_minors(&q).unwrap();
        for j in 1..=q.deg() {
            let d = h.delta(j as isize);
            let want = neg_one_pow(j * (j - 1) / 2) * pow(&r(2, 1), j) * &d * &d;
            prop_assert_eq!(nab.get(2 * j), want);
        }
    }

    /// Frobenius count equals the plain count on zero-free sequences and
    /// never exceeds the length.
    #[test]
    fn frobenius_matches_plain_count(v in prop::collection::vec(prop_oneof![1i64..=5, -5i64..=-1], 1..10)) {
        let seq = qs(&v);
        let plain = seq.windows(2).filter(|w| (w[0].is_positive()) != (w[1].is_positive())).count();
        prop_assert_eq!(scf_frobenius(&seq).unwrap(), plain);
        prop_assert_eq!(strong_sign_changes(&seq).unwrap(), plain);
    }
}
