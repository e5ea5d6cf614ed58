//! Helpers shared by the integration tests.
#![allow(dead_code)]

use proptest::prelude::*;
use sipoly::oracle::{random_instance, StructureSpec, Target};
use sipoly::rational::qf;
use sipoly::{Polynomial, RationalFunction, SiType, Q};

/// Polynomial from integer coefficients, leading first.
pub fn p(c: &[i64]) -> Polynomial {
    Polynomial::from_ints(c)
}

/// Exact rational `n/d`.
pub fn r(n: i64, d: i64) -> Q {
    qf(n, d)
}

/// Rational function from integer coefficient lists.
pub fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
    RationalFunction::new(p(num), p(den)).unwrap()
}

/// Rational vector from integers.
pub fn qs(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| r(x, 1)).collect()
}

/// Polynomials of degree `1..=max_deg` with small integer coefficients and a
/// nonzero leading coefficient.
pub fn small_poly(max_deg: usize) -> impl Strategy<Value = Polynomial> {
    (1..=max_deg)
        .prop_flat_map(|n| {
            (
                prop_oneof![1i64..=4, -4i64..=-1],
                prop::collection::vec(-6i64..=6, n),
            )
        })
        .prop_map(|(lead, rest)| {
            let mut c = vec![lead];
            c.extend(rest);
            p(&c)
        })
}

/// Every target the generator supports at degree `n`.
pub fn targets(n: usize) -> Vec<Target> {
    let mut t = vec![
        Target::HurwitzStable,
        Target::QuasiStable { m: 1 },
        Target::SelfInterlacing(SiType::I),
        Target::SelfInterlacing(SiType::II),
    ];
    if n >= 2 {
        t.push(Target::QuasiStable { m: 2 });
    }
    for k in 1..=n.div_ceil(2) {
        t.push(Target::GeneralizedHurwitz { k });
    }
    t
}

/// A generated instance for `target` at `degree` with the given seed.
pub fn instance(target: Target, degree: usize, seed: u64) -> (StructureSpec, Polynomial) {
    random_instance(target, degree, seed).unwrap()
}

/// Strategy over (target, degree, seed) for generated instances.
pub fn any_instance(max_deg: usize) -> impl Strategy<Value = (StructureSpec, Polynomial)> {
    (2..=max_deg, any::<u64>(), any::<prop::sample::Index>()).prop_map(|(n, seed, idx)| {
        let ts = targets(n);
        instance(*idx.get(&ts), n, seed)
    })
}

/// Strategy over generated instances of one target family.
pub fn instances_of(
    family: fn(usize) -> Vec<Target>,
    min_deg: usize,
    max_deg: usize,
) -> impl Strategy<Value = (StructureSpec, Polynomial)> {
    (
        min_deg..=max_deg,
        any::<u64>(),
        any::<prop::sample::Index>(),
    )
        .prop_map(move |(n, seed, idx)| {
            let ts = family(n);
            instance(*idx.get(&ts), n, seed)
        })
}

/// Only the Hurwitz stable target.
pub fn stable_family(_: usize) -> Vec<Target> {
    vec![Target::HurwitzStable]
}

/// Only the self-interlacing type I target.
pub fn si_one_family(_: usize) -> Vec<Target> {
    vec![Target::SelfInterlacing(SiType::I)]
}

/// Generalized Hurwitz targets of every admissible order.
pub fn generalized_family(n: usize) -> Vec<Target> {
    (1..=n.div_ceil(2))
        .map(|k| Target::GeneralizedHurwitz { k })
        .collect()
}
