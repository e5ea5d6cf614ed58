//! Fixtures shared by the criterion benchmarks in `benches/`.

use sipoly::oracle::{random_instance, Target};
use sipoly::{Polynomial, SiType};

/// Deterministic instances of `target` at degree `n`.
pub fn instances(target: Target, n: usize, count: u64) -> Vec<Polynomial> {
    (0..count)
        .map(|seed| {
            random_instance(target, n, seed)
                .expect("benchmark targets are realizable")
                .1
        })
        .collect()
}

/// A mixed corpus at degree `n`: stable, self-interlacing of both types,
/// quasi-stable and generalized Hurwitz of every order.
pub fn mixed_corpus(n: usize, per_target: u64) -> Vec<Polynomial> {
    let mut targets = vec![
        Target::HurwitzStable,
        Target::QuasiStable { m: 1 },
        Target::SelfInterlacing(SiType::I),
        Target::SelfInterlacing(SiType::II),
    ];
    targets.extend((1..=n.div_ceil(2)).map(|k| Target::GeneralizedHurwitz { k }));
    targets
        .into_iter()
        .flat_map(|t| instances(t, n, per_target))
        .collect()
}
