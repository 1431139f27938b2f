//! Shared randomized generators for the property suites. Everything is
//! driven by a caller-seeded ChaCha stream so failures reproduce exactly.
#![allow(dead_code)]

use liminal_core::{enumerate_diagonal_liminal, DiagonalFamily, WeightSystem};
use num::integer::lcm;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random diagonal system `sum z_i^(p_i)`: exponents in `2..=max_p`,
/// weights `L/p_i` with `L = lcm(p_i)`. Always realizable, any defect.
/// Returns the exponents alongside the weight system (weights parallel).
pub fn random_diagonal(
    rng: &mut ChaCha8Rng,
    vars: std::ops::RangeInclusive<usize>,
    max_p: u64,
) -> (Vec<u64>, WeightSystem) {
    let k = rng.random_range(vars);
    let exps: Vec<u64> = (0..k).map(|_| rng.random_range(2..=max_p)).collect();
    let d = exps.iter().copied().fold(1u64, lcm);
    let weights: Vec<u64> = exps.iter().map(|&p| d / p).collect();
    (
        exps,
        WeightSystem::new(weights, d).expect("diagonal systems are valid"),
    )
}

/// A random chain `x^p y + y^q`: weights `(q-1, p; pq)`. Realizable and
/// usually *not* diagonal (the degree-to-weight ratios need not be
/// integers), so it exercises the division path the diagonal generator
/// cannot.
pub fn random_chain2(rng: &mut ChaCha8Rng) -> WeightSystem {
    let p = rng.random_range(2..=6u64);
    let q = rng.random_range(2..=7u64);
    WeightSystem::new(vec![q - 1, p], p * q).expect("chain systems are valid")
}

/// A random chain `x^p y + y^q z + z^r`: weights
/// `(qr - r + 1, p(r-1), pq; pqr)`.
pub fn random_chain3(rng: &mut ChaCha8Rng) -> WeightSystem {
    let p = rng.random_range(2..=4u64);
    let q = rng.random_range(2..=4u64);
    let r = rng.random_range(2..=4u64);
    WeightSystem::new(vec![q * r - r + 1, p * (r - 1), p * q], p * q * r)
        .expect("chain systems are valid")
}

/// A Thom-Sebastiani sum of a small diagonal block and a 2-chain: the
/// weights of both blocks rescaled to the common degree `lcm(d1, d2)`.
pub fn random_mixed(rng: &mut ChaCha8Rng) -> WeightSystem {
    let (_, diag) = random_diagonal(rng, 2..=3, 4);
    let chain = random_chain2(rng);
    let d = lcm(diag.degree(), chain.degree());
    let mut weights: Vec<u64> = diag
        .original_weights()
        .iter()
        .map(|&a| a * (d / diag.degree()))
        .collect();
    weights.extend(
        chain
            .original_weights()
            .iter()
            .map(|&a| a * (d / chain.degree())),
    );
    WeightSystem::new(weights, d).expect("sum of realizable systems is valid")
}

/// A random realizable system of one of the four shapes above.
pub fn random_realizable(rng: &mut ChaCha8Rng) -> WeightSystem {
    match rng.random_range(0..4u8) {
        0 => random_diagonal(rng, 2..=5, 7).1,
        1 => random_chain2(rng),
        2 => random_chain3(rng),
        _ => random_mixed(rng),
    }
}

/// A random defect-zero system: one of the enumerated diagonal families of
/// dimension 1..=4, with its weights randomly permuted and the whole tuple
/// scaled by a random factor in 1..=3.
pub fn random_zero_liminal(rng: &mut ChaCha8Rng, pool: &[DiagonalFamily]) -> WeightSystem {
    let family = &pool[rng.random_range(0..pool.len())];
    let ws = family.weight_system();
    let m = rng.random_range(1..=3u64);
    let mut weights: Vec<u64> = ws.original_weights().iter().map(|&a| a * m).collect();
    weights.shuffle(rng);
    WeightSystem::new(weights, ws.degree() * m).expect("scaled permutation stays valid")
}

/// All diagonal defect-zero families of dimension 1 through 4.
pub fn zero_liminal_pool() -> Vec<DiagonalFamily> {
    (1..=4)
        .flat_map(|dim| enumerate_diagonal_liminal(dim).expect("small enumerations succeed"))
        .collect()
}
