//! Seeded random generators for sums and fractions, shared by the law
//! checkers and the test suites.

use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::formal::CanonicalSum;
use crate::semigroup::Semigroup;

/// The generator behind every sampling routine. ChaCha keeps streams
/// identical across platforms and crate upgrades.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_coeff<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> BigInt {
    let bound = bound.max(1);
    let magnitude = rng.gen_range(1..=bound);
    BigInt::from(if rng.gen_bool(0.5) { magnitude } else { -magnitude })
}

/// A sum with at most `max_support` terms and nonzero coefficients in
/// `[-coeff_bound, coeff_bound]`. May be zero.
pub fn random_sum<R: Rng + ?Sized>(h: &Semigroup, rng: &mut R, max_support: usize, coeff_bound: i64) -> CanonicalSum {
    let support = rng.gen_range(0..=max_support);
    build(h, rng, support, coeff_bound)
}

/// Like [`random_sum`] but never the zero class.
pub fn random_nonzero_sum<R: Rng + ?Sized>(
    h: &Semigroup,
    rng: &mut R,
    max_support: usize,
    coeff_bound: i64,
) -> CanonicalSum {
    loop {
        let support = rng.gen_range(1..=max_support.max(1));
        let x = build(h, rng, support, coeff_bound);
        if !x.is_zero() {
            return x;
        }
    }
}

fn build<R: Rng + ?Sized>(h: &Semigroup, rng: &mut R, support: usize, coeff_bound: i64) -> CanonicalSum {
    let mut terms = Vec::with_capacity(support);
    for _ in 0..support {
        let e = h.random_element(rng);
        if terms.iter().any(|(t, _)| *t == e) {
            continue;
        }
        terms.push((e, random_coeff(rng, coeff_bound)));
    }
    CanonicalSum::from_terms(h, terms).expect("sampled elements are members")
}
