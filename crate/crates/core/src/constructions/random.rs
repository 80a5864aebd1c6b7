use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::colouring::CompleteColouring;
use crate::combinadic::binomial;
use crate::error::Result;

/// Uniform i.i.d. colouring of all `k`-subsets of `[n]`; identical seeds give
/// identical colourings.
pub fn random_colouring(n: usize, k: usize, q: usize, seed: u64) -> Result<CompleteColouring> {
    let len = binomial(n, k);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let colours = if q.is_power_of_two() && q <= 256 {
        let mut bytes = vec![0u8; len];
        rng.fill_bytes(&mut bytes);
        let mask = (q - 1) as u8;
        bytes.iter_mut().for_each(|b| *b &= mask);
        bytes
    } else {
        (0..len).map(|_| rng.random_range(0..q.max(1)) as u8).collect()
    };
    CompleteColouring::new(n, k, q, colours)
}

/// Seed of the `i`-th attempt derived from a base seed (splitmix64 step), so
/// attempts are independent streams yet reproducible one at a time.
pub fn attempt_seed(base: u64, i: u64) -> u64 {
    let mut z = base.wrapping_add(i.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
