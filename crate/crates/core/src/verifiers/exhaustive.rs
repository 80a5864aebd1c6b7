//! Decide "every q-colouring of K_n^(3) contains a monochromatic H_t" by
//! running through all colourings.
//!
//! Colourings that differ by a permutation of the colours are equivalent, so
//! only restricted-growth colour sequences are visited (each colour's first
//! appearance in rank order comes after the previous colour's).

use std::sync::atomic::{AtomicBool, Ordering};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::hedgehog_search::has_monochromatic_hedgehog;
use super::slow::brute_force_hedgehog;
use crate::colouring::CompleteColouring;
use crate::error::{Error, Result};

/// Refuse instances whose raw colouring space exceeds this many sequences.
pub const MAX_SEQUENCES: u128 = 1 << 26;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RamseyVerdict {
    /// Every colouring contains a monochromatic hedgehog.
    Holds { colourings_checked: u64 },
    /// A colouring with no monochromatic hedgehog in any colour.
    Counterexample(CompleteColouring),
}

pub fn exhaustive_ramsey_check(t: usize, q: usize, n: usize) -> Result<RamseyVerdict> {
    let edges = choose3(n);
    let space = sequence_space(q, edges).ok_or_else(|| Error::Refused {
        reason: format!("{q}^{edges} colourings is beyond any enumeration"),
    })?;
    if q == 0 || q > 16 {
        return Err(Error::InvalidArgument(format!("q = {q} outside 1..=16")));
    }
    if space > MAX_SEQUENCES {
        return Err(Error::Refused {
            reason: format!(
                "{q}^{edges} = {space} colour sequences (about {} up to colour permutation) exceeds the limit {MAX_SEQUENCES}",
                space / factorial(q as u128)
            ),
        });
    }
    let space = space as u64;
    let stop = AtomicBool::new(false);
    let shards = 64u64.min(space.max(1));
    let per = space.div_ceil(shards);
    let results: Vec<(u64, Option<u64>)> = (0..shards)
        .into_par_iter()
        .map(|s| {
            let mut checked = 0u64;
            let lo = s * per;
            let hi = ((s + 1) * per).min(space);
            let mut digits = vec![0u8; edges];
            for idx in lo..hi {
                if stop.load(Ordering::Relaxed) {
                    break;
                }
                decode(idx, q, &mut digits);
                if !restricted_growth(&digits) {
                    continue;
                }
                checked += 1;
                let host = CompleteColouring::new(n, 3, q, digits.clone()).expect("valid digits");
                if (0..q as u8).all(|c| has_monochromatic_hedgehog(&host, t, c).is_none()) {
                    stop.store(true, Ordering::Relaxed);
                    return (checked, Some(idx));
                }
            }
            (checked, None)
        })
        .collect();
    let checked = results.iter().map(|r| r.0).sum();
    match results.iter().filter_map(|r| r.1).min() {
        Some(idx) => {
            let mut digits = vec![0u8; edges];
            decode(idx, q, &mut digits);
            Ok(RamseyVerdict::Counterexample(CompleteColouring::new(n, 3, q, digits)?))
        }
        None => Ok(RamseyVerdict::Holds {
            colourings_checked: checked,
        }),
    }
}

/// Re-derive the per-colouring verdict on a random sample of the colouring
/// space with the brute-force hedgehog search. Returns (sampled, disagreements).
pub fn cross_check_sample(t: usize, q: usize, n: usize, fraction: f64, seed: u64) -> Result<(u64, u64)> {
    let edges = choose3(n);
    let space = sequence_space(q, edges)
        .filter(|&s| s <= MAX_SEQUENCES)
        .ok_or_else(|| Error::Refused {
            reason: "sample space too large".into(),
        })? as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut digits = vec![0u8; edges];
    let (mut sampled, mut disagreements) = (0, 0);
    for idx in 0..space {
        if !rng.random_bool(fraction) {
            continue;
        }
        decode(idx, q, &mut digits);
        if !restricted_growth(&digits) {
            continue;
        }
        sampled += 1;
        let host = CompleteColouring::new(n, 3, q, digits.clone())?;
        let fast = (0..q as u8).any(|c| has_monochromatic_hedgehog(&host, t, c).is_some());
        let slow = (0..q as u8).any(|c| brute_force_hedgehog(&host, t, c));
        if fast != slow {
            disagreements += 1;
        }
    }
    Ok((sampled, disagreements))
}

fn decode(mut idx: u64, q: usize, digits: &mut [u8]) {
    for d in digits.iter_mut() {
        *d = (idx % q as u64) as u8;
        idx /= q as u64;
    }
}

fn restricted_growth(digits: &[u8]) -> bool {
    let mut next = 0u8;
    for &d in digits {
        if d > next {
            return false;
        }
        if d == next {
            next += 1;
        }
    }
    true
}

fn sequence_space(q: usize, edges: usize) -> Option<u128> {
    (q as u128).checked_pow(edges as u32)
}

fn choose3(n: usize) -> usize {
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 6
    }
}

fn factorial(q: u128) -> u128 {
    (1..=q).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_cases() {
        assert_eq!(
            exhaustive_ramsey_check(2, 2, 3).unwrap(),
            RamseyVerdict::Holds { colourings_checked: 1 }
        );
        match exhaustive_ramsey_check(2, 2, 2).unwrap() {
            RamseyVerdict::Counterexample(c) => assert!(c.is_empty()),
            v => panic!("expected vacuous counterexample, got {v:?}"),
        }
        // H_3 needs 6 vertices
        assert!(matches!(
            exhaustive_ramsey_check(3, 2, 5).unwrap(),
            RamseyVerdict::Counterexample(_)
        ));
    }

    #[test]
    fn refuses_large_instances() {
        assert!(matches!(exhaustive_ramsey_check(3, 2, 9), Err(Error::Refused { .. })));
        assert!(matches!(exhaustive_ramsey_check(3, 3, 7), Err(Error::Refused { .. })));
    }

    #[test]
    fn growth_filter_counts_set_partitions() {
        // restricted-growth strings of length 5 over 2 letters: 2^4
        let mut digits = vec![0u8; 5];
        let count = (0..32).filter(|&i| {
            decode(i, 2, &mut digits);
            restricted_growth(&digits)
        });
        assert_eq!(count.count(), 16);
    }
}
