//! Colex (combinadic) ranking of k-subsets.
//!
//! A sorted subset `s_0 < s_1 < ... < s_{k-1}` has rank
//! `C(s_0, 1) + C(s_1, 2) + ... + C(s_{k-1}, k)`. Subsets of `[n]` therefore
//! occupy ranks `0..C(n, k)` and the ranking does not depend on `n`, which
//! lets a colouring of `[m]` be read as a colouring of any `[n] ⊇ [m]` prefix.

use std::sync::OnceLock;

use crate::error::{invalid, Result};

/// Largest vertex count covered by the precomputed binomial table.
pub const TABLE_N: usize = 1024;
/// Largest uniformity covered by the precomputed binomial table.
pub const TABLE_K: usize = 4;

fn table() -> &'static [[usize; TABLE_K + 1]] {
    static TABLE: OnceLock<Vec<[usize; TABLE_K + 1]>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut rows = vec![[0usize; TABLE_K + 1]; TABLE_N + 1];
        for n in 0..=TABLE_N {
            rows[n][0] = 1;
            for k in 1..=TABLE_K {
                rows[n][k] = if n == 0 { 0 } else { rows[n - 1][k - 1] + rows[n - 1][k] };
            }
        }
        rows
    })
}

/// `C(n, k)`, saturating at `usize::MAX`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    if n <= TABLE_N && k <= TABLE_K {
        return table()[n][k];
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    acc as usize
}

/// Rank of a strictly increasing subset of `[n]`.
pub fn rank(subset: &[usize], n: usize) -> Result<usize> {
    for w in subset.windows(2) {
        if w[0] >= w[1] {
            return invalid(format!("subset {subset:?} is not strictly increasing"));
        }
    }
    if let Some(&last) = subset.last() {
        if last >= n {
            return invalid(format!("subset {subset:?} has an entry outside [0, {n})"));
        }
    }
    Ok(rank_unchecked(subset))
}

/// Rank without validation; `subset` must be strictly increasing.
#[inline]
pub fn rank_unchecked(subset: &[usize]) -> usize {
    subset.iter().enumerate().map(|(i, &s)| binomial(s, i + 1)).sum()
}

/// Rank of the pair `{u, v}`, `u < v`.
#[inline]
pub fn rank2(u: usize, v: usize) -> usize {
    debug_assert!(u < v);
    v * (v - 1) / 2 + u
}

/// Rank of the triple `{a, b, c}`, `a < b < c`.
#[inline]
pub fn rank3(a: usize, b: usize, c: usize) -> usize {
    debug_assert!(a < b && b < c);
    a + b * (b - 1) / 2 + binomial(c, 3)
}

/// Inverse of [`rank`]: the `k`-subset at position `r` in colex order.
pub fn unrank(mut r: usize, k: usize) -> Vec<usize> {
    let mut out = vec![0; k];
    for i in (1..=k).rev() {
        // largest c with C(c, i) <= r
        let mut lo = i - 1;
        let mut hi = lo + 1;
        while binomial(hi, i) <= r {
            lo = hi;
            hi *= 2;
        }
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if binomial(mid, i) <= r {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        out[i - 1] = lo;
        r -= binomial(lo, i);
    }
    out
}

/// Advance `subset` (a sorted k-subset of `[n]`) to its colex successor.
/// Returns `false` once the last subset has been passed.
pub fn next_colex(subset: &mut [usize], n: usize) -> bool {
    let k = subset.len();
    for i in 0..k {
        let limit = if i + 1 < k { subset[i + 1] } else { n };
        if subset[i] + 1 < limit {
            subset[i] += 1;
            for (j, s) in subset.iter_mut().enumerate().take(i) {
                *s = j;
            }
            return true;
        }
    }
    false
}

/// Advance `subset` (a sorted k-subset of `[n]`) to its lexicographic successor.
pub fn next_lex(subset: &mut [usize], n: usize) -> bool {
    let k = subset.len();
    for i in (0..k).rev() {
        if subset[i] < n - k + i {
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Call `f` on every k-subset of `[n]` in colex order (so the i-th call sees rank i).
pub fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut s: Vec<usize> = (0..k).collect();
    loop {
        f(&s);
        if !next_colex(&mut s, n) {
            break;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Independent oracle: list k-subsets of [n] in colex order by sorting all
    // subsets on their reversed coordinate vector.
    fn colex_oracle(n: usize, k: usize) -> Vec<Vec<usize>> {
        let mut all = Vec::new();
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize == k {
                all.push((0..n).filter(|&i| mask >> i & 1 == 1).collect::<Vec<_>>());
            }
        }
        all.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
        all
    }

    #[test]
    fn small_examples() {
        assert_eq!(rank(&[0, 1, 2], 5).unwrap(), 0);
        assert_eq!(rank(&[0, 1, 3], 5).unwrap(), 1);
        for n in 3..20 {
            assert_eq!(rank(&[n - 3, n - 2, n - 1], n).unwrap(), binomial(n, 3) - 1);
        }
    }

    #[test]
    fn matches_oracle_order() {
        for n in 0..=9 {
            for k in 1..=4 {
                let oracle = colex_oracle(n, k);
                assert_eq!(oracle.len(), binomial(n, k));
                let mut seen = Vec::new();
                for_each_subset(n, k, |s| seen.push(s.to_vec()));
                assert_eq!(seen, oracle);
                for (i, s) in oracle.iter().enumerate() {
                    assert_eq!(rank(s, n).unwrap(), i);
                    assert_eq!(&unrank(i, k), s);
                }
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(rank(&[1, 0, 2], 5).is_err());
        assert!(rank(&[0, 0, 2], 5).is_err());
        assert!(rank(&[0, 1, 5], 5).is_err());
    }

    #[test]
    fn fast_paths_agree() {
        for c in 2..40 {
            for b in 1..c {
                assert_eq!(rank2(b, c), rank_unchecked(&[b, c]));
                for a in 0..b {
                    assert_eq!(rank3(a, b, c), rank_unchecked(&[a, b, c]));
                }
            }
        }
    }

    #[test]
    fn roundtrip_exhaustive_up_to_64() {
        for k in 2..=4 {
            for r in 0..binomial(64, k) {
                let s = unrank(r, k);
                assert!(s.windows(2).all(|w| w[0] < w[1]));
                assert!(*s.last().unwrap() < 64);
                assert_eq!(rank_unchecked(&s), r);
            }
        }
    }

    #[test]
    fn lex_successor_visits_everything() {
        let mut s = vec![0, 1, 2];
        let mut count = 1;
        while next_lex(&mut s, 7) {
            count += 1;
        }
        assert_eq!(count, 35);
    }

    #[test]
    fn binomial_beyond_table() {
        assert_eq!(binomial(2000, 2), 1999000);
        assert_eq!(binomial(30, 15), 155117520);
        assert_eq!(binomial(5, 6), 0);
    }
}
