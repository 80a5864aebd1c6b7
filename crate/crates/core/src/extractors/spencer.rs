//! Independent sets in sparse 3-uniform hypergraphs by the deletion method.
//!
//! Keeping each vertex with probability `p = √(n/3e)` and then deleting one
//! vertex from every surviving edge leaves, in expectation,
//! `np − ep³ = (2/(3√3))·n^{3/2}/√e` vertices. [`spencer_independent_set`]
//! fixes the vertices one at a time by conditional expectation, so that value
//! is always reached, then tries seeded random samples and grows every
//! candidate greedily to a maximal independent set.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::constructions::attempt_seed;
use crate::error::{invalid, Result};

/// A 3-uniform hypergraph given by its edge list (each edge sorted).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleHypergraph {
    pub n: usize,
    pub edges: Vec<[usize; 3]>,
}

impl TriangleHypergraph {
    pub fn new(n: usize, edges: Vec<[usize; 3]>) -> Result<Self> {
        let mut out = Vec::with_capacity(edges.len());
        for mut e in edges {
            e.sort_unstable();
            if e[0] == e[1] || e[1] == e[2] || e[2] >= n {
                return invalid(format!("edge {e:?} is not a triple of distinct vertices below {n}"));
            }
            out.push(e);
        }
        Ok(TriangleHypergraph { n, edges: out })
    }

    /// For each vertex, the indices of the edges through it.
    fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                inc[v].push(i);
            }
        }
        inc
    }
}

/// Random samples tried after the derandomized pass.
pub const DEFAULT_TRIALS: u64 = 16;

/// Size the returned set is guaranteed to reach.
///
/// `n` for `e = 0`; `n − e` when `3e ≤ n` (then `p = 1`); otherwise
/// `max(n − e, ⌊(2/(3√3))·n^{3/2}/√e⌋)`.
pub fn spencer_guarantee(n: usize, e: usize) -> usize {
    let trivial = n.saturating_sub(e);
    if 3 * e <= n {
        return trivial;
    }
    let x = 2.0 / (3.0 * 3f64.sqrt()) * (n as f64).powf(1.5) / (e as f64).sqrt();
    // stay on the safe side of a rounding error at an integer
    trivial.max((x - 1e-9).floor() as usize)
}

pub fn spencer_independent_set(h: &TriangleHypergraph, seed: u64) -> Vec<usize> {
    spencer_independent_set_with_trials(h, seed, DEFAULT_TRIALS)
}

/// Sorted independent set of size at least [`spencer_guarantee`].
pub fn spencer_independent_set_with_trials(h: &TriangleHypergraph, seed: u64, trials: u64) -> Vec<usize> {
    let n = h.n;
    if h.edges.is_empty() {
        return (0..n).collect();
    }
    let inc = h.incidence();
    let p = (n as f64 / (3.0 * h.edges.len() as f64)).sqrt().min(1.0);

    let mut best = finish(h, &inc, derandomized(h, &inc, p));
    for i in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(attempt_seed(seed, i));
        let keep = (0..n).map(|_| rng.random_bool(p)).collect();
        let cand = finish(h, &inc, keep);
        if cand.len() > best.len() {
            best = cand;
        }
    }
    best
}

/// Fix `x_v ∈ {0, 1}` in order so that `Σ x_v − Σ_e Π x` never decreases
/// below its value at `x ≡ p`.
fn derandomized(h: &TriangleHypergraph, inc: &[Vec<usize>], p: f64) -> Vec<bool> {
    let mut x = vec![p; h.n];
    for v in 0..h.n {
        let loss: f64 = inc[v]
            .iter()
            .map(|&i| h.edges[i].iter().filter(|&&u| u != v).map(|&u| x[u]).product::<f64>())
            .sum();
        x[v] = if loss <= 1.0 { 1.0 } else { 0.0 };
    }
    x.into_iter().map(|y| y == 1.0).collect()
}

/// Delete the largest vertex of every edge inside `keep`, then add back
/// vertices (smallest first) while no edge closes.
fn finish(h: &TriangleHypergraph, inc: &[Vec<usize>], mut keep: Vec<bool>) -> Vec<usize> {
    for e in &h.edges {
        if e.iter().all(|&v| keep[v]) {
            keep[e[2]] = false;
        }
    }
    for v in 0..h.n {
        if !keep[v] && inc[v].iter().all(|&i| h.edges[i].iter().any(|&u| u != v && !keep[u])) {
            keep[v] = true;
        }
    }
    (0..h.n).filter(|&v| keep[v]).collect()
}
