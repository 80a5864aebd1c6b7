//! Exact maximum clique by branch and bound with greedy colouring bounds.

use crate::bitset::Bitset;
use crate::colouring::{Colour, CompleteColouring};

/// Adjacency of the graph on `g`'s vertices whose edges are the pairs not coloured `avoid`.
pub(crate) fn avoiding_adjacency(g: &CompleteColouring, avoid: Colour) -> Vec<Bitset> {
    let n = g.n();
    let mut adj = vec![Bitset::new(n); n];
    for v in 1..n {
        for u in 0..v {
            if g.edge(u, v) != avoid {
                adj[u].insert(v);
                adj[v].insert(u);
            }
        }
    }
    adj
}

/// Largest clique, or the first clique of order `target` if one exists.
pub(crate) fn max_clique(adj: &[Bitset], target: Option<usize>) -> Vec<usize> {
    let n = adj.len();
    let mut s = Search {
        adj,
        best: Vec::new(),
        target: target.unwrap_or(usize::MAX),
    };
    if n > 0 && s.target > 0 {
        s.expand(Bitset::prefix(n, n), &mut Vec::new());
    }
    let mut best = s.best;
    best.sort_unstable();
    best
}

struct Search<'a> {
    adj: &'a [Bitset],
    best: Vec<usize>,
    target: usize,
}

impl Search<'_> {
    /// Returns true once the target is reached.
    fn expand(&mut self, mut cand: Bitset, cur: &mut Vec<usize>) -> bool {
        let (order, bounds) = self.colour_classes(&cand);
        for i in (0..order.len()).rev() {
            if cur.len() + bounds[i] <= self.best.len() {
                return false;
            }
            let v = order[i];
            cur.push(v);
            if cur.len() >= self.target {
                self.best = cur.clone();
                return true;
            }
            let next = cand.intersection(&self.adj[v]);
            if next.is_empty() {
                if cur.len() > self.best.len() {
                    self.best = cur.clone();
                }
            } else if self.expand(next, cur) {
                return true;
            }
            cur.pop();
            cand.remove(v);
        }
        false
    }

    /// Greedy colouring of `cand`; vertices listed class by class with the class number as bound.
    fn colour_classes(&self, cand: &Bitset) -> (Vec<usize>, Vec<usize>) {
        let mut order = Vec::with_capacity(cand.len());
        let mut bounds = Vec::with_capacity(cand.len());
        let mut left = cand.clone();
        let mut k = 0;
        while !left.is_empty() {
            k += 1;
            let mut avail = left.clone();
            while let Some(v) = avail.first() {
                avail.remove(v);
                avail.difference_with(&self.adj[v]);
                left.remove(v);
                order.push(v);
                bounds.push(k);
            }
        }
        (order, bounds)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::random_colouring;

    fn brute(adj: &[Bitset]) -> usize {
        let n = adj.len();
        (0u32..1 << n)
            .filter(|&m| {
                (0..n).all(|v| m >> v & 1 == 0 || (0..n).all(|u| u == v || m >> u & 1 == 0 || adj[v].contains(u)))
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn agrees_with_subset_enumeration() {
        for seed in 0..60 {
            let n = 4 + (seed as usize % 11);
            let g = random_colouring(n, 2, 3, seed).unwrap();
            let adj = avoiding_adjacency(&g, 0);
            let c = max_clique(&adj, None);
            assert_eq!(c.len(), brute(&adj), "seed {seed}");
            for (i, &u) in c.iter().enumerate() {
                for &v in &c[i + 1..] {
                    assert!(adj[u].contains(v));
                }
            }
        }
    }

    #[test]
    fn target_stops_early() {
        let g = CompleteColouring::constant(20, 2, 2, 1).unwrap();
        let adj = avoiding_adjacency(&g, 0);
        assert_eq!(max_clique(&adj, Some(5)).len(), 5);
        assert_eq!(max_clique(&adj, None).len(), 20);
        assert!(max_clique(&adj, Some(0)).is_empty());
    }
}
