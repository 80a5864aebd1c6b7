//! Deliberately naive reference implementations, used to cross-check the fast
//! verifiers on small instances.

use crate::colouring::{Colour, CompleteColouring};

/// Tries every body and every injective spine assignment. Exponential; only
/// for tiny hosts.
pub fn brute_force_hedgehog(host: &CompleteColouring, t: usize, colour: Colour) -> bool {
    let n = host.n();
    let k = host.k();
    let mut found = false;
    subsets(n, t, &mut |body| {
        if found {
            return;
        }
        let tips: Vec<Vec<usize>> = {
            let mut v = Vec::new();
            subsets(t, k - 1, &mut |idx| v.push(idx.iter().map(|&i| body[i]).collect()));
            v
        };
        let mut used = vec![false; n];
        for &b in body {
            used[b] = true;
        }
        found = assign(host, colour, &tips, 0, &mut used);
    });
    found
}

fn assign(host: &CompleteColouring, colour: Colour, tips: &[Vec<usize>], i: usize, used: &mut [bool]) -> bool {
    if i == tips.len() {
        return true;
    }
    for w in 0..host.n() {
        if used[w] {
            continue;
        }
        let mut e = tips[i].clone();
        e.push(w);
        if host.colour_unsorted(&e) != colour {
            continue;
        }
        used[w] = true;
        if assign(host, colour, tips, i + 1, used) {
            return true;
        }
        used[w] = false;
    }
    false
}

/// Visit every `k`-subset of `0..n` (increasing order inside each subset).
pub fn subsets(n: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            rec(v + 1, n, k, cur, f);
            cur.pop();
        }
    }
    rec(0, n, k, &mut Vec::with_capacity(k), f);
}

/// Colours on the internal edges of `set` in a graph colouring, as a bitmask.
pub fn colour_mask(graph: &CompleteColouring, set: &[usize]) -> u64 {
    let mut m = 0u64;
    for i in 0..set.len() {
        for j in i + 1..set.len() {
            m |= 1 << graph.edge(set[i], set[j]);
        }
    }
    m
}

/// Largest subset of `[n]` (n ≤ 20) containing no edge of the hypergraph.
pub fn brute_force_max_independent(n: usize, edges: &[[usize; 3]]) -> usize {
    assert!(n <= 20);
    let masks: Vec<u32> = edges.iter().map(|e| e.iter().fold(0, |m, &v| m | 1 << v)).collect();
    let mut best = 0;
    for set in 0u32..(1 << n) {
        if set.count_ones() as usize > best && masks.iter().all(|&m| set & m != m) {
            best = set.count_ones() as usize;
        }
    }
    best
}

/// Largest clique of `graph` whose edges avoid every colour outside `allowed` (bitmask).
pub fn brute_force_max_clique_within(graph: &CompleteColouring, allowed: u64) -> usize {
    let n = graph.n();
    assert!(n <= 30);
    // grow cliques vertex by vertex; exhaustive but pruned by the running best
    fn rec(graph: &CompleteColouring, allowed: u64, cur: &mut Vec<usize>, start: usize, best: &mut usize) {
        *best = (*best).max(cur.len());
        for v in start..graph.n() {
            if cur.len() + graph.n() - v <= *best {
                return;
            }
            if cur.iter().all(|&u| allowed >> graph.edge(u, v) & 1 == 1) {
                cur.push(v);
                rec(graph, allowed, cur, v + 1, best);
                cur.pop();
            }
        }
    }
    let mut best = 0;
    rec(graph, allowed, &mut Vec::new(), 0, &mut best);
    best
}
