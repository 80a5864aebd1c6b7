//! Exact decision procedure for "does this colouring contain a monochromatic
//! hedgehog of colour c?".
//!
//! Bodies are enumerated lexicographically. A partial body survives only while
//! every tip it already determines has at least one outside vertex completing
//! it to a `c`-coloured edge. For a complete body the spines are assigned by
//! maximum bipartite matching (tips on one side, non-body vertices on the
//! other), so a `None` answer is exhaustive.

use std::collections::HashMap;

use crate::bitset::Bitset;
use crate::colouring::{Colour, CompleteColouring};
use crate::hedgehog::{HedgehogEmbedding, Spine};

pub fn has_monochromatic_hedgehog(host: &CompleteColouring, t: usize, colour: Colour) -> Option<HedgehogEmbedding> {
    let k = host.k();
    let n = host.n();
    if t + 1 < k {
        return None;
    }
    let tips_needed = subsets_count(t, k - 1);
    if n < t + tips_needed {
        return None;
    }
    let mut search = Search {
        host,
        colour,
        t,
        k,
        n,
        candidates: HashMap::new(),
        body: Vec::with_capacity(t),
        outside: Bitset::prefix(n, n),
    };
    search.extend(0)
}

struct Search<'a> {
    host: &'a CompleteColouring,
    colour: Colour,
    t: usize,
    k: usize,
    n: usize,
    /// Vertices `w` outside `tip` with `tip ∪ {w}` of the target colour.
    candidates: HashMap<Vec<usize>, Bitset>,
    body: Vec<usize>,
    /// Complement of the current body.
    outside: Bitset,
}

impl Search<'_> {
    fn ensure_candidates(&mut self, tip: &[usize]) {
        if !self.candidates.contains_key(tip) {
            let mut set = Bitset::new(self.n);
            let mut edge = tip.to_vec();
            edge.push(0);
            for w in 0..self.n {
                if tip.contains(&w) {
                    continue;
                }
                *edge.last_mut().unwrap() = w;
                if self.host.colour_unsorted(&edge) == self.colour {
                    set.insert(w);
                }
            }
            self.candidates.insert(tip.to_vec(), set);
        }
    }

    fn extend(&mut self, start: usize) -> Option<HedgehogEmbedding> {
        if self.body.len() == self.t {
            return self.assign_spines();
        }
        let still_needed = self.t - self.body.len();
        for v in start..=self.n - still_needed {
            self.body.push(v);
            self.outside.remove(v);
            if self.new_tips_viable() {
                if let Some(found) = self.extend(v + 1) {
                    return Some(found);
                }
            }
            self.outside.insert(v);
            self.body.pop();
        }
        None
    }

    /// Tips containing the newest body vertex must each keep a candidate spine
    /// outside the body. (Earlier tips were checked when their last vertex
    /// arrived, but the new vertex may have stolen a candidate.)
    fn new_tips_viable(&mut self) -> bool {
        let b = self.body.len();
        if b + 1 < self.k {
            return true;
        }
        let newest = *self.body.last().unwrap();
        for tip in tips_of(&self.body, self.k - 1) {
            self.ensure_candidates(&tip);
            let cand = &self.candidates[&tip];
            if (tip.contains(&newest) || cand.contains(newest)) && cand.intersection_len(&self.outside) == 0 {
                return false;
            }
        }
        true
    }

    fn assign_spines(&mut self) -> Option<HedgehogEmbedding> {
        let tips = tips_of(&self.body, self.k - 1);
        for tip in &tips {
            self.ensure_candidates(tip);
        }
        let options: Vec<Vec<usize>> = tips
            .iter()
            .map(|tip| self.candidates[tip].intersection(&self.outside).iter().collect())
            .collect();
        // fail-first: tips with fewest options are matched first
        let mut order: Vec<usize> = (0..tips.len()).collect();
        order.sort_by_key(|&i| options[i].len());
        let mut owner: HashMap<usize, usize> = HashMap::new();
        for &i in &order {
            let mut visited = Vec::new();
            if !augment(i, &options, &mut owner, &mut visited) {
                return None;
            }
        }
        let mut spine_of = vec![usize::MAX; tips.len()];
        for (&w, &i) in &owner {
            spine_of[i] = w;
        }
        Some(HedgehogEmbedding {
            k: self.k,
            colour: self.colour,
            body: self.body.clone(),
            spines: tips
                .into_iter()
                .zip(spine_of)
                .map(|(tip, vertex)| Spine { tip, vertex })
                .collect(),
        })
    }
}

/// Kuhn's augmenting path step.
fn augment(i: usize, options: &[Vec<usize>], owner: &mut HashMap<usize, usize>, visited: &mut Vec<usize>) -> bool {
    for &w in &options[i] {
        if visited.contains(&w) {
            continue;
        }
        visited.push(w);
        match owner.get(&w).copied() {
            None => {
                owner.insert(w, i);
                return true;
            }
            Some(j) => {
                if augment(j, options, owner, visited) {
                    owner.insert(w, i);
                    return true;
                }
            }
        }
    }
    false
}

/// All `size`-subsets of `body` (body is increasing, so subsets come out sorted),
/// in colex order of positions.
fn tips_of(body: &[usize], size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..size).collect();
    if size > body.len() {
        return out;
    }
    loop {
        out.push(idx.iter().map(|&i| body[i]).collect());
        // colex successor on positions
        let mut advanced = false;
        for i in 0..size {
            let limit = if i + 1 < size { idx[i + 1] } else { body.len() };
            if idx[i] + 1 < limit {
                idx[i] += 1;
                for (j, x) in idx.iter_mut().enumerate().take(i) {
                    *x = j;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            return out;
        }
    }
}

fn subsets_count(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}
