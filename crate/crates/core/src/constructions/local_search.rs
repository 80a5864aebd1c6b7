//! Restart-based local search for graph colourings in which every `t`-clique
//! shows all `q` colours, optionally also avoiding triangles whose edge
//! colours are exactly a given triple of colours.
//!
//! Each step picks a violated constraint at random and recolours one of its
//! edges. Candidate moves for a deficient clique put one of its missing
//! colours on one of its edges; for a forbidden triangle any other colour on
//! one of its edges. The move creating the fewest violations wins (ties and a
//! small noise fraction are resolved at random).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::random::attempt_seed;
use crate::colouring::{Colour, CompleteColouring};
use crate::combinadic::{binomial, for_each_subset, rank2, rank3, unrank};
use crate::error::{Error, Result};

/// Refuse problems with more cliques than this (memory for the incidence table).
pub const MAX_CLIQUES: usize = 4_000_000;

const NOISE: f64 = 0.1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColouringProblem {
    pub n: usize,
    pub t: usize,
    pub q: usize,
    /// Forbid triangles coloured exactly with these three colours.
    pub forbid_rainbow: Option<[Colour; 3]>,
}

#[derive(Clone, Debug)]
pub struct SearchRun {
    pub colouring: Option<CompleteColouring>,
    /// Attempts started (restarts, or candidate colourings in rejection mode).
    pub tries: u64,
    pub winning_seed: Option<u64>,
}

impl ColouringProblem {
    fn check(&self) -> Result<()> {
        if self.n > 64 || self.t < 2 || self.q < 1 || self.q > 8 {
            return Err(Error::InvalidArgument(format!(
                "local search supports n <= 64, t >= 2, 1 <= q <= 8; got n={} t={} q={}",
                self.n, self.t, self.q
            )));
        }
        if binomial(self.n, self.t) > MAX_CLIQUES {
            return Err(Error::Unsupported(format!(
                "C({}, {}) cliques exceeds the local-search table limit {MAX_CLIQUES}",
                self.n, self.t
            )));
        }
        Ok(())
    }
}

/// Restart-based local search. Restart `r` uses seed `attempt_seed(seed, r)`;
/// the lowest successful restart index wins, independent of thread count.
pub fn local_search(problem: ColouringProblem, seed: u64, restarts: u64, steps: u64) -> Result<SearchRun> {
    problem.check()?;
    let incidence = Incidence::new(problem.n, problem.t);
    let hit = (0..restarts).into_par_iter().find_map_first(|r| {
        let s = attempt_seed(seed, r);
        let mut state = State::random(&problem, &incidence, s);
        state.descend(steps).then(|| (r, s, state.into_colouring()))
    });
    Ok(match hit {
        Some((r, s, c)) => SearchRun {
            colouring: Some(c),
            tries: r + 1,
            winning_seed: Some(s),
        },
        None => SearchRun {
            colouring: None,
            tries: restarts,
            winning_seed: None,
        },
    })
}

/// Pure rejection sampling: fresh uniform colourings until one satisfies everything.
pub fn rejection_search(problem: ColouringProblem, seed: u64, tries: u64) -> Result<SearchRun> {
    problem.check()?;
    let incidence = Incidence::new(problem.n, problem.t);
    let hit = (0..tries).into_par_iter().find_map_first(|r| {
        let s = attempt_seed(seed, r);
        let state = State::random(&problem, &incidence, s);
        state.violations().eq(&0).then(|| (r, s, state.into_colouring()))
    });
    Ok(match hit {
        Some((r, s, c)) => SearchRun {
            colouring: Some(c),
            tries: r + 1,
            winning_seed: Some(s),
        },
        None => SearchRun {
            colouring: None,
            tries,
            winning_seed: None,
        },
    })
}

/// For each edge (by pair rank), the ranks of the `t`-cliques containing it.
struct Incidence {
    t: usize,
    cliques: usize,
    edge_cliques: Vec<Vec<u32>>,
}

impl Incidence {
    fn new(n: usize, t: usize) -> Self {
        let mut edge_cliques = vec![Vec::new(); binomial(n, 2)];
        let mut cliques = 0;
        for_each_subset(n, t, |s| {
            for j in 1..t {
                for i in 0..j {
                    edge_cliques[rank2(s[i], s[j])].push(cliques as u32);
                }
            }
            cliques += 1;
        });
        Incidence {
            t,
            cliques,
            edge_cliques,
        }
    }
}

/// Set of u32 with O(1) insert/remove/random pick.
struct IndexedSet {
    pos: Vec<u32>,
    items: Vec<u32>,
}

impl IndexedSet {
    fn new(universe: usize) -> Self {
        IndexedSet {
            pos: vec![u32::MAX; universe],
            items: Vec::new(),
        }
    }

    fn insert(&mut self, x: u32) {
        if self.pos[x as usize] == u32::MAX {
            self.pos[x as usize] = self.items.len() as u32;
            self.items.push(x);
        }
    }

    fn remove(&mut self, x: u32) {
        let p = self.pos[x as usize];
        if p != u32::MAX {
            let last = *self.items.last().unwrap();
            self.items[p as usize] = last;
            self.pos[last as usize] = p;
            self.items.pop();
            self.pos[x as usize] = u32::MAX;
        }
    }

    fn len(&self) -> usize {
        self.items.len()
    }
}

struct State<'a> {
    problem: &'a ColouringProblem,
    inc: &'a Incidence,
    rng: ChaCha8Rng,
    colours: Vec<Colour>,
    /// counts[clique * q + c] = edges of colour c inside the clique
    counts: Vec<u8>,
    missing: Vec<u8>,
    bad_cliques: IndexedSet,
    bad_triangles: IndexedSet,
    rainbow_mask: u16,
}

impl<'a> State<'a> {
    fn random(problem: &'a ColouringProblem, inc: &'a Incidence, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = problem.n;
        let q = problem.q;
        let colours: Vec<Colour> = (0..binomial(n, 2)).map(|_| rng.random_range(0..q) as Colour).collect();
        let mut counts = vec![0u8; inc.cliques * q];
        for (e, cl) in inc.edge_cliques.iter().enumerate() {
            for &c in cl {
                counts[c as usize * q + colours[e] as usize] += 1;
            }
        }
        let mut missing = vec![0u8; inc.cliques];
        let mut bad_cliques = IndexedSet::new(inc.cliques);
        for c in 0..inc.cliques {
            missing[c] = counts[c * q..(c + 1) * q].iter().filter(|&&x| x == 0).count() as u8;
            if missing[c] > 0 {
                bad_cliques.insert(c as u32);
            }
        }
        let rainbow_mask = problem
            .forbid_rainbow
            .map_or(0, |p| p.iter().fold(0u16, |m, &c| m | 1 << c));
        let mut state = State {
            problem,
            inc,
            rng,
            colours,
            counts,
            missing,
            bad_cliques,
            bad_triangles: IndexedSet::new(binomial(n, 3)),
            rainbow_mask,
        };
        if rainbow_mask != 0 {
            for_each_subset(n, 3, |s| {
                if state.is_rainbow(s[0], s[1], s[2]) {
                    state.bad_triangles.insert(rank3(s[0], s[1], s[2]) as u32);
                }
            });
        }
        state
    }

    fn edge(&self, u: usize, v: usize) -> Colour {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        self.colours[rank2(a, b)]
    }

    fn is_rainbow(&self, a: usize, b: usize, c: usize) -> bool {
        let m = 1u16 << self.edge(a, b) | 1 << self.edge(a, c) | 1 << self.edge(b, c);
        m == self.rainbow_mask
    }

    fn violations(&self) -> usize {
        self.bad_cliques.len() + self.bad_triangles.len()
    }

    /// Change in violation count if edge (u, v) took colour `to`.
    fn delta(&self, u: usize, v: usize, to: Colour) -> i64 {
        let q = self.problem.q;
        let e = rank2(u.min(v), u.max(v));
        let from = self.colours[e];
        if from == to {
            return 0;
        }
        let mut d = 0i64;
        for &c in &self.inc.edge_cliques[e] {
            let base = c as usize * q;
            let mut missing = self.missing[c as usize] as i64;
            let was_bad = missing > 0;
            if self.counts[base + from as usize] == 1 {
                missing += 1;
            }
            if self.counts[base + to as usize] == 0 {
                missing -= 1;
            }
            d += (missing > 0) as i64 - was_bad as i64;
        }
        if self.rainbow_mask != 0 {
            for w in 0..self.problem.n {
                if w == u || w == v {
                    continue;
                }
                let others = 1u16 << self.edge(u, w) | 1 << self.edge(v, w);
                let before = (others | 1 << from) == self.rainbow_mask;
                let after = (others | 1 << to) == self.rainbow_mask;
                d += after as i64 - before as i64;
            }
        }
        d
    }

    fn apply(&mut self, u: usize, v: usize, to: Colour) {
        let q = self.problem.q;
        let (u, v) = (u.min(v), u.max(v));
        let e = rank2(u, v);
        let from = self.colours[e];
        if from == to {
            return;
        }
        for &c in &self.inc.edge_cliques[e] {
            let base = c as usize * q;
            self.counts[base + from as usize] -= 1;
            if self.counts[base + from as usize] == 0 {
                self.missing[c as usize] += 1;
            }
            if self.counts[base + to as usize] == 0 {
                self.missing[c as usize] -= 1;
            }
            self.counts[base + to as usize] += 1;
            if self.missing[c as usize] > 0 {
                self.bad_cliques.insert(c);
            } else {
                self.bad_cliques.remove(c);
            }
        }
        self.colours[e] = to;
        if self.rainbow_mask != 0 {
            for w in 0..self.problem.n {
                if w == u || w == v {
                    continue;
                }
                let mut s = [u, v, w];
                s.sort_unstable();
                let r = rank3(s[0], s[1], s[2]) as u32;
                if self.is_rainbow(s[0], s[1], s[2]) {
                    self.bad_triangles.insert(r);
                } else {
                    self.bad_triangles.remove(r);
                }
            }
        }
    }

    /// Run up to `steps` moves; true once no constraint is violated.
    fn descend(&mut self, steps: u64) -> bool {
        let q = self.problem.q;
        let t = self.inc.t;
        let mut moves: Vec<(usize, usize, Colour)> = Vec::new();
        for _ in 0..steps {
            let total = self.violations();
            if total == 0 {
                return true;
            }
            moves.clear();
            let pick = self.rng.random_range(0..total);
            if pick < self.bad_cliques.len() {
                let c = self.bad_cliques.items[pick] as usize;
                let verts = unrank(c, t);
                let absent: Vec<Colour> = (0..q as Colour)
                    .filter(|&x| self.counts[c * q + x as usize] == 0)
                    .collect();
                for j in 1..t {
                    for i in 0..j {
                        for &x in &absent {
                            moves.push((verts[i], verts[j], x));
                        }
                    }
                }
            } else {
                let tri = unrank(self.bad_triangles.items[pick - self.bad_cliques.len()] as usize, 3);
                for (a, b) in [(tri[0], tri[1]), (tri[0], tri[2]), (tri[1], tri[2])] {
                    let cur = self.edge(a, b);
                    for x in (0..q as Colour).filter(|&x| x != cur) {
                        moves.push((a, b, x));
                    }
                }
            }
            let chosen = if self.rng.random_bool(NOISE) {
                moves[self.rng.random_range(0..moves.len())]
            } else {
                let mut best = i64::MAX;
                let mut ties = Vec::new();
                for &m in &moves {
                    let d = self.delta(m.0, m.1, m.2);
                    if d < best {
                        best = d;
                        ties.clear();
                    }
                    if d == best {
                        ties.push(m);
                    }
                }
                ties[self.rng.random_range(0..ties.len())]
            };
            self.apply(chosen.0, chosen.1, chosen.2);
        }
        self.violations() == 0
    }

    fn into_colouring(self) -> CompleteColouring {
        CompleteColouring::new(self.problem.n, 2, self.problem.q, self.colours).expect("search keeps colours in range")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verifiers::every_clique_all_colours;

    #[test]
    fn incremental_state_matches_recount() {
        let problem = ColouringProblem {
            n: 9,
            t: 4,
            q: 3,
            forbid_rainbow: Some([0, 1, 2]),
        };
        let inc = Incidence::new(9, 4);
        let mut st = State::random(&problem, &inc, 4);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..300 {
            let u = rng.random_range(0..9);
            let v = (u + rng.random_range(1..9)) % 9;
            let to = rng.random_range(0..3) as Colour;
            let before = st.violations() as i64;
            let d = st.delta(u, v, to);
            st.apply(u, v, to);
            assert_eq!(st.violations() as i64, before + d);
            // recount from scratch
            let g = CompleteColouring::new(9, 2, 3, st.colours.clone()).unwrap();
            let mut bad = 0;
            for_each_subset(9, 4, |s| {
                let mut m = 0u8;
                for j in 1..4 {
                    for i in 0..j {
                        m |= 1 << g.edge(s[i], s[j]);
                    }
                }
                bad += (m != 7) as usize;
            });
            let mut rb = 0;
            for_each_subset(9, 3, |s| {
                let m = 1u8 << g.edge(s[0], s[1]) | 1 << g.edge(s[0], s[2]) | 1 << g.edge(s[1], s[2]);
                rb += (m == 7) as usize;
            });
            assert_eq!(st.bad_cliques.len(), bad);
            assert_eq!(st.bad_triangles.len(), rb);
        }
    }

    #[test]
    fn finds_small_scattered_colouring() {
        let problem = ColouringProblem {
            n: 7,
            t: 4,
            q: 3,
            forbid_rainbow: None,
        };
        let run = local_search(problem, 1, 20, 2000).unwrap();
        let g = run.colouring.expect("n=7 t=4 q=3 is easy");
        assert!(every_clique_all_colours(&g, 4, 3).is_none());
    }

    #[test]
    fn rejection_handles_the_single_clique_case() {
        let problem = ColouringProblem {
            n: 4,
            t: 4,
            q: 4,
            forbid_rainbow: None,
        };
        let run = rejection_search(problem, 3, 10_000).unwrap();
        let g = run.colouring.unwrap();
        assert!(every_clique_all_colours(&g, 4, 4).is_none());
    }
}
