//! Small values of `F(t)`: the least `n` such that every red/blue/green/yellow
//! colouring of `K_n` has a red-blue-green triangle or a `t`-clique with at
//! most three colours.

use std::fmt;

use rayon::prelude::*;

use crate::colouring::{CompleteColouring, RBG, YELLOW};
use crate::combinadic::rank2;
use crate::constructions::local_search::{local_search, ColouringProblem};
use crate::error::{invalid, Error, Result};
use crate::report::SearchReport;
use crate::verifiers::{every_clique_all_colours, rainbow_triangle_free};

/// Largest `n` decided by exhaustive search.
pub const EXHAUSTIVE_MAX_N: usize = 8;

/// A colouring showing `F(t) > n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FWitness {
    t: usize,
    colouring: CompleteColouring,
}

impl FWitness {
    /// Accepts `colouring` only if it has no red-blue-green triangle and every
    /// `t`-clique uses all four colours.
    pub fn verify(t: usize, colouring: CompleteColouring) -> Result<Self> {
        if colouring.k() != 2 || colouring.q() != 4 {
            return invalid(format!(
                "need a 4-colouring of K_n, got k = {} q = {}",
                colouring.k(),
                colouring.q()
            ));
        }
        if let Some(tri) = rainbow_triangle_free(&colouring, RBG) {
            return invalid(format!("triangle {tri:?} is red-blue-green"));
        }
        if let Some(w) = every_clique_all_colours(&colouring, t, 4) {
            return invalid(format!("clique {:?} uses only colours {:?}", w.vertices, w.colours));
        }
        Ok(FWitness { t, colouring })
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn n(&self) -> usize {
        self.colouring.n()
    }

    pub fn colouring(&self) -> &CompleteColouring {
        &self.colouring
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FValue {
    Exact(usize),
    /// `F(t) ≥ n`; witnesses exist up to `n − 1` and nothing above was decided.
    AtLeast(usize),
}

impl fmt::Display for FValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FValue::Exact(n) => write!(f, "= {n}"),
            FValue::AtLeast(n) => write!(f, ">= {n}"),
        }
    }
}

/// What each method said at one order: `Some(true)` means a witness was found.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FStep {
    pub n: usize,
    /// Exhaustive: `Some(false)` proves no witness exists.
    pub exhaustive: Option<bool>,
    /// Local search: `Some(false)` only means nothing was found.
    pub local_search: Option<bool>,
}

impl FStep {
    /// The two methods can only disagree if local search finds a witness
    /// that exhaustive search ruled out.
    pub fn consistent(&self) -> bool {
        !(self.exhaustive == Some(false) && self.local_search == Some(true))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FOracleConfig {
    pub seed: u64,
    pub restarts: u64,
    pub steps: u64,
    /// Exhaustive search runs for `n ≤ exhaustive_max_n` (capped at [`EXHAUSTIVE_MAX_N`]).
    pub exhaustive_max_n: usize,
    /// Also run local search where exhaustive search applies.
    pub cross_check: bool,
}

impl Default for FOracleConfig {
    fn default() -> Self {
        FOracleConfig {
            seed: 0,
            restarts: 20,
            steps: 20_000,
            exhaustive_max_n: EXHAUSTIVE_MAX_N,
            cross_check: false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct FOracleResult {
    pub t: usize,
    pub value: FValue,
    pub steps: Vec<FStep>,
    /// Witness for the largest order shown to be below `F(t)`.
    pub witness: Option<FWitness>,
    pub report: SearchReport,
}

pub fn f_oracle(t: usize, n_cap: usize) -> Result<FOracleResult> {
    f_oracle_with(t, n_cap, FOracleConfig::default())
}

/// Walk `n = t, t+1, ...` up to `n_cap` until no witness exists (exact value)
/// or none is found (lower bound).
pub fn f_oracle_with(t: usize, n_cap: usize, cfg: FOracleConfig) -> Result<FOracleResult> {
    if t < 2 {
        return invalid(format!("t = {t} must be at least 2"));
    }
    let mut report = SearchReport::new("f_oracle", Some(cfg.seed))
        .param("t", t)
        .param("cap", n_cap)
        .param("restarts", cfg.restarts)
        .param("steps", cfg.steps)
        .param("exhaustive_max_n", cfg.exhaustive_max_n.min(EXHAUSTIVE_MAX_N));
    // below t there are no t-cliques: all yellow works
    let mut witness =
        (t > 2).then(|| FWitness::verify(t, CompleteColouring::constant(t - 1, 2, 4, YELLOW).unwrap()).unwrap());
    let mut steps = Vec::new();
    let mut value = FValue::AtLeast(n_cap.max(t - 1) + 1);
    for n in t..=n_cap {
        let exhaustive_applies = n <= cfg.exhaustive_max_n.min(EXHAUSTIVE_MAX_N);
        let exhaustive = exhaustive_applies.then(|| exhaustive_f_witness(t, n));
        let local = if !exhaustive_applies || cfg.cross_check {
            match local_search(
                ColouringProblem {
                    n,
                    t,
                    q: 4,
                    forbid_rainbow: Some(RBG),
                },
                cfg.seed ^ n as u64,
                cfg.restarts,
                cfg.steps,
            ) {
                Ok(run) => {
                    report.tries += run.tries;
                    Some(run.colouring)
                }
                Err(Error::Unsupported(_)) if exhaustive_applies => None,
                Err(e) => return Err(e),
            }
        } else {
            None
        };
        let step = FStep {
            n,
            exhaustive: exhaustive.as_ref().map(Option::is_some),
            local_search: local.as_ref().map(Option::is_some),
        };
        steps.push(step);
        let found = exhaustive.flatten().or(local.flatten());
        match found {
            Some(c) => {
                let w = FWitness::verify(t, c).unwrap_or_else(|e| panic!("search returned a non-witness: {e}"));
                witness = Some(w);
            }
            None if step.exhaustive == Some(false) => {
                value = FValue::Exact(n);
                break;
            }
            None => {
                value = FValue::AtLeast(n);
                break;
            }
        }
    }
    report.outcome = format!("F({t}) {value}");
    Ok(FOracleResult {
        t,
        value,
        steps,
        witness,
        report,
    })
}

/// Exhaustive search for an [`FWitness`] colouring on `n ≤ 8` vertices.
///
/// Edges are coloured in rank order. Each new edge `uv` (with `u < v`)
/// completes the triangles `wuv` and the `t`-cliques whose two largest
/// vertices are `u, v`, so both conditions are checked as soon as they are
/// decided. Red, blue and green are interchangeable, so they must first
/// appear in that order.
pub fn exhaustive_f_witness(t: usize, n: usize) -> Option<CompleteColouring> {
    assert!(
        (2..=EXHAUSTIVE_MAX_N).contains(&n),
        "exhaustive search covers 2 <= n <= {EXHAUSTIVE_MAX_N}"
    );
    let edges: Vec<(usize, usize)> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    // split on the first few edges' colours so the branches can run in parallel
    let split = edges.len().min(4);
    let mut prefixes = vec![Partial::new(n, t)];
    for &(u, v) in &edges[..split] {
        let mut next = Vec::new();
        for p in &prefixes {
            for c in p.choices() {
                let mut q = p.clone();
                if q.assign(u, v, c) {
                    next.push(q);
                }
            }
        }
        prefixes = next;
    }
    let found = prefixes
        .into_par_iter()
        .find_map_first(|mut p| p.complete(&edges, split).then_some(p));
    found.map(|p| CompleteColouring::new(n, 2, 4, p.colours).unwrap())
}

#[derive(Clone)]
struct Partial {
    t: usize,
    colours: Vec<u8>,
    /// `avoid[c][v]`: neighbours of `v` along coloured edges not of colour `c`.
    avoid: [[u64; EXHAUSTIVE_MAX_N]; 4],
    /// Red, blue, green colours used so far (they appear in order).
    rbg_used: u8,
}

impl Partial {
    fn new(n: usize, t: usize) -> Self {
        Partial {
            t,
            colours: vec![0; n * (n - 1) / 2],
            avoid: [[0; EXHAUSTIVE_MAX_N]; 4],
            rbg_used: 0,
        }
    }

    fn choices(&self) -> impl Iterator<Item = u8> {
        let fresh = self.rbg_used.min(2);
        std::iter::once(YELLOW).chain(0..=fresh)
    }

    /// Colour `uv`; false if that completes a forbidden triangle or clique.
    fn assign(&mut self, u: usize, v: usize, c: u8) -> bool {
        for w in 0..u {
            let a = self.colours[rank2(w, u)];
            let b = self.colours[rank2(w, v)];
            if c != YELLOW && a != YELLOW && b != YELLOW && a != b && a != c && b != c {
                return false;
            }
        }
        for x in 0..4 {
            if x == c {
                continue;
            }
            let below = (1u64 << u) - 1;
            let common = self.avoid[x as usize][u] & self.avoid[x as usize][v] & below;
            if has_clique(&self.avoid[x as usize], common, self.t - 2) {
                return false;
            }
        }
        for x in 0..4 {
            if x != c {
                self.avoid[x as usize][u] |= 1 << v;
                self.avoid[x as usize][v] |= 1 << u;
            }
        }
        self.colours[rank2(u, v)] = c;
        if c != YELLOW && c == self.rbg_used {
            self.rbg_used += 1;
        }
        true
    }

    fn complete(&mut self, edges: &[(usize, usize)], i: usize) -> bool {
        let Some(&(u, v)) = edges.get(i) else { return true };
        for c in self.choices().collect::<Vec<_>>() {
            let saved = self.clone();
            if self.assign(u, v, c) && self.complete(edges, i + 1) {
                return true;
            }
            *self = saved;
        }
        false
    }
}

/// Whether `cand` contains a clique of order `k` in `adj`.
fn has_clique(adj: &[u64; EXHAUSTIVE_MAX_N], cand: u64, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if (cand.count_ones() as usize) < k {
        return false;
    }
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if has_clique(adj, rest & adj[v], k - 1) {
            return true;
        }
    }
    false
}
