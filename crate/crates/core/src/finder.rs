//! Extraction of a monochromatic hedgehog from a red/blue colouring of
//! `K_n^(3)`, guaranteed to succeed once `n ≥ 4t³`.
//!
//! 1. [`pair_profile`]: label the pair `uv` with colour `c` when fewer than
//!    `θ = C(t,2) + t` triples through `uv` have colour `c`.
//! 2. [`classify_vertices`]: tag a vertex red when it meets fewer than `2t²`
//!    red-labelled pairs, blue otherwise. No vertex meets `2t²` pairs of both
//!    labels when `n ≥ 4t³`, so blue-tagged vertices meet few blue labels.
//! 3. [`low_degree_body`]: inside the larger class (colour `m`) greedily pick
//!    `t` vertices spanning no `m`-labelled pair.
//! 4. [`embed_spines`]: every body pair has at least `θ` triples of colour
//!    `m`, enough to give each pair its own spine greedily.

use rayon::prelude::*;
use thiserror::Error;

use crate::colouring::{Colour, CompleteColouring, BLUE, RED};
use crate::combinadic::{binomial, rank2};
use crate::hedgehog::{HedgehogEmbedding, Spine};
use crate::verifiers::{verify_embedding, Violation};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FinderError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(
        "no body: class {colour} yields only {found:?} of {needed} independent vertices \
         (claim violation at vertex {claim_violation:?})"
    )]
    NoBody {
        colour: Colour,
        found: Vec<usize>,
        needed: usize,
        claim_violation: Option<usize>,
    },
    #[error("embedding failed: no spine left for body pair {pair:?}")]
    EmbeddingFailed { pair: [usize; 2] },
    #[error("produced embedding rejected by the verifier: {0}")]
    Rejected(Violation),
}

/// Per-pair triple counts and labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuxiliaryGraphColouring {
    pub n: usize,
    pub t: usize,
    /// `C(t,2) + t`.
    pub threshold: usize,
    /// `counts[rank2(u,v)][c]` = triples through `uv` of colour `c`.
    pub counts: Vec<[u32; 2]>,
}

impl AuxiliaryGraphColouring {
    /// Bitmask of labels on `uv` (bit `c` set iff fewer than θ triples of colour `c`).
    pub fn labels(&self, u: usize, v: usize) -> u8 {
        let [r, b] = self.counts[rank2(u.min(v), u.max(v))];
        let th = self.threshold as u32;
        u8::from(r < th) | u8::from(b < th) << 1
    }

    pub fn has_label(&self, u: usize, v: usize, c: Colour) -> bool {
        self.labels(u, v) >> c & 1 == 1
    }
}

fn check_input(colouring: &CompleteColouring, t: usize) -> Result<(), FinderError> {
    if colouring.k() != 3 || colouring.q() != 2 {
        return Err(FinderError::InvalidArgument(format!(
            "finder needs a 2-colouring of triples, got k = {} q = {}",
            colouring.k(),
            colouring.q()
        )));
    }
    if t < 2 {
        return Err(FinderError::InvalidArgument(format!(
            "body size t = {t} must be at least 2"
        )));
    }
    if colouring.n() < 3 {
        return Err(FinderError::InvalidArgument("need at least 3 vertices".into()));
    }
    Ok(())
}

/// Exact per-pair counts in one pass over all triples.
pub fn pair_profile(colouring: &CompleteColouring, t: usize) -> Result<AuxiliaryGraphColouring, FinderError> {
    pair_profile_sharded(colouring, t, 1)
}

/// [`pair_profile`] with the triple pass split by largest vertex into
/// `shards` pieces, each accumulating private counters that are merged at
/// the end. The result does not depend on `shards`.
pub fn pair_profile_sharded(
    colouring: &CompleteColouring,
    t: usize,
    shards: usize,
) -> Result<AuxiliaryGraphColouring, FinderError> {
    check_input(colouring, t)?;
    let n = colouring.n();
    let pairs = binomial(n, 2);
    let shards = shards.clamp(1, n);
    // blue counts only; red = (n - 2) - blue
    let blue: Vec<u32> = (0..shards)
        .into_par_iter()
        .map(|s| {
            let mut acc = vec![0u32; pairs];
            let lo = 2 + (n - 2) * s / shards;
            let hi = 2 + (n - 2) * (s + 1) / shards;
            let colours = colouring.colours();
            for c in lo..hi {
                let mut r = binomial(c, 3);
                for b in 1..c {
                    let mut bc = 0;
                    let row_b = b * (b - 1) / 2;
                    let row_c = c * (c - 1) / 2;
                    for a in 0..b {
                        let x = colours[r] as u32;
                        r += 1;
                        acc[row_b + a] += x;
                        acc[row_c + a] += x;
                        bc += x;
                    }
                    acc[row_c + b] += bc;
                }
            }
            acc
        })
        .reduce(
            || vec![0u32; pairs],
            |mut a, b| {
                a.iter_mut().zip(&b).for_each(|(x, y)| *x += y);
                a
            },
        );
    let through = (n - 2) as u32;
    Ok(AuxiliaryGraphColouring {
        n,
        t,
        threshold: binomial(t, 2) + t,
        counts: blue.into_iter().map(|b| [through - b, b]).collect(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexClass {
    pub tags: Vec<Colour>,
    /// `2t²`.
    pub degree_threshold: usize,
    /// `labelled_degree[v][c]` = pairs at `v` carrying label `c`.
    pub labelled_degree: Vec<[usize; 2]>,
    /// A vertex meeting at least `2t²` pairs of each label, if any.
    pub claim_violation: Option<usize>,
}

pub fn classify_vertices(aux: &AuxiliaryGraphColouring) -> VertexClass {
    let n = aux.n;
    let delta = 2 * aux.t * aux.t;
    let mut deg = vec![[0usize; 2]; n];
    for v in 1..n {
        for u in 0..v {
            let l = aux.labels(u, v);
            let bits = [(l & 1) as usize, (l >> 1 & 1) as usize];
            for (w, b) in [(u, bits), (v, bits)] {
                deg[w][0] += b[0];
                deg[w][1] += b[1];
            }
        }
    }
    let tags = deg.iter().map(|d| if d[0] < delta { RED } else { BLUE }).collect();
    let claim_violation = (0..n).find(|&v| deg[v][0] >= delta && deg[v][1] >= delta);
    VertexClass {
        tags,
        degree_threshold: delta,
        labelled_degree: deg,
        claim_violation,
    }
}

/// Greedy independent set of size `t` in the majority colour's labelled
/// graph, restricted to the majority class. Ties go to red.
pub fn low_degree_body(
    aux: &AuxiliaryGraphColouring,
    cls: &VertexClass,
    t: usize,
) -> Result<(Colour, Vec<usize>), FinderError> {
    let reds = cls.tags.iter().filter(|&&c| c == RED).count();
    let m = if 2 * reds >= cls.tags.len() { RED } else { BLUE };
    let class: Vec<usize> = (0..aux.n).filter(|&v| cls.tags[v] == m).collect();
    let mut discarded = vec![false; aux.n];
    let mut body = Vec::with_capacity(t);
    for &v in &class {
        if discarded[v] {
            continue;
        }
        body.push(v);
        if body.len() == t {
            return Ok((m, body));
        }
        for &u in &class {
            if u != v && aux.has_label(u, v, m) {
                discarded[u] = true;
            }
        }
    }
    Err(FinderError::NoBody {
        colour: m,
        found: body,
        needed: t,
        claim_violation: cls.claim_violation,
    })
}

/// Give each body pair (colex order) the smallest unused outside vertex
/// completing it to a triple of `colour`.
pub fn embed_spines(
    colouring: &CompleteColouring,
    body: &[usize],
    colour: Colour,
) -> Result<HedgehogEmbedding, FinderError> {
    if colouring.k() != 3 {
        return Err(FinderError::InvalidArgument(
            "spines embed into triple colourings".into(),
        ));
    }
    let n = colouring.n();
    let mut body = body.to_vec();
    body.sort_unstable();
    let mut used = vec![false; n];
    for &b in &body {
        if b >= n || std::mem::replace(&mut used[b], true) {
            return Err(FinderError::InvalidArgument(format!(
                "body {body:?} is not a set of vertices"
            )));
        }
    }
    let mut spines = Vec::with_capacity(binomial(body.len(), 2));
    for j in 1..body.len() {
        for i in 0..j {
            let (u, v) = (body[i], body[j]);
            let w = (0..n)
                .find(|&w| !used[w] && colouring.triple(u, v, w) == colour)
                .ok_or(FinderError::EmbeddingFailed { pair: [u, v] })?;
            used[w] = true;
            spines.push(Spine {
                tip: vec![u, v],
                vertex: w,
            });
        }
    }
    let emb = HedgehogEmbedding {
        k: 3,
        colour,
        body,
        spines,
    };
    verify_embedding(&emb, colouring).map_err(FinderError::Rejected)?;
    Ok(emb)
}

/// Intermediate results of a finder run.
#[derive(Clone, Debug)]
pub struct FinderTrace {
    pub aux: AuxiliaryGraphColouring,
    pub classes: VertexClass,
    pub majority: Option<Colour>,
    pub body: Vec<usize>,
}

/// Full pipeline; every returned embedding has passed `verify_embedding`.
pub fn find_monochromatic_hedgehog(colouring: &CompleteColouring, t: usize) -> Result<HedgehogEmbedding, FinderError> {
    find_with_trace(colouring, t, 1).0
}

pub fn find_with_trace(
    colouring: &CompleteColouring,
    t: usize,
    shards: usize,
) -> (Result<HedgehogEmbedding, FinderError>, Option<FinderTrace>) {
    let aux = match pair_profile_sharded(colouring, t, shards) {
        Ok(a) => a,
        Err(e) => return (Err(e), None),
    };
    let classes = classify_vertices(&aux);
    let mut trace = FinderTrace {
        aux,
        classes,
        majority: None,
        body: Vec::new(),
    };
    let (m, body) = match low_degree_body(&trace.aux, &trace.classes, t) {
        Ok(x) => x,
        Err(e) => return (Err(e), Some(trace)),
    };
    trace.majority = Some(m);
    trace.body = body.clone();
    (embed_spines(colouring, &body, m), Some(trace))
}
