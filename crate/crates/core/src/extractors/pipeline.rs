//! Monochromatic hedgehogs in red/blue/green colourings of triples.
//!
//! Pairs are labelled with each colour they see in fewer than `θ = C(t,2)+t`
//! triples. A body spanning no `c`-label can always be given `c`-spines, so
//! the work is to find `t` vertices avoiding some label. Stages:
//!
//! 1. label every pair ([`LabelColouring`]);
//! 2. collect the triangles whose labels cover red, blue and green;
//! 3. take an independent set `U` of that hypergraph;
//! 4. a vertex of `U` on `t` doubly-labelled pairs gives a body directly;
//! 5. otherwise peel `U` to `V` with no doubly-labelled pair;
//! 6. look for a large clique of `V` missing one label (yellow = no label);
//! 7. if it misses yellow, it is a Gallai colouring: take a two-coloured
//!    sub-clique, which misses a real colour.

use std::fmt;
use std::str::FromStr;

use crate::colouring::{Colour, CompleteColouring, BLUE, GREEN, RED, YELLOW};
use crate::combinadic::{binomial, rank2};
use crate::error::{invalid, Error, Result};
use crate::finder::embed_spines;
use crate::hedgehog::HedgehogEmbedding;
use crate::witness::CliqueWitness;

use super::clique_search::clique_avoiding;
use super::gallai::{gallai_two_coloured_clique, GallaiColouring};
use super::spencer::{spencer_independent_set_with_trials, TriangleHypergraph, DEFAULT_TRIALS};

const ALL: u8 = 0b111;

/// Pair labels as bitmasks over red, blue, green; `0` reads as yellow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelColouring {
    pub n: usize,
    pub t: usize,
    pub threshold: usize,
    /// Indexed by pair rank.
    pub labels: Vec<u8>,
}

impl LabelColouring {
    pub fn new(colouring: &CompleteColouring, t: usize) -> Result<Self> {
        if colouring.k() != 3 || colouring.q() != 3 {
            return invalid(format!(
                "need a 3-colouring of triples, got k = {} q = {}",
                colouring.k(),
                colouring.q()
            ));
        }
        let n = colouring.n();
        let mut counts = vec![[0u32; 3]; binomial(n, 2)];
        let mut r = 0;
        for c in 2..n {
            for b in 1..c {
                for a in 0..b {
                    let x = colouring.colour_at(r) as usize;
                    r += 1;
                    counts[rank2(a, b)][x] += 1;
                    counts[rank2(a, c)][x] += 1;
                    counts[rank2(b, c)][x] += 1;
                }
            }
        }
        let threshold = binomial(t, 2) + t;
        let labels = counts
            .iter()
            .map(|cs| {
                (0..3)
                    .filter(|&c| (cs[c] as usize) < threshold)
                    .fold(0u8, |m, c| m | 1 << c)
            })
            .collect();
        Ok(LabelColouring {
            n,
            t,
            threshold,
            labels,
        })
    }

    pub fn labels(&self, u: usize, v: usize) -> u8 {
        self.labels[rank2(u.min(v), u.max(v))]
    }

    /// Triangles whose three label sets together contain red, blue and green.
    pub fn rbg_triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for c in 2..self.n {
            for b in 1..c {
                let bc = self.labels(b, c);
                for a in 0..b {
                    if self.labels(a, b) | self.labels(a, c) | bc == ALL {
                        out.push([a, b, c]);
                    }
                }
            }
        }
        out
    }

    /// The graph colouring on `vertices` with one label per pair (`None` if
    /// some pair has two or more), yellow where unlabelled.
    pub fn single_label_colouring(&self, vertices: &[usize]) -> Option<CompleteColouring> {
        let mut bad = false;
        let c = CompleteColouring::from_fn(vertices.len(), 2, 4, |s| {
            match self.labels(vertices[s[0]], vertices[s[1]]) {
                0 => YELLOW,
                m if m.count_ones() == 1 => m.trailing_zeros() as Colour,
                _ => {
                    bad = true;
                    YELLOW
                }
            }
        })
        .ok()?;
        (!bad).then_some(c)
    }
}

/// Stage sizes at desk scale, where the asymptotic constants are out of reach.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScaleOverrides {
    /// Order of the clique sought in stage 6 (default `t³`).
    pub clique_target: Option<usize>,
    pub spencer_trials: u64,
    pub seed: u64,
}

impl Default for ScaleOverrides {
    fn default() -> Self {
        ScaleOverrides {
            clique_target: None,
            spencer_trials: DEFAULT_TRIALS,
            seed: 0,
        }
    }
}

/// Parses `key=value` pairs separated by commas or whitespace, e.g.
/// `clique_target=6,seed=3`.
impl FromStr for ScaleOverrides {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut out = ScaleOverrides::default();
        for item in s.split([',', ' ', '\t', '\n']).filter(|x| !x.is_empty()) {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got {item:?}")))?;
            let num = |v: &str| v.parse::<u64>().map_err(|e| Error::Parse(format!("{k}: {e}")));
            match k {
                "clique_target" => out.clique_target = Some(num(v)? as usize),
                "spencer_trials" => out.spencer_trials = num(v)?,
                "seed" => out.seed = num(v)?,
                _ => return Err(Error::Parse(format!("unknown scale key {k:?}"))),
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Stage {
    Labels = 1,
    Triangles = 2,
    IndependentSet = 3,
    DoubleLabels = 4,
    Peel = 5,
    Clique = 6,
    Embed = 7,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Stage::Labels => "labels",
            Stage::Triangles => "triangles",
            Stage::IndependentSet => "independent-set",
            Stage::DoubleLabels => "double-labels",
            Stage::Peel => "peel",
            Stage::Clique => "clique",
            Stage::Embed => "embed",
        };
        write!(f, "{} ({name})", *self as u8)
    }
}

/// Where and why the pipeline stopped. `detail` carries the blocking object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StagedFailure {
    pub stage: Stage,
    pub detail: String,
}

impl fmt::Display for StagedFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "stage {} failed: {}", self.stage, self.detail)
    }
}

impl std::error::Error for StagedFailure {}

/// Sizes seen along the way.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PipelineTrace {
    pub rbg_triangles: usize,
    pub independent_set: Vec<usize>,
    pub peeled: Vec<usize>,
    /// Stage that produced the body.
    pub finished_at: Option<u8>,
    pub clique: Option<CliqueWitness>,
    pub body: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct PipelineOutcome {
    pub embedding: HedgehogEmbedding,
    pub trace: PipelineTrace,
}

pub fn three_colour_pipeline(
    colouring: &CompleteColouring,
    t: usize,
    scale: ScaleOverrides,
) -> Result<PipelineOutcome, StagedFailure> {
    let fail = |stage, detail: String| StagedFailure { stage, detail };
    if t < 2 || colouring.n() < 3 {
        return Err(fail(
            Stage::Labels,
            format!("need t >= 2 and n >= 3, got t = {t} n = {}", colouring.n()),
        ));
    }
    let n = colouring.n();
    let labels = LabelColouring::new(colouring, t).map_err(|e| fail(Stage::Labels, e.to_string()))?;
    let mut trace = PipelineTrace::default();

    let triangles = labels.rbg_triangles();
    trace.rbg_triangles = triangles.len();
    let counting_bound = 3 * labels.threshold * binomial(n, 2);
    if triangles.len() > counting_bound || (t >= 3 && triangles.len() > t * t * n * n) {
        return Err(fail(
            Stage::Triangles,
            format!(
                "{} red-blue-green triangles exceed the counting bound {counting_bound}",
                triangles.len()
            ),
        ));
    }

    let h = TriangleHypergraph::new(n, triangles).expect("triangles are sorted triples");
    let u_set = spencer_independent_set_with_trials(&h, scale.seed, scale.spencer_trials);
    trace.independent_set = u_set.clone();

    // stage 4: a vertex of U on t doubly-labelled pairs
    let doubly = |a: usize, b: usize| labels.labels(a, b).count_ones() >= 2;
    for &u in &u_set {
        let nbrs: Vec<usize> = u_set.iter().copied().filter(|&v| v != u && doubly(u, v)).collect();
        if nbrs.len() < t {
            continue;
        }
        let pair = labels.labels(u, nbrs[0]);
        if let Some(&v) = nbrs.iter().find(|&&v| labels.labels(u, v) != pair) {
            return Err(fail(
                Stage::DoubleLabels,
                format!("pairs {u}-{} and {u}-{v} carry different label sets inside U", nbrs[0]),
            ));
        }
        if pair == ALL {
            return Err(fail(
                Stage::DoubleLabels,
                format!("pair {u}-{} carries all three labels", nbrs[0]),
            ));
        }
        let missing = (!pair & ALL).trailing_zeros() as Colour;
        let body = nbrs[..t].to_vec();
        trace.finished_at = Some(4);
        return finish(colouring, body, missing, trace, fail);
    }

    // stage 5: no doubly-labelled pair inside V
    let mut peeled = Vec::new();
    let mut dropped = vec![false; n];
    for &u in &u_set {
        if dropped[u] {
            continue;
        }
        peeled.push(u);
        for &v in &u_set {
            if v != u && doubly(u, v) {
                dropped[v] = true;
            }
        }
    }
    trace.peeled = peeled.clone();
    let v_col = labels
        .single_label_colouring(&peeled)
        .ok_or_else(|| fail(Stage::Peel, "peeled set still has a doubly-labelled pair".into()))?;

    // stage 6: a clique missing some colour, real colours first
    let target = scale.clique_target.unwrap_or(t * t * t).max(t);
    let hit = [RED, BLUE, GREEN, YELLOW]
        .into_iter()
        .find_map(|c| clique_avoiding(&v_col, target, c).map(|w| (c, w)));
    let Some((missing, w)) = hit else {
        return Err(fail(
            Stage::Clique,
            format!(
                "no {target}-clique with at most three colours among {} peeled vertices\n{}",
                peeled.len(),
                v_col.to_hcol()
            ),
        ));
    };
    let clique: Vec<usize> = w.vertices.iter().map(|&i| peeled[i]).collect();
    trace.clique = Some(CliqueWitness {
        vertices: clique.clone(),
        colours: w.colours.clone(),
    });
    if missing != YELLOW {
        trace.finished_at = Some(6);
        return finish(colouring, clique[..t].to_vec(), missing, trace, fail);
    }

    // stage 7: the clique is red/blue/green without rainbow triangles
    let sub = v_col.restrict(&w.vertices).expect("clique vertices are in range");
    let sub =
        CompleteColouring::new(sub.n(), 2, 3, sub.into_colours()).map_err(|e| fail(Stage::Embed, e.to_string()))?;
    let g = GallaiColouring::new(sub).map_err(|e| fail(Stage::Embed, e.to_string()))?;
    let inner = gallai_two_coloured_clique(&g).map_err(|e| fail(Stage::Embed, e.to_string()))?;
    let missing = (0..3)
        .find(|c| !inner.colours.contains(c))
        .expect("at most two colours");
    if inner.len() < t {
        return Err(fail(
            Stage::Embed,
            format!("two-coloured clique of order {} is smaller than t = {t}", inner.len()),
        ));
    }
    let body: Vec<usize> = inner.vertices[..t].iter().map(|&i| clique[i]).collect();
    trace.finished_at = Some(7);
    finish(colouring, body, missing, trace, fail)
}

fn finish(
    colouring: &CompleteColouring,
    body: Vec<usize>,
    colour: Colour,
    mut trace: PipelineTrace,
    fail: impl Fn(Stage, String) -> StagedFailure,
) -> Result<PipelineOutcome, StagedFailure> {
    trace.body = body.clone();
    match embed_spines(colouring, &body, colour) {
        Ok(embedding) => Ok(PipelineOutcome { embedding, trace }),
        Err(e) => Err(fail(Stage::Embed, e.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complement_lift, random_colouring};
    use crate::verifiers::verify_embedding;

    #[test]
    fn all_red_short_circuits() {
        let t = 3;
        let c = CompleteColouring::constant(12, 3, 3, RED).unwrap();
        let labels = LabelColouring::new(&c, t).unwrap();
        assert!(labels.labels.iter().all(|&m| m == 0b110));
        let out = three_colour_pipeline(&c, t, ScaleOverrides::default()).unwrap();
        assert_eq!(out.embedding.colour, RED);
        assert_eq!(out.trace.finished_at, Some(4));
        assert_eq!(verify_embedding(&out.embedding, &c), Ok(()));
    }

    #[test]
    fn labels_match_recount() {
        let c = random_colouring(25, 3, 3, 8).unwrap();
        let labels = LabelColouring::new(&c, 3).unwrap();
        for v in 1..25 {
            for u in 0..v {
                let mut cnt = [0usize; 3];
                for w in (0..25).filter(|&w| w != u && w != v) {
                    cnt[c.triple(u, v, w) as usize] += 1;
                }
                let want = (0..3).filter(|&x| cnt[x] < 6).fold(0u8, |m, x| m | 1 << x);
                assert_eq!(labels.labels(u, v), want);
            }
        }
    }

    #[test]
    fn triangle_count_bound_on_random_inputs() {
        for seed in 0..20 {
            let t = 3 + seed as usize % 3;
            let n = 20 + 3 * seed as usize;
            let c = random_colouring(n, 3, 3, seed).unwrap();
            let tri = LabelColouring::new(&c, t).unwrap().rbg_triangles().len();
            assert!(tri <= 3 * (binomial(t, 2) + t) * binomial(n, 2));
            assert!(tri <= t * t * n * n);
        }
    }

    #[test]
    fn lifted_gallai_colouring() {
        // a small Gallai 4-colouring (no red-blue-green triangle), lifted
        let base = CompleteColouring::from_fn(30, 2, 4, |s| if (s[0] ^ s[1]) & 1 == 0 { YELLOW } else { RED }).unwrap();
        let lifted = complement_lift(&base, &[RED, BLUE, GREEN]).unwrap();
        match three_colour_pipeline(
            &lifted,
            3,
            ScaleOverrides {
                clique_target: Some(4),
                ..Default::default()
            },
        ) {
            Ok(out) => assert_eq!(verify_embedding(&out.embedding, &lifted), Ok(())),
            Err(f) => assert!(f.stage >= Stage::Clique, "{f}"),
        }
    }

    #[test]
    fn scale_parsing() {
        let s: ScaleOverrides = "clique_target=5, seed=2".parse().unwrap();
        assert_eq!(s.clique_target, Some(5));
        assert_eq!(s.seed, 2);
        assert!("bogus=1".parse::<ScaleOverrides>().is_err());
        assert!("clique_target".parse::<ScaleOverrides>().is_err());
    }
}
