//! Lower-bound witnesses for F(t): lexicographic products of three
//! 3-colourings, one on each of the palettes {R,B,Y}, {R,G,Y}, {B,G,Y}.
//!
//! A triangle of the product either sits inside one block (recurse), spans
//! three blocks (colours from one factor, which lacks one of R, B, G) or has
//! two edges with the same outer colour. None can be an R,B,G rainbow.
//! A clique avoiding colour `c` meets each factor in a clique avoiding `c`,
//! so its order is at most the product of the factors' `c`-avoiding clique
//! numbers; the largest such product bounds every clique with ≤ 3 colours.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::lifts::lex_product;
use super::random::attempt_seed;
use crate::colouring::{Colour, CompleteColouring, BLUE, GREEN, RBG, RED, YELLOW};
use crate::error::{invalid, Result};
use crate::report::SearchReport;
use crate::verifiers::{every_clique_all_colours, rainbow_triangle_free};

pub const FACTOR_PALETTES: [[Colour; 3]; 3] = [[RED, BLUE, YELLOW], [RED, GREEN, YELLOW], [BLUE, GREEN, YELLOW]];

/// Largest t accepted at desk scale.
pub const MAX_T: usize = 64;
/// Largest factor size the exact factor clique computations accept.
pub const MAX_BASE: usize = 16;

/// Factor size `⌊t / (16 ln² t)⌋`, clamped to at least 2.
pub fn gallai_base_size(t: usize) -> usize {
    let l = (t as f64).ln();
    ((t as f64 / (16.0 * l * l)).floor() as usize).max(2)
}

/// Order of cliques that must be absent from a factor's two-colour unions: `⌈4 ln t⌉`.
pub fn pair_union_target(t: usize) -> usize {
    (4.0 * (t as f64).ln()).ceil() as usize
}

#[derive(Clone, Debug)]
pub struct GallaiWitness {
    pub t: usize,
    pub colouring: CompleteColouring,
    pub base_size: usize,
    pub factors: [CompleteColouring; 3],
    /// Largest clique inside the union of two colours of any factor.
    pub pair_union_clique: usize,
    /// No clique of this order uses at most three colours (checked exactly).
    pub clique_bound: usize,
}

impl GallaiWitness {
    /// Whether this colouring certifies F(t) > n.
    pub fn certifies_f_lower_bound(&self) -> bool {
        self.clique_bound <= self.t
    }
}

#[derive(Clone, Debug)]
pub struct GallaiOutcome {
    pub witness: Option<GallaiWitness>,
    pub report: SearchReport,
}

pub fn gallai_lower_bound_witness(t: usize, seed: u64) -> Result<GallaiOutcome> {
    if !(2..=MAX_T).contains(&t) {
        return invalid(format!("t = {t} outside 2..={MAX_T}"));
    }
    gallai_witness_with_base(t, gallai_base_size(t), seed, 200)
}

/// As [`gallai_lower_bound_witness`] but with an explicit factor size.
pub fn gallai_witness_with_base(t: usize, base: usize, seed: u64, max_tries: u64) -> Result<GallaiOutcome> {
    if !(2..=MAX_T).contains(&t) {
        return invalid(format!("t = {t} outside 2..={MAX_T}"));
    }
    if !(1..=MAX_BASE).contains(&base) {
        return invalid(format!("factor size {base} outside 1..={MAX_BASE}"));
    }
    let target = pair_union_target(t);
    let mut report = SearchReport::new("gallai_lower_bound_witness", Some(seed))
        .param("t", t)
        .param("base_size", base)
        .param("pair_union_target", target)
        .param("max_tries", max_tries);

    let mut factors = Vec::new();
    for (f, palette) in FACTOR_PALETTES.iter().enumerate() {
        let mut best: Option<(usize, bool, CompleteColouring, u64)> = None;
        for i in 0..max_tries.max(1) {
            let s = attempt_seed(seed, (f as u64) << 32 | i);
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            let g = CompleteColouring::from_fn(base, 2, 4, |_| palette[rng.random_range(0..3)])?;
            let w = max_pair_union_clique(&g, palette);
            let surjective = palette.iter().all(|&c| g.census()[c as usize] > 0);
            let better = match &best {
                None => true,
                Some((bw, bs, _, _)) => (w, !surjective) < (*bw, !*bs),
            };
            if better {
                best = Some((w, surjective, g, s));
            }
            report.tries += 1;
        }
        let (w, _, g, s) = best.expect("at least one try");
        if w >= target {
            report.outcome = format!("exhausted: factor {f} best pair-union clique {w} >= target {target}");
            return Ok(GallaiOutcome { witness: None, report });
        }
        report.params.push((format!("factor{f}_seed"), s.to_string()));
        factors.push(g);
    }
    let factors: [CompleteColouring; 3] = factors.try_into().expect("three factors");
    let colouring = lex_product(&lex_product(&factors[0], &factors[1])?, &factors[2])?;

    let pair_union_clique = factors
        .iter()
        .zip(&FACTOR_PALETTES)
        .map(|(g, p)| max_pair_union_clique(g, p))
        .max()
        .unwrap();
    let bound = [RED, BLUE, GREEN, YELLOW]
        .iter()
        .map(|&c| factors.iter().map(|g| max_clique_avoiding(g, c)).product::<usize>())
        .max()
        .unwrap();

    if let Some(tri) = rainbow_triangle_free(&colouring, RBG) {
        panic!("lexicographic product has rainbow triangle {tri:?}");
    }
    if bound < colouring.n() {
        if let Some(w) = every_clique_all_colours(&colouring, bound + 1, 4) {
            panic!("clique {w:?} beats the product bound {bound}");
        }
    }
    report.outcome = format!("found n={} clique_bound={}", colouring.n(), bound + 1);
    Ok(GallaiOutcome {
        witness: Some(GallaiWitness {
            t,
            colouring,
            base_size: base,
            factors,
            pair_union_clique,
            clique_bound: bound + 1,
        }),
        report,
    })
}

fn max_pair_union_clique(g: &CompleteColouring, palette: &[Colour; 3]) -> usize {
    (0..3).map(|skip| max_clique_avoiding(g, palette[skip])).max().unwrap()
}

/// Largest clique of a small graph colouring with no edge of colour `c`.
fn max_clique_avoiding(g: &CompleteColouring, c: Colour) -> usize {
    fn grow(g: &CompleteColouring, c: Colour, cur: &mut Vec<usize>, start: usize, best: &mut usize) {
        *best = (*best).max(cur.len());
        for v in start..g.n() {
            if cur.iter().all(|&u| g.edge(u, v) != c) {
                cur.push(v);
                grow(g, c, cur, v + 1, best);
                cur.pop();
            }
        }
    }
    let mut best = 0;
    grow(g, c, &mut Vec::new(), 0, &mut best);
    best
}
