//! Lifts from graph (or triple) colourings to colourings of higher uniformity.

use crate::colouring::{Colour, CompleteColouring, BLUE, RED};
use crate::combinadic::binomial;
use crate::error::{invalid, Error, Result};

/// Colour every triple with the first palette colour absent from its three
/// edges. Output colour `i` stands for `palette[i]` (palette sorted
/// ascending), so the result has `|palette|` colours.
pub fn complement_lift(graph: &CompleteColouring, palette: &[Colour]) -> Result<CompleteColouring> {
    if graph.k() != 2 {
        return invalid(format!(
            "complement lift needs a graph colouring, got k = {}",
            graph.k()
        ));
    }
    let mut pal = palette.to_vec();
    pal.sort_unstable();
    pal.dedup();
    if pal.is_empty() || pal.len() != palette.len() || pal.iter().any(|&c| c >= 64) {
        return invalid(format!(
            "palette {palette:?} must be non-empty distinct colours below 64"
        ));
    }
    let n = graph.n();
    let mut colours = Vec::with_capacity(binomial(n, 3));
    for c in 2..n {
        for b in 1..c {
            let bc = graph.edge(b, c);
            for a in 0..b {
                let present = 1u64 << graph.edge(a, b) | 1 << graph.edge(a, c) | 1 << bc;
                match pal.iter().position(|&p| present >> p & 1 == 0) {
                    Some(i) => colours.push(i as Colour),
                    None => return Err(Error::PreconditionViolated { triangle: [a, b, c] }),
                }
            }
        }
    }
    CompleteColouring::new(n, 3, pal.len(), colours)
}

/// The triangle lift of a red/blue graph colouring to 4-sets: a 4-set is red if
/// it spans a red triangle, blue if it spans a blue triangle, and red when it
/// spans neither. (In K_4 any two triangles share an edge, so a 4-set never
/// spans both.)
pub fn kr_quad_lift(graph: &CompleteColouring) -> Result<CompleteColouring> {
    if graph.k() != 2 || graph.q() != 2 {
        return invalid(format!(
            "triangle lift needs a 2-coloured graph, got k = {} q = {}",
            graph.k(),
            graph.q()
        ));
    }
    CompleteColouring::from_fn(graph.n(), 4, 2, |s| {
        let e = |i: usize, j: usize| graph.edge(s[i], s[j]);
        let tris = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)];
        let mono = |c: Colour| {
            tris.iter()
                .any(|&(a, b, d)| e(a, b) == c && e(a, d) == c && e(b, d) == c)
        };
        if mono(RED) {
            RED
        } else if mono(BLUE) {
            BLUE
        } else {
            RED
        }
    })
}

/// Number of non-empty subsets of `[q]` with at most four elements.
pub fn set_lift_colour_count(q: usize) -> usize {
    (1..=4).map(|s| binomial(q, s)).sum()
}

/// Index of a non-empty colour set of size ≤ 4: sets are ordered by size,
/// then colex within a size, so singleton `{c}` has index `c`.
pub fn colour_set_index(set_mask: u8, q: usize) -> usize {
    let members: Vec<usize> = (0..8).filter(|&c| set_mask >> c & 1 == 1).collect();
    let size = members.len();
    debug_assert!((1..=4).contains(&size));
    let offset: usize = (1..size).map(|s| binomial(q, s)).sum();
    offset
        + members
            .iter()
            .enumerate()
            .map(|(i, &c)| binomial(c, i + 1))
            .sum::<usize>()
}

/// Inverse of [`colour_set_index`].
pub fn colour_set_from_index(mut index: usize, q: usize) -> Vec<Colour> {
    for size in 1..=4 {
        let block = binomial(q, size);
        if index < block {
            return crate::combinadic::unrank(index, size)
                .into_iter()
                .map(|c| c as Colour)
                .collect();
        }
        index -= block;
    }
    panic!("colour-set index out of range for q = {q}");
}

/// Colour each 4-set by the set of colours on its four triples.
pub fn quad_set_lift(triples: &CompleteColouring) -> Result<CompleteColouring> {
    if triples.k() != 3 {
        return invalid(format!(
            "quad set-lift needs a triple colouring, got k = {}",
            triples.k()
        ));
    }
    let q = triples.q();
    if q > 8 {
        return Err(Error::Unsupported(format!(
            "quad set-lift supports q <= 8 (one byte per output colour), got q = {q}"
        )));
    }
    CompleteColouring::from_fn(triples.n(), 4, set_lift_colour_count(q), |s| {
        let mask = [
            triples.colour(&[s[0], s[1], s[2]]),
            triples.colour(&[s[0], s[1], s[3]]),
            triples.colour(&[s[0], s[2], s[3]]),
            triples.colour(&[s[1], s[2], s[3]]),
        ]
        .iter()
        .fold(0u8, |m, &c| m | 1 << c);
        colour_set_index(mask, q) as Colour
    })
}

/// Lexicographic product: vertex `(a, i)` is `a * p + i`; edges between
/// distinct blocks take the outer colour, edges inside a block the inner one.
pub fn lex_product(outer: &CompleteColouring, inner: &CompleteColouring) -> Result<CompleteColouring> {
    if outer.k() != 2 || inner.k() != 2 {
        return invalid("lexicographic product needs two graph colourings");
    }
    let p = inner.n();
    let q = outer.q().max(inner.q());
    CompleteColouring::from_fn(outer.n() * p, 2, q, |s| {
        let (a, i) = (s[0] / p, s[0] % p);
        let (b, j) = (s[1] / p, s[1] % p);
        if a != b {
            outer.edge(a, b)
        } else {
            inner.edge(i, j)
        }
    })
}
