use crate::colouring::{Colour, CompleteColouring};
use crate::error::{invalid, Result};
use crate::witness::CliqueWitness;

use super::clique::{avoiding_adjacency, max_clique};

/// A clique of order `s` containing no edge of colour `avoid`.
pub fn clique_avoiding(chi: &CompleteColouring, s: usize, avoid: Colour) -> Option<CliqueWitness> {
    if s > chi.n() {
        return None;
    }
    let c = max_clique(&avoiding_adjacency(chi, avoid), Some(s));
    (c.len() >= s).then(|| CliqueWitness::from_vertices(chi, c[..s].to_vec()))
}

/// A clique of order `s` using at most three of the four colours, trying to
/// avoid red, blue, green and then yellow. `None` means no such clique exists.
pub fn three_colour_clique_search(chi: &CompleteColouring, s: usize) -> Result<Option<CliqueWitness>> {
    if chi.k() != 2 || chi.q() > 4 {
        return invalid(format!(
            "need a graph colouring with at most 4 colours, got k = {} q = {}",
            chi.k(),
            chi.q()
        ));
    }
    Ok((0..4).find_map(|c| clique_avoiding(chi, s, c)))
}
