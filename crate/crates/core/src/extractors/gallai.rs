use crate::colouring::{CompleteColouring, RBG};
use crate::error::{invalid, Error, Result};
use crate::verifiers::{rainbow_triangle_free, verify_clique_witness};
use crate::witness::CliqueWitness;

use super::clique::{avoiding_adjacency, max_clique};

/// Largest order accepted by [`gallai_two_coloured_clique`].
pub const GALLAI_MAX_N: usize = 512;

/// A red/blue/green colouring of `K_n` checked to have no triangle with one
/// edge of each colour.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GallaiColouring {
    colouring: CompleteColouring,
}

impl GallaiColouring {
    pub fn new(colouring: CompleteColouring) -> Result<Self> {
        if colouring.k() != 2 || colouring.q() > 3 {
            return invalid(format!(
                "a Gallai colouring is a graph colouring with at most 3 colours, got k = {} q = {}",
                colouring.k(),
                colouring.q()
            ));
        }
        if let Some(tri) = rainbow_triangle_free(&colouring, RBG) {
            return invalid(format!("triangle {tri:?} is rainbow"));
        }
        Ok(GallaiColouring { colouring })
    }

    pub fn colouring(&self) -> &CompleteColouring {
        &self.colouring
    }

    pub fn into_inner(self) -> CompleteColouring {
        self.colouring
    }
}

/// Smallest `m` with `m³ ≥ n`.
pub fn cube_root_ceil(n: usize) -> usize {
    let mut m = (n as f64).cbrt().round() as usize;
    while m * m * m < n {
        m += 1;
    }
    while m > 0 && (m - 1) * (m - 1) * (m - 1) >= n {
        m -= 1;
    }
    m
}

/// Maximum clique using at most two colours: the best of the exact maximum
/// cliques of the three two-colour union graphs.
///
/// Every Gallai colouring has such a clique of order `⌈n^{1/3}⌉`; a smaller
/// answer is reported as [`Error::GuaranteeViolated`] with the instance.
pub fn gallai_two_coloured_clique(g: &GallaiColouring) -> Result<CliqueWitness> {
    let c = &g.colouring;
    if c.n() > GALLAI_MAX_N {
        return Err(Error::Unsupported(format!("n = {} above {GALLAI_MAX_N}", c.n())));
    }
    let best = RBG
        .iter()
        .map(|&avoid| max_clique(&avoiding_adjacency(c, avoid), None))
        .reduce(|a, b| if b.len() > a.len() { b } else { a })
        .unwrap();
    let w = CliqueWitness::from_vertices(c, best);
    if let Err(e) = verify_clique_witness(c, &w, 2) {
        panic!("two-colour clique search produced an invalid witness: {e}");
    }
    if w.len() < cube_root_ceil(c.n()) {
        return Err(Error::GuaranteeViolated(format!(
            "largest two-coloured clique has {} < {} vertices in\n{}",
            w.len(),
            cube_root_ceil(c.n()),
            c.to_hcol()
        )));
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::{BLUE, GREEN, RED};
    use crate::constructions::{lex_product, random_colouring};

    #[test]
    fn cube_roots() {
        let got: Vec<usize> = [0, 1, 2, 8, 9, 26, 27, 28, 512]
            .iter()
            .map(|&n| cube_root_ceil(n))
            .collect();
        assert_eq!(got, vec![0, 1, 2, 2, 3, 3, 3, 4, 8]);
    }

    #[test]
    fn monochromatic_and_two_coloured_hosts() {
        let g = GallaiColouring::new(CompleteColouring::constant(9, 2, 3, GREEN).unwrap()).unwrap();
        assert_eq!(gallai_two_coloured_clique(&g).unwrap().len(), 9);
        let c = random_colouring(12, 2, 2, 5).unwrap();
        let g = GallaiColouring::new(c).unwrap();
        let w = gallai_two_coloured_clique(&g).unwrap();
        assert_eq!(w.vertices, (0..12).collect::<Vec<_>>());
    }

    #[test]
    fn rejects_rainbow_triangle() {
        let c = CompleteColouring::new(3, 2, 3, vec![RED, BLUE, GREEN]).unwrap();
        assert!(GallaiColouring::new(c).is_err());
        let c = CompleteColouring::constant(3, 2, 4, RED).unwrap();
        assert!(GallaiColouring::new(c).is_err());
    }

    #[test]
    fn lex_product_of_two_coloured_factors() {
        // factors on {R,B}, {R,G}, {B,G}: each a path-like 3-vertex colouring
        let f1 = CompleteColouring::new(3, 2, 3, vec![RED, BLUE, RED]).unwrap();
        let f2 = CompleteColouring::new(3, 2, 3, vec![GREEN, RED, RED]).unwrap();
        let f3 = CompleteColouring::new(3, 2, 3, vec![BLUE, GREEN, GREEN]).unwrap();
        let p = lex_product(&lex_product(&f1, &f2).unwrap(), &f3).unwrap();
        assert_eq!(p.n(), 27);
        let g = GallaiColouring::new(p).unwrap();
        let w = gallai_two_coloured_clique(&g).unwrap();
        assert!(w.len() >= 3);
        assert!(w.colours.len() <= 2);
    }
}
