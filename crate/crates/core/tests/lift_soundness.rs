//! Hedgehogs in lifted colourings, found by the exact search, always sit on
//! bodies the lift rules out.

use hedgehog::colouring::{Colour, CompleteColouring, BLUE, RBG, RED};
use hedgehog::constructions::{complement_lift, kr_quad_lift, random_colouring};
use hedgehog::verifiers::{has_monochromatic_hedgehog, verify_embedding};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn body_edge_colours(g: &CompleteColouring, body: &[usize]) -> Vec<Colour> {
    let mut out = Vec::new();
    for (i, &u) in body.iter().enumerate() {
        for &v in &body[i + 1..] {
            out.push(g.edge(u, v));
        }
    }
    out
}

#[test]
fn complement_lift_hedgehog_body_misses_its_colour() {
    let mut found = 0;
    for seed in 0..150 {
        let n = 7 + seed as usize % 5;
        let g = random_colouring(n, 2, 4, seed).unwrap();
        let lifted = complement_lift(&g, &[0, 1, 2, 3]).unwrap();
        for c in 0..4 {
            if let Some(e) = has_monochromatic_hedgehog(&lifted, 3, c) {
                found += 1;
                assert_eq!(verify_embedding(&e, &lifted), Ok(()));
                assert!(!body_edge_colours(&g, &e.body).contains(&c), "seed {seed} colour {c}");
            }
        }
    }
    assert!(found > 50);
}

/// Random four-colouring with no red-blue-green triangle: yellow everywhere
/// except a random two-colouring (from a random pair of R, B, G) on a random
/// subset, plus scattered red edges between that subset and the rest.
fn random_gallai_four(n: usize, rng: &mut ChaCha8Rng) -> CompleteColouring {
    let inside: Vec<bool> = (0..n).map(|_| rng.random_bool(0.6)).collect();
    let (a, b) = [(0, 1), (0, 2), (1, 2)][rng.random_range(0..3)];
    let c = CompleteColouring::from_fn(n, 2, 4, |s| match (inside[s[0]], inside[s[1]]) {
        (true, true) => {
            if rng.random_bool(0.5) {
                a
            } else {
                b
            }
        }
        (false, false) => 3,
        _ => {
            if rng.random_bool(0.3) {
                a
            } else {
                3
            }
        }
    })
    .unwrap();
    assert!(hedgehog::verifiers::rainbow_triangle_free(&c, RBG).is_none());
    c
}

#[test]
fn gallai_lift_hedgehog_body_misses_its_colour() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut found = 0;
    for _ in 0..150 {
        let n = rng.random_range(7..=11);
        let g = random_gallai_four(n, &mut rng);
        let lifted = complement_lift(&g, &RBG).unwrap();
        for c in 0..3 {
            if let Some(e) = has_monochromatic_hedgehog(&lifted, 3, c) {
                found += 1;
                assert!(!body_edge_colours(&g, &e.body).contains(&RBG[c as usize]));
            }
        }
    }
    assert!(found > 50);
}

#[test]
fn kr_lift_blue_hedgehog_body_has_no_red_triangle() {
    let mut found = 0;
    for seed in 0..60 {
        let n = 9 + seed as usize % 3;
        let g = random_colouring(n, 2, 2, seed).unwrap();
        let lifted = kr_quad_lift(&g).unwrap();
        if let Some(e) = has_monochromatic_hedgehog(&lifted, 4, BLUE) {
            found += 1;
            assert_eq!(verify_embedding(&e, &lifted), Ok(()));
            let b = &e.body;
            for i in 0..b.len() {
                for j in i + 1..b.len() {
                    for k in j + 1..b.len() {
                        let red = [(b[i], b[j]), (b[i], b[k]), (b[j], b[k])]
                            .iter()
                            .all(|&(u, v)| g.edge(u, v) == RED);
                        assert!(!red, "seed {seed}");
                    }
                }
            }
        }
    }
    assert!(found > 0);
}
