use crate::colouring::{Colour, CompleteColouring};
use crate::witness::CliqueWitness;

/// First triangle (colex order of its largest vertex, then smaller ones) whose
/// three edge colours are exactly the three colours of `palette`.
pub fn rainbow_triangle_free(graph: &CompleteColouring, palette: [Colour; 3]) -> Option<[usize; 3]> {
    let want: u64 = palette.iter().fold(0, |m, &c| m | 1 << c);
    if want.count_ones() != 3 {
        return None;
    }
    let n = graph.n();
    for c in 2..n {
        for b in 1..c {
            let bc = graph.edge(b, c);
            if want >> bc & 1 == 0 {
                continue;
            }
            for a in 0..b {
                let m = 1u64 << graph.edge(a, b) | 1 << graph.edge(a, c) | 1 << bc;
                if m == want {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

/// Search for a `t`-clique of `graph` whose internal edges miss at least one
/// of the `q` colours. `None` means every `t`-clique shows all `q` colours.
///
/// Backtracks over vertex sets in lexicographic order, abandoning a partial
/// clique as soon as it already contains every colour.
pub fn every_clique_all_colours(graph: &CompleteColouring, t: usize, q: usize) -> Option<CliqueWitness> {
    let n = graph.n();
    if t > n {
        return None;
    }
    let full: u64 = if q >= 64 { u64::MAX } else { (1u64 << q) - 1 };
    let mut cur = Vec::with_capacity(t);
    if deficient(graph, t, full, 0, 0, &mut cur) {
        Some(CliqueWitness::from_vertices(graph, cur))
    } else {
        None
    }
}

fn deficient(graph: &CompleteColouring, t: usize, full: u64, start: usize, mask: u64, cur: &mut Vec<usize>) -> bool {
    if mask & full == full {
        return false;
    }
    if cur.len() == t {
        return true;
    }
    let n = graph.n();
    for v in start..n {
        if n - v < t - cur.len() {
            break;
        }
        let m = cur.iter().fold(mask, |m, &u| m | 1 << graph.edge(u, v));
        cur.push(v);
        if deficient(graph, t, full, v + 1, m, cur) {
            return true;
        }
        cur.pop();
    }
    false
}

/// Checks a clique witness: distinct in-range vertices, declared colour set
/// equal to the true census, and at most `max_colours` colours.
pub fn verify_clique_witness(graph: &CompleteColouring, w: &CliqueWitness, max_colours: usize) -> Result<(), String> {
    let n = graph.n();
    let mut seen = vec![false; n];
    for &v in &w.vertices {
        if v >= n {
            return Err(format!("vertex {v} out of range"));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(format!("vertex {v} repeated"));
        }
    }
    let mut actual: Vec<Colour> = Vec::new();
    for (i, &u) in w.vertices.iter().enumerate() {
        for &v in &w.vertices[i + 1..] {
            let c = graph.edge(u, v);
            if !actual.contains(&c) {
                actual.push(c);
            }
        }
    }
    actual.sort_unstable();
    let mut declared = w.colours.clone();
    declared.sort_unstable();
    if declared != actual {
        return Err(format!("declared colours {:?} but clique shows {actual:?}", w.colours));
    }
    if actual.len() > max_colours {
        return Err(format!("clique uses {} colours, limit {max_colours}", actual.len()));
    }
    Ok(())
}

/// Checks that `set` is a set of distinct vertices of `[n]` spanning no edge.
pub fn verify_independent_set(n: usize, edges: &[[usize; 3]], set: &[usize]) -> Result<(), String> {
    let mut inside = vec![false; n];
    for &v in set {
        if v >= n {
            return Err(format!("vertex {v} out of range"));
        }
        if std::mem::replace(&mut inside[v], true) {
            return Err(format!("vertex {v} repeated"));
        }
    }
    match edges.iter().find(|e| e.iter().all(|&v| inside[v])) {
        Some(e) => Err(format!("edge {e:?} lies inside the set")),
        None => Ok(()),
    }
}
