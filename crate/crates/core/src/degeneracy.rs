/// Degeneracy of a hypergraph on `[n]` by min-degree peeling.
///
/// The degree of a vertex is the number of surviving edges that contain it.
/// Repeatedly removing a vertex of minimum degree and recording that degree,
/// the maximum recorded value is the least `d` such that every induced
/// subhypergraph has a vertex of degree at most `d`.
pub fn degeneracy(n: usize, edges: &[Vec<usize>]) -> usize {
    peel(n, edges, |_, alive, degree| {
        (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| degree[v])
            .expect("an alive vertex remains")
    })
}

/// Degeneracy bound certified by a caller-chosen removal order: the largest
/// degree seen when removing vertices in `order`. Always an upper bound on
/// the exact degeneracy, and equal to it for a min-degree order.
pub fn peeling_width(n: usize, edges: &[Vec<usize>], order: &[usize]) -> usize {
    assert_eq!(order.len(), n, "order must list every vertex once");
    peel(n, edges, |step, _, _| order[step])
}

fn peel(n: usize, edges: &[Vec<usize>], mut choose: impl FnMut(usize, &[bool], &[usize]) -> usize) -> usize {
    let mut incident = vec![Vec::new(); n];
    let mut degree = vec![0usize; n];
    for (i, e) in edges.iter().enumerate() {
        for &v in e {
            incident[v].push(i);
            degree[v] += 1;
        }
    }
    let mut alive = vec![true; n];
    let mut edge_alive = vec![true; edges.len()];
    let mut width = 0;
    for step in 0..n {
        let v = choose(step, &alive, &degree);
        assert!(alive[v], "vertex {v} removed twice");
        width = width.max(degree[v]);
        alive[v] = false;
        for &i in &incident[v] {
            if std::mem::replace(&mut edge_alive[i], false) {
                for &u in &edges[i] {
                    degree[u] -= 1;
                }
            }
        }
    }
    width
}
