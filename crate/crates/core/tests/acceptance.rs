//! Acceptance suite. Each test prints one `criterion N: PASS|FAIL` line with
//! the numbers behind it, then asserts.

use std::io::Write;
use std::time::{Duration, Instant};

use hedgehog::colouring::{Colour, CompleteColouring, BLUE, GREEN, RBG, RED};
use hedgehog::combinadic::binomial;
use hedgehog::constructions::{
    complement_lift, find_scattered_colouring, lex_product, random_colouring, ScatteredColouringSpec,
};
use hedgehog::extractors::{
    cube_root_ceil, exhaustive_f_witness, f_oracle, f_oracle_with, gallai_two_coloured_clique, spencer_guarantee,
    spencer_independent_set, FOracleConfig, FValue, FWitness, GallaiColouring, LabelColouring, TriangleHypergraph,
};
use hedgehog::finder::find_monochromatic_hedgehog;
use hedgehog::hedgehog::{HedgehogEmbedding, Spine};
use hedgehog::verifiers::slow::{brute_force_hedgehog, brute_force_max_clique_within, brute_force_max_independent};
use hedgehog::verifiers::{
    cross_check_sample, exhaustive_ramsey_check, has_monochromatic_hedgehog, verify_clique_witness, verify_embedding,
    verify_independent_set, RamseyVerdict,
};
use hedgehog::witness::CliqueWitness;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Written to the raw stderr handle so the line shows without `--nocapture`.
fn report(n: u32, pass: bool, detail: String) {
    let line = format!("criterion {n}: {} ({detail})\n", if pass { "PASS" } else { "FAIL" });
    let _ = std::io::stderr().write_all(line.as_bytes());
}

// ---------------------------------------------------------------- criterion 1

/// Red/blue triple colourings built from graph colourings, rotated by `i`:
/// majority and minority of two-coloured graphs, and complement lifts of
/// four-coloured graphs with the colours merged in pairs.
fn adversarial(n: usize, i: u64) -> CompleteColouring {
    let seed = 1_000 + i;
    match i % 4 {
        0 | 1 => {
            let g = random_colouring(n, 2, 2, seed).unwrap();
            let minority = i % 4 == 1;
            CompleteColouring::from_fn(n, 3, 2, |s| {
                let reds = [(0, 1), (0, 2), (1, 2)]
                    .iter()
                    .filter(|&&(a, b)| g.edge(s[a], s[b]) == RED)
                    .count();
                ((reds >= 2) == minority) as Colour
            })
            .unwrap()
        }
        2 => {
            // two-coloured graph from a half split, then complement lift
            let g = CompleteColouring::from_fn(n, 2, 4, |s| {
                let side = |v: usize| (v * 7 + i as usize) % n < n / 2;
                if side(s[0]) == side(s[1]) {
                    0
                } else {
                    2 + (s[0] + s[1]) as u8 % 2
                }
            })
            .unwrap();
            merge_pairs(&complement_lift(&g, &[0, 1, 2, 3]).unwrap())
        }
        _ => {
            let g = random_colouring(n, 2, 4, seed).unwrap();
            merge_pairs(&complement_lift(&g, &[0, 1, 2, 3]).unwrap())
        }
    }
}

fn merge_pairs(c: &CompleteColouring) -> CompleteColouring {
    CompleteColouring::new(c.n(), 3, 2, c.colours().iter().map(|&x| x / 2).collect()).unwrap()
}

#[test]
fn criterion_1_finder_at_threshold() {
    let mut runs = 0;
    let mut failures = Vec::new();
    let mut slowest = Duration::ZERO;
    for (t, n) in [(3usize, 108usize), (4, 256)] {
        assert_eq!(n, 4 * t * t * t);
        let cases = (0..1000u64).map(|s| (false, s)).chain((0..50u64).map(|s| (true, s)));
        for (adv, s) in cases {
            let start = Instant::now();
            let c = if adv {
                adversarial(n, s)
            } else {
                random_colouring(n, 3, 2, s).unwrap()
            };
            let ok = match find_monochromatic_hedgehog(&c, t) {
                Ok(e) => verify_embedding(&e, &c).is_ok() && e.t() == t,
                Err(_) => false,
            };
            slowest = slowest.max(start.elapsed());
            runs += 1;
            if !ok {
                failures.push((t, adv, s));
            }
        }
    }
    let pass = failures.is_empty() && slowest < Duration::from_secs(10);
    report(
        1,
        pass,
        format!(
            "{runs} runs, {} failures, slowest run {slowest:?}, limit 10s",
            failures.len()
        ),
    );
    assert!(pass, "failures: {failures:?}");
}

// ---------------------------------------------------------------- criterion 2

#[test]
fn criterion_2_scattered_lift_soundness() {
    let mut checked = 0;
    let mut non_vacuous = 0;
    let mut violations = 0;
    let mut largest = Vec::new();
    for t in [4usize, 5] {
        let mut last_found = 0;
        for n in t..=40 {
            let mut found_here = false;
            for seed in 0..3 {
                let mut spec = ScatteredColouringSpec::new(n, t, 4, seed);
                spec.max_tries = 4;
                spec.steps = 20_000;
                let Some(g) = find_scattered_colouring(&spec).unwrap().colouring else {
                    continue;
                };
                found_here = true;
                let lifted = complement_lift(&g, &[0, 1, 2, 3]).unwrap();
                checked += 1;
                if n >= t + binomial(t, 2) {
                    non_vacuous += 1;
                }
                for c in 0..4 {
                    if has_monochromatic_hedgehog(&lifted, t, c).is_some() {
                        violations += 1;
                    }
                }
            }
            if found_here {
                last_found = n;
            } else {
                // larger orders only get harder for the search
                break;
            }
        }
        largest.push((t, last_found));
    }
    let pass = violations == 0 && checked > 0;
    report(
        2,
        pass,
        format!(
            "{checked} scattered colourings lifted ({non_vacuous} large enough to host H_t), \
             largest n found per t {largest:?}, {violations} violations"
        ),
    );
    assert!(pass);
}

// ---------------------------------------------------------------- criterion 3

#[test]
fn criterion_3_gallai_lift_soundness() {
    let mut witnesses = Vec::new();
    for n in 4..=6 {
        witnesses.push(FWitness::verify(4, exhaustive_f_witness(4, n).unwrap()).unwrap());
    }
    let r = f_oracle_with(
        4,
        8,
        FOracleConfig {
            cross_check: true,
            ..Default::default()
        },
    )
    .unwrap();
    witnesses.extend(r.witness);
    let r5 = f_oracle_with(
        5,
        10,
        FOracleConfig {
            restarts: 8,
            steps: 20_000,
            ..Default::default()
        },
    )
    .unwrap();
    witnesses.extend(r5.witness);

    let mut violations = 0;
    for w in &witnesses {
        let lifted = complement_lift(w.colouring(), &RBG).unwrap();
        for c in 0..3 {
            if has_monochromatic_hedgehog(&lifted, w.t(), c).is_some() {
                violations += 1;
            }
        }
    }
    let orders: Vec<(usize, usize)> = witnesses.iter().map(|w| (w.t(), w.n())).collect();
    let pass = violations == 0 && !witnesses.is_empty();
    report(
        3,
        pass,
        format!("(t, n) of lifted witnesses {orders:?}, {violations} violations"),
    );
    assert!(pass);
}

// ---------------------------------------------------------------- criterion 4

fn random_hypergraph(n: usize, e: usize, rng: &mut ChaCha8Rng) -> TriangleHypergraph {
    let mut seen = std::collections::HashSet::new();
    while seen.len() < e {
        let mut t = [rng.random_range(0..n), rng.random_range(0..n), rng.random_range(0..n)];
        t.sort_unstable();
        if t[0] != t[1] && t[1] != t[2] {
            seen.insert(t);
        }
    }
    let mut edges: Vec<[usize; 3]> = seen.into_iter().collect();
    edges.sort_unstable();
    TriangleHypergraph::new(n, edges).unwrap()
}

#[test]
fn criterion_4_sparse_independent_sets() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let bound = spencer_guarantee(200, 2000);
    let mut smallest = usize::MAX;
    let mut bad = 0;
    for s in 0..100 {
        let h = random_hypergraph(200, 2000, &mut rng);
        let set = spencer_independent_set(&h, s);
        smallest = smallest.min(set.len());
        if verify_independent_set(200, &h.edges, &set).is_err() || set.len() < bound {
            bad += 1;
        }
    }
    let mut over_max = 0;
    for s in 0..300 {
        let n = 3 + s % 10;
        let e = rng.random_range(0..=binomial(n, 3).min(40));
        let h = random_hypergraph(n, e, &mut rng);
        let set = spencer_independent_set(&h, s as u64);
        if verify_independent_set(n, &h.edges, &set).is_err() || set.len() > brute_force_max_independent(n, &h.edges) {
            over_max += 1;
        }
    }
    let pass = bound == 24 && bad == 0 && over_max == 0;
    report(
        4,
        pass,
        format!("n=200 e=2000: smallest set {smallest} vs bound {bound}, {bad} bad; n<=12: {over_max} bad of 300"),
    );
    assert!(pass);
}

// ---------------------------------------------------------------- criterion 5

/// Random Gallai colouring by substitution: split into blocks, colour
/// between blocks with two colours, recurse inside blocks.
fn random_gallai(n: usize, rng: &mut ChaCha8Rng) -> CompleteColouring {
    fn fill(vs: &[usize], rng: &mut ChaCha8Rng, m: &mut Vec<Vec<Colour>>) {
        if vs.len() <= 1 {
            return;
        }
        let k = rng.random_range(2..=vs.len().min(4));
        let mut cuts: Vec<usize> = (1..vs.len()).collect();
        cuts.shuffle(rng);
        let mut cuts = cuts[..k - 1].to_vec();
        cuts.sort_unstable();
        let mut blocks = Vec::new();
        let mut start = 0;
        for c in cuts.into_iter().chain([vs.len()]) {
            blocks.push(&vs[start..c]);
            start = c;
        }
        let mut pair = RBG;
        pair.shuffle(rng);
        for i in 0..k {
            for j in i + 1..k {
                let c = pair[rng.random_range(0..2)];
                for &u in blocks[i] {
                    for &v in blocks[j] {
                        m[u][v] = c;
                        m[v][u] = c;
                    }
                }
            }
        }
        for b in blocks {
            fill(b, rng, m);
        }
    }
    let mut m = vec![vec![0; n]; n];
    let mut vs: Vec<usize> = (0..n).collect();
    vs.shuffle(rng);
    fill(&vs, rng, &mut m);
    CompleteColouring::from_fn(n, 2, 3, |s| m[s[0]][s[1]]).unwrap()
}

fn two_coloured_lex_product(rng: &mut ChaCha8Rng) -> CompleteColouring {
    let pal = [[RED, BLUE], [RED, GREEN], [BLUE, GREEN]];
    let f: Vec<CompleteColouring> = pal
        .iter()
        .map(|p| CompleteColouring::from_fn(3, 2, 3, |_| p[rng.random_range(0..2)]).unwrap())
        .collect();
    lex_product(&lex_product(&f[0], &f[1]).unwrap(), &f[2]).unwrap()
}

#[test]
fn criterion_5_two_coloured_cliques() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut bad = Vec::new();
    let mut confirmed = 0;
    let mut orders = Vec::new();
    for i in 0..50 {
        let c = if i < 15 {
            two_coloured_lex_product(&mut rng)
        } else {
            let n = rng.random_range(6..=if i < 40 { 30 } else { 120 });
            random_gallai(n, &mut rng)
        };
        let n = c.n();
        orders.push(n);
        let g = GallaiColouring::new(c.clone()).expect("generator produces Gallai colourings");
        let w = match gallai_two_coloured_clique(&g) {
            Ok(w) => w,
            Err(e) => {
                bad.push(format!("#{i}: {e}"));
                continue;
            }
        };
        if verify_clique_witness(&c, &w, 2).is_err() || w.len() < cube_root_ceil(n) {
            bad.push(format!("#{i}: witness {w:?}"));
        }
        if n <= 30 {
            let best = [0b011u64, 0b101, 0b110]
                .iter()
                .map(|&m| brute_force_max_clique_within(&c, m))
                .max()
                .unwrap();
            if best != w.len() {
                bad.push(format!("#{i}: size {} but maximum {best}", w.len()));
            }
            confirmed += 1;
        }
    }
    let pass = bad.is_empty();
    report(
        5,
        pass,
        format!(
            "50 Gallai colourings, n in {}..={}, {confirmed} confirmed maximum by exhaustive search, {} bad",
            orders.iter().min().unwrap(),
            orders.iter().max().unwrap(),
            bad.len()
        ),
    );
    assert!(pass, "{bad:?}");
}

// ---------------------------------------------------------------- criterion 6

#[test]
fn criterion_6_f_oracle() {
    let f2 = f_oracle(2, 8).unwrap().value;
    let f3 = f_oracle(3, 8).unwrap().value;
    let r4 = f_oracle_with(
        4,
        12,
        FOracleConfig {
            cross_check: true,
            ..Default::default()
        },
    )
    .unwrap();
    let consistent = r4.steps.iter().all(|s| s.consistent());
    let both = r4
        .steps
        .iter()
        .filter(|s| s.exhaustive.is_some() && s.local_search.is_some())
        .count();
    let definite = matches!(r4.value, FValue::Exact(_) | FValue::AtLeast(_));
    let pass = f2 == FValue::Exact(2) && f3 == FValue::Exact(3) && definite && consistent;
    report(
        6,
        pass,
        format!(
            "F(2) {f2}, F(3) {f3}, F(4) {}, modes agree at {both} orders: {consistent}",
            r4.value
        ),
    );
    assert!(pass);
}

// ---------------------------------------------------------------- criterion 7

/// Random red/blue/green triple colourings, many built so that pairs carry labels.
fn auxiliary_source(n: usize, i: u64) -> CompleteColouring {
    let mut rng = ChaCha8Rng::seed_from_u64(7_000 + i);
    match i % 3 {
        0 => random_colouring(n, 3, 3, i).unwrap(),
        1 => {
            let g = random_colouring(n, 2, 3, i).unwrap();
            CompleteColouring::from_fn(n, 3, 3, |s| {
                let present = [g.edge(s[0], s[1]), g.edge(s[0], s[2]), g.edge(s[1], s[2])];
                (0..3)
                    .find(|c| !present.contains(c))
                    .unwrap_or_else(|| rng.random_range(0..3))
            })
            .unwrap()
        }
        _ => {
            let g = random_colouring(n, 2, 2, i).unwrap();
            complement_lift(&g, &RBG).unwrap()
        }
    }
}

#[test]
fn criterion_7_triangle_count_bound() {
    let mut worst: f64 = 0.0;
    let mut over = 0;
    let mut nonzero = 0;
    for i in 0..500u64 {
        let t = 3 + (i % 3) as usize;
        let n = 8 + (i as usize * 37) % 193;
        let c = auxiliary_source(n, i);
        let count = LabelColouring::new(&c, t).unwrap().rbg_triangles().len();
        let bound = 3 * (binomial(t, 2) + t) * binomial(n, 2);
        if count > bound || count > t * t * n * n {
            over += 1;
        }
        if count > 0 {
            nonzero += 1;
        }
        worst = worst.max(count as f64 / bound as f64);
    }
    let pass = over == 0;
    report(
        7,
        pass,
        format!("500 colourings, {nonzero} with red-blue-green triangles, worst count/bound {worst:.4}, {over} over"),
    );
    assert!(pass);
}

// ---------------------------------------------------------------- criterion 8

const RECORDED: &str = include_str!("../../../results/small_ramsey.txt");

#[test]
fn criterion_8_exhaustive_small_ramsey() {
    let start = Instant::now();
    let verdict = exhaustive_ramsey_check(3, 2, 6).unwrap();
    let elapsed = start.elapsed();
    let (sampled, disagreements) = cross_check_sample(3, 2, 6, 0.1, 8).unwrap();
    let (summary, recorded_ok, sound) = match &verdict {
        RamseyVerdict::Holds { colourings_checked } => (
            format!("holds after {colourings_checked} colourings"),
            RECORDED.contains("verdict: holds"),
            true,
        ),
        RamseyVerdict::Counterexample(c) => {
            let hcol = c.to_hcol();
            let free = (0..2).all(|col| !brute_force_hedgehog(c, 3, col));
            (
                "counterexample".to_string(),
                RECORDED.contains("verdict: counterexample") && RECORDED.contains(&hcol),
                free,
            )
        }
    };
    let pass = elapsed < Duration::from_secs(600) && disagreements == 0 && sampled > 0 && recorded_ok && sound;
    report(
        8,
        pass,
        format!(
            "t=3 q=2 n=6 {summary} in {elapsed:?}; slow path agreed on {sampled} sampled colourings \
             ({disagreements} disagreements); matches recorded result: {recorded_ok}"
        ),
    );
    assert!(pass);
}

// ---------------------------------------------------------------- criterion 9

fn choose_other(rng: &mut ChaCha8Rng, n: usize, avoid: &[usize]) -> Option<usize> {
    let free: Vec<usize> = (0..n).filter(|v| !avoid.contains(v)).collect();
    free.get(rng.random_range(0..free.len().max(1))).copied()
}

/// One mutation that cannot leave a valid certificate behind, or `None` if
/// the chosen kind does not apply.
fn mutate_embedding(
    e: &HedgehogEmbedding,
    host: &CompleteColouring,
    rng: &mut ChaCha8Rng,
) -> Option<HedgehogEmbedding> {
    let n = host.n();
    let mut m = e.clone();
    let s = rng.random_range(0..m.spines.len());
    let b = rng.random_range(0..m.body.len());
    let used: Vec<usize> = e.vertices();
    match rng.random_range(0..10) {
        0 => m.colour = 1 - m.colour,
        1 => m.spines[s].vertex = e.body[b],
        2 if m.spines.len() > 1 => {
            let other = (s + 1 + rng.random_range(0..m.spines.len() - 1)) % m.spines.len();
            m.spines[s].vertex = e.spines[other].vertex;
        }
        3 => {
            let tip = &e.spines[s].tip;
            let w = (0..n)
                .filter(|w| !used.contains(w))
                .find(|&w| host.triple(tip[0], tip[1], w) != e.colour)?;
            m.spines[s].vertex = w;
        }
        4 => m.spines[s].vertex = n + rng.random_range(0..5),
        5 => m.body[b] = e.body[(b + 1) % e.body.len()],
        6 => m.body[b] = n + rng.random_range(0..5),
        7 => m.body[b] = choose_other(rng, n, &used)?,
        8 if m.spines.len() > 1 => {
            let other = &e.spines[(s + 1) % e.spines.len()].tip;
            m.spines[s].tip = other.clone();
        }
        2 | 8 => return None,
        _ => {
            if rng.random_bool(0.5) {
                m.spines.remove(s);
            } else {
                let extra = Spine {
                    tip: e.spines[s].tip.clone(),
                    vertex: choose_other(rng, n, &used)?,
                };
                m.spines.push(extra);
            }
        }
    }
    Some(m)
}

fn mutate_clique(w: &CliqueWitness, host: &CompleteColouring, rng: &mut ChaCha8Rng) -> Option<CliqueWitness> {
    let n = host.n();
    let mut m = w.clone();
    let i = rng.random_range(0..w.vertices.len());
    match rng.random_range(0..4) {
        0 => {
            let missing = (0..host.q() as Colour).find(|c| !w.colours.contains(c))?;
            m.colours.push(missing);
        }
        1 => {
            m.colours.remove(rng.random_range(0..w.colours.len()));
        }
        2 => m.vertices.push(w.vertices[i]),
        _ => {
            // swap in an outside vertex that changes the colour census
            let v = (0..n).filter(|v| !w.vertices.contains(v)).find(|&v| {
                let mut vs = w.vertices.clone();
                vs[i] = v;
                let mut cs: Vec<Colour> = Vec::new();
                for (a, &x) in vs.iter().enumerate() {
                    for &y in &vs[a + 1..] {
                        let c = host.edge(x, y);
                        if !cs.contains(&c) {
                            cs.push(c);
                        }
                    }
                }
                cs.sort_unstable();
                cs != w.colours
            })?;
            m.vertices[i] = v;
        }
    }
    Some(m)
}

fn mutate_set(set: &[usize], h: &TriangleHypergraph, rng: &mut ChaCha8Rng) -> Option<Vec<usize>> {
    let mut m = set.to_vec();
    match rng.random_range(0..3) {
        0 => m.push(set[rng.random_range(0..set.len())]),
        1 => m.push(h.n + rng.random_range(0..3)),
        _ => {
            // add a vertex that closes an edge
            let e = h
                .edges
                .iter()
                .filter(|e| e.iter().filter(|v| set.contains(v)).count() == 2)
                .nth(rng.random_range(0..8))?;
            m.push(*e.iter().find(|v| !set.contains(v)).unwrap());
        }
    }
    Some(m)
}

#[test]
fn criterion_9_mutation_robustness() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut embeddings = Vec::new();
    for s in 0..20u64 {
        let t = 2 + s as usize % 3;
        let c = random_colouring(4 * t * t * t, 3, 2, 900 + s).unwrap();
        let e = find_monochromatic_hedgehog(&c, t).unwrap();
        embeddings.push((e, c));
    }
    let mut cliques = Vec::new();
    for _ in 0..10 {
        let c = random_gallai(rng.random_range(10..40), &mut rng);
        let w = gallai_two_coloured_clique(&GallaiColouring::new(c.clone()).unwrap()).unwrap();
        if w.len() >= 2 {
            cliques.push((w, c));
        }
    }
    let mut sets = Vec::new();
    for s in 0..10u64 {
        let h = random_hypergraph(60, 300, &mut rng);
        sets.push((spencer_independent_set(&h, s), h));
    }

    let (mut tried, mut accepted) = (0, Vec::new());
    while tried < 10_000 {
        match tried % 3 {
            0 => {
                let (e, c) = &embeddings[rng.random_range(0..embeddings.len())];
                let Some(m) = mutate_embedding(e, c, &mut rng) else {
                    continue;
                };
                if verify_embedding(&m, c).is_ok() {
                    accepted.push(format!("embedding {m}"));
                }
            }
            1 => {
                let (w, c) = &cliques[rng.random_range(0..cliques.len())];
                let Some(m) = mutate_clique(w, c, &mut rng) else {
                    continue;
                };
                if verify_clique_witness(c, &m, 2).is_ok() {
                    accepted.push(format!("clique {m}"));
                }
            }
            _ => {
                let (set, h) = &sets[rng.random_range(0..sets.len())];
                let Some(m) = mutate_set(set, h, &mut rng) else {
                    continue;
                };
                if verify_independent_set(h.n, &h.edges, &m).is_ok() {
                    accepted.push(format!("independent set {m:?}"));
                }
            }
        }
        tried += 1;
    }
    let pass = accepted.is_empty();
    report(
        9,
        pass,
        format!("{tried} mutated certificates, {} accepted", accepted.len()),
    );
    assert!(pass, "{:?}", &accepted[..accepted.len().min(5)]);
}
