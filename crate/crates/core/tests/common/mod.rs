#![allow(dead_code)]

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;
use semistream::{BipartiteGraph, Edge, KeepSet, SemiMatching, Side};

/// `μ(G)` by trying every way to match or skip each A-vertex in turn.
pub fn brute_force_mu(g: &BipartiteGraph) -> usize {
    assert!(g.n_b() <= 64);
    let mut adj = vec![Vec::new(); g.n_a() as usize];
    for e in g.edges() {
        adj[e.a as usize].push(e.b);
    }
    fn go(adj: &[Vec<u32>], a: usize, used: u64) -> usize {
        if a == adj.len() {
            return 0;
        }
        let mut best = go(adj, a + 1, used);
        for &b in &adj[a] {
            if used & (1 << b) == 0 {
                best = best.max(1 + go(adj, a + 1, used | (1 << b)));
            }
        }
        best
    }
    go(&adj, 0, 0)
}

/// A graph with `1..=max_a` and `1..=max_b` vertices, random density, random
/// edge order.
pub fn random_small_graph<R: Rng>(rng: &mut R, max_a: u32, max_b: u32) -> BipartiteGraph {
    let n_a = rng.gen_range(1..=max_a);
    let n_b = rng.gen_range(1..=max_b);
    let density: f64 = rng.gen();
    let mut edges = Vec::new();
    for a in 0..n_a {
        for b in 0..n_b {
            if rng.gen_bool(density) {
                edges.push(Edge::new(a, b));
            }
        }
    }
    edges.shuffle(rng);
    BipartiteGraph::new(n_a, n_b, edges).unwrap()
}

/// `m` distinct uniformly random edges (or all of them if fewer exist), in
/// random order.
pub fn random_graph<R: Rng>(rng: &mut R, n_a: u32, n_b: u32, m: usize) -> BipartiteGraph {
    let cap = (n_a as usize) * (n_b as usize);
    let mut seen = HashSet::new();
    let mut edges = Vec::new();
    while edges.len() < m.min(cap) {
        let e = Edge::new(rng.gen_range(0..n_a), rng.gen_range(0..n_b));
        if seen.insert(e) {
            edges.push(e);
        }
    }
    BipartiteGraph::new(n_a, n_b, edges).unwrap()
}

/// Whether `edges` is a matching of `g`, checked pairwise.
pub fn naive_is_matching(g: &BipartiteGraph, edges: &[Edge]) -> bool {
    let in_graph: HashSet<Edge> = g.edges().iter().copied().collect();
    for (i, e) in edges.iter().enumerate() {
        if !in_graph.contains(e) {
            return false;
        }
        for f in &edges[i + 1..] {
            if e.a == f.a || e.b == f.b {
                return false;
            }
        }
    }
    true
}

/// Degrees on both sides respect the caps, and no edge of `G[keep]` could
/// still be added.
pub fn semi_matching_ok(g: &BipartiteGraph, keep: &KeepSet, s: &SemiMatching) -> bool {
    let (mut deg_a, mut deg_b) = (vec![0u32; g.n_a() as usize], vec![0u32; g.n_b() as usize]);
    for e in s.edges() {
        if !keep.keeps(*e) || !g.contains(*e) {
            return false;
        }
        deg_a[e.a as usize] += 1;
        deg_b[e.b as usize] += 1;
    }
    let (one, other) = match s.one_side() {
        Side::A => (&deg_a, &deg_b),
        Side::B => (&deg_b, &deg_a),
    };
    if one.iter().any(|&x| x > 1) || other.iter().any(|&x| x > s.d()) {
        return false;
    }
    g.edges().iter().filter(|e| keep.keeps(**e)).all(|e| {
        let (u, v) = match s.one_side() {
            Side::A => (e.a, e.b),
            Side::B => (e.b, e.a),
        };
        one[u as usize] == 1 || other[v as usize] == s.d()
    })
}

/// `|Greedy_d|` on `G[A' ∪ B]` for a random `A'` holding each A-vertex with
/// probability `p`, degree 1 on A.
pub fn greedy_d_on_sampled_a(g: &BipartiteGraph, p: f64, d: u32, seed: u64) -> usize {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let a: Vec<bool> = (0..g.n_a()).map(|_| rng.gen_bool(p)).collect();
    let keep = KeepSet::from_masks(a, vec![true; g.n_b() as usize]);
    let mut s = semistream::open_stream(g);
    semistream::algo::greedy_d_filtered(&mut s, &keep, Side::A, d).unwrap().len()
}

pub fn mean_and_se(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, (var / n).sqrt())
}
