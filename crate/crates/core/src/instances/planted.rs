use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{BipartiteGraph, Edge, Matching};

/// A random `n + n` graph containing a planted perfect matching (so `μ = n`)
/// plus each other pair independently with probability `extra_density`.
///
/// The planted matching pairs `a_i` with `b_σ(i)` for a random permutation
/// `σ`, and the whole edge list is shuffled, so stream order carries no hint
/// of the planted edges.
pub fn gen_random_planted(n: u32, extra_density: f64, seed: u64) -> (BipartiteGraph, Matching) {
    assert!((0.0..=1.0).contains(&extra_density), "density must lie in [0, 1]");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sigma: Vec<u32> = (0..n).collect();
    sigma.shuffle(&mut rng);
    let planted: Vec<Edge> = (0..n).map(|a| Edge::new(a, sigma[a as usize])).collect();

    let mut edges = planted.clone();
    let total = n as u64 * n as u64;
    let is_planted = |pos: u64| {
        let (a, b) = ((pos / n as u64) as u32, (pos % n as u64) as u32);
        (sigma[a as usize] == b, Edge::new(a, b))
    };
    if extra_density >= 1.0 {
        for pos in 0..total {
            let (skip, e) = is_planted(pos);
            if !skip {
                edges.push(e);
            }
        }
    } else if extra_density > 0.0 {
        // Geometric jumps between successes of the Bernoulli sequence.
        let log_q = (1.0 - extra_density).ln();
        let mut pos: u64 = 0;
        loop {
            let u: f64 = rng.gen::<f64>();
            let jump = ((1.0 - u).ln() / log_q).floor();
            if !jump.is_finite() || pos as f64 + jump >= total as f64 {
                break;
            }
            pos += jump as u64;
            let (skip, e) = is_planted(pos);
            if !skip {
                edges.push(e);
            }
            pos += 1;
        }
    }
    edges.shuffle(&mut rng);
    let g = BipartiteGraph::new(n, n, edges).expect("generated edges are simple and in range");
    (g, Matching::from_edges(planted))
}
