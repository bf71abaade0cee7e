mod common;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use semistream::algo::{greedy, two_pass, MetaParams, FACTOR_BREAK};
use semistream::instances::gen_random_planted;
use semistream::{maximum_matching, open_stream, validate_matching, BipartiteGraph, Edge};

use common::{brute_force_mu, random_small_graph};

#[test]
fn brute_force_helper_on_known_graphs() {
    let e = Edge::new;
    let path = BipartiteGraph::new(2, 2, vec![e(0, 0), e(0, 1), e(1, 0)]).unwrap();
    assert_eq!(brute_force_mu(&path), 2);
    let star = BipartiteGraph::new(1, 4, (0..4).map(|b| e(0, b)).collect()).unwrap();
    assert_eq!(brute_force_mu(&star), 1);
    assert_eq!(brute_force_mu(&BipartiteGraph::empty(3, 3)), 0);
}

#[test]
fn planted_small_instances_match_brute_force() {
    for seed in 0..50 {
        let n = 1 + (seed % 8) as u32;
        let (g, planted) = gen_random_planted(n, 0.3, seed);
        let mu = brute_force_mu(&g);
        assert_eq!(mu, n as usize);
        assert_eq!(maximum_matching(&g).len(), mu);
        assert!(validate_matching(&g, &planted).is_valid());
    }
}

#[test]
fn oracle_and_two_pass_on_random_small_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for trial in 0..300 {
        let g = random_small_graph(&mut rng, 8, 8);
        let m = maximum_matching(&g);
        assert!(validate_matching(&g, &m).is_valid());
        assert_eq!(m.len(), brute_force_mu(&g), "trial {trial}");

        let greedy_size = greedy(&mut open_stream(&g)).unwrap().len();
        let params = MetaParams::new(FACTOR_BREAK, 1 + trial % 3, trial as u64).unwrap();
        let (out, report) = two_pass(&g, &params).unwrap();
        assert!(validate_matching(&g, &out).is_valid());
        assert!(out.len() >= greedy_size);
        assert!(out.len() <= m.len());
        assert_eq!(report.mu, Some(m.len() as u64));
    }
}
