use std::collections::HashSet;
use std::ops::Range;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use super::instance::{MatchingId, RsInstance};
use crate::graph::{BipartiteGraph, Edge, GraphError, Matching};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LambdaError {
    #[error("instance has not been certified")]
    Uncertified,
    #[error("instance failed certification")]
    CertificateFailed,
    #[error("designated set {index} is out of range for a family of {len}")]
    BadDesignated { index: usize, len: usize },
    #[error("no matchings left to sample from")]
    NoMatchings,
    #[error("keep size {requested} exceeds the smallest matching ({smallest})")]
    KeepTooLarge { requested: usize, smallest: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Knobs for [`gen_lambda`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LambdaOptions {
    /// Build the overlaid variant: remove the designated pair from the
    /// family and add a perfect matching `P` through it, streamed first.
    pub plus: bool,
    /// Use `M_I'` as well as `M_I` as Alice's matchings.
    pub include_mirrored: bool,
    /// Index set whose pair forms `P` (overlaid variant only).
    pub designated: usize,
    /// Size of every subsampled `M̂_j`. Defaults to `(½ − 2δ)N`, clamped to
    /// the smallest matching (and replaced by it when the formula is not
    /// positive).
    pub keep_size: Option<usize>,
}

impl Default for LambdaOptions {
    fn default() -> Self {
        LambdaOptions { plus: false, include_mirrored: true, designated: 0, keep_size: None }
    }
}

impl LambdaOptions {
    pub fn plus() -> Self {
        LambdaOptions { plus: true, ..Self::default() }
    }
}

/// A sampled two-party instance over an RS graph.
///
/// Side A is the RS side `X` followed by the pads attached to side B; side B
/// is the RS side `Y` followed by the pads attached to side A.
#[derive(Debug, Clone)]
pub struct CommInstance {
    /// The matchings Alice's edges were drawn from, in order.
    pub matchings: Vec<MatchingId>,
    /// Position of the special matching in `matchings`.
    pub special_pos: usize,
    pub special: MatchingId,
    /// `|M̂_j|`, equal for every `j`.
    pub keep_size: usize,
    /// `E_1`: the union of the subsampled matchings.
    pub alice: Vec<Edge>,
    /// `E_2 = M*_X ∪ M*_Y`.
    pub bob: Vec<Edge>,
    /// Side-A indices of the pads matched into `B̄(M_s)`.
    pub pad_x: Range<u32>,
    /// Side-B indices of the pads matched into `Ā(M_s)`.
    pub pad_y: Range<u32>,
    /// `P`, for the overlaid variant.
    pub overlay: Option<Matching>,
    /// `M*_X ∪ M*_Y ∪ M̂_s`.
    pub witness: Matching,
    /// The assembled graph in stream order: `P` (if any), then `E_1` minus
    /// `P`, then `E_2`.
    pub graph: BipartiteGraph,
}

fn default_keep(inst: &RsInstance, smallest: usize) -> usize {
    let target = (0.5 - 2.0 * inst.params().delta()) * inst.n() as f64;
    if target < 1.0 {
        smallest
    } else {
        (target.floor() as usize).min(smallest)
    }
}

/// Samples one instance. Deterministic in `seed`.
pub fn gen_lambda(inst: &RsInstance, opts: LambdaOptions, seed: u64) -> Result<CommInstance, LambdaError> {
    match inst.certificate() {
        None => return Err(LambdaError::Uncertified),
        Some(c) if !c.passed() => return Err(LambdaError::CertificateFailed),
        Some(_) => {}
    }
    let t = inst.family().len();
    if opts.plus && opts.designated >= t {
        return Err(LambdaError::BadDesignated { index: opts.designated, len: t });
    }
    let matchings: Vec<MatchingId> = inst
        .matchings()
        .map(|(id, _)| id)
        .filter(|id| !(opts.plus && id.set == opts.designated))
        .filter(|id| opts.include_mirrored || !id.mirrored)
        .collect();
    if matchings.is_empty() {
        return Err(LambdaError::NoMatchings);
    }
    let smallest = matchings.iter().map(|&id| inst.matching(id).len()).min().unwrap();
    let keep = match opts.keep_size {
        Some(k) if k > smallest => return Err(LambdaError::KeepTooLarge { requested: k, smallest }),
        Some(k) => k,
        None => default_keep(inst, smallest),
    };

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let hats: Vec<Vec<Edge>> = matchings
        .iter()
        .map(|&id| {
            let edges = inst.matching(id).edges();
            let mut idx = sample(&mut rng, edges.len(), keep).into_vec();
            idx.sort_unstable();
            idx.into_iter().map(|i| edges[i]).collect()
        })
        .collect();
    let special_pos = rng.gen_range(0..matchings.len());
    let special = matchings[special_pos];

    let n = inst.n();
    let m_s = inst.matching(special);
    let mut covered_a = vec![false; n as usize];
    let mut covered_b = vec![false; n as usize];
    for e in m_s.edges() {
        covered_a[e.a as usize] = true;
        covered_b[e.b as usize] = true;
    }
    let free_b: Vec<u32> = (0..n).filter(|&b| !covered_b[b as usize]).collect();
    let free_a: Vec<u32> = (0..n).filter(|&a| !covered_a[a as usize]).collect();
    let pad_x = n..n + free_b.len() as u32;
    let pad_y = n..n + free_a.len() as u32;
    let m_x = free_b.iter().enumerate().map(|(j, &b)| Edge::new(n + j as u32, b));
    let m_y = free_a.iter().enumerate().map(|(j, &a)| Edge::new(a, n + j as u32));
    let bob: Vec<Edge> = m_x.chain(m_y).collect();
    let alice: Vec<Edge> = hats.iter().flatten().copied().collect();

    let witness: Matching = bob.iter().chain(&hats[special_pos]).copied().collect();

    let overlay = opts.plus.then(|| overlay_matching(inst, opts.designated));
    let mut stream = Vec::with_capacity(alice.len() + bob.len() + n as usize);
    match &overlay {
        Some(p) => {
            let in_p: HashSet<Edge> = p.edge_set();
            stream.extend_from_slice(p.edges());
            stream.extend(alice.iter().copied().filter(|e| !in_p.contains(e)));
        }
        None => stream.extend_from_slice(&alice),
    }
    stream.extend_from_slice(&bob);
    let graph = BipartiteGraph::new(pad_x.end, pad_y.end, stream)?;

    Ok(CommInstance {
        matchings,
        special_pos,
        special,
        keep_size: keep,
        alice,
        bob,
        pad_x,
        pad_y,
        overlay,
        witness,
        graph,
    })
}

/// `P = M_i ∪ M_i' ∪ F`, with `F` pairing the vertices left uncovered on each
/// side in index order.
fn overlay_matching(inst: &RsInstance, set: usize) -> Matching {
    let n = inst.n() as usize;
    let (m, mm) = &inst.pairs()[set];
    let mut covered_a = vec![false; n];
    let mut covered_b = vec![false; n];
    let mut p: Matching = m.edges().iter().chain(mm.edges()).copied().collect();
    for e in p.edges() {
        covered_a[e.a as usize] = true;
        covered_b[e.b as usize] = true;
    }
    let free_a = (0..n as u32).filter(|&a| !covered_a[a as usize]);
    let free_b = (0..n as u32).filter(|&b| !covered_b[b as usize]);
    for (a, b) in free_a.zip(free_b) {
        p.push(Edge::new(a, b));
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algo::greedy;
    use crate::graph::{is_maximal, validate_matching};
    use crate::oracle::maximum_matching;
    use crate::rs::params::ColouringParams;
    use crate::stream::open_stream;

    fn certified() -> RsInstance {
        let mut inst = RsInstance::build(ColouringParams::new(3, 1).unwrap()).unwrap();
        inst.certify();
        inst
    }

    #[test]
    fn rejects_uncertified() {
        let inst = RsInstance::build(ColouringParams::new(3, 1).unwrap()).unwrap();
        assert_eq!(gen_lambda(&inst, LambdaOptions::default(), 0).unwrap_err(), LambdaError::Uncertified);
    }

    #[test]
    fn single_matching_forces_special() {
        let mut inst =
            RsInstance::with_family(ColouringParams::new(3, 1).unwrap(), vec![vec![2]], 10_000).unwrap();
        inst.certify();
        let opts = LambdaOptions { include_mirrored: false, ..Default::default() };
        for seed in 0..5 {
            let c = gen_lambda(&inst, opts, seed).unwrap();
            assert_eq!(c.special, MatchingId { set: 0, mirrored: false });
            // Pads cover every vertex M_s leaves free.
            let m_s = inst.matching(c.special);
            assert_eq!(c.pad_x.len() + m_s.len(), 729);
            assert_eq!(c.pad_y.len() + m_s.len(), 729);
            assert_eq!(c.keep_size, m_s.len());
        }
    }

    #[test]
    fn witness_is_a_matching_and_oracle_agrees() {
        let inst = certified();
        let c = gen_lambda(&inst, LambdaOptions::default(), 7).unwrap();
        assert!(validate_matching(&c.graph, &c.witness).is_valid());
        assert_eq!(c.witness.len(), c.keep_size + c.pad_x.len() + c.pad_y.len());
        assert!(maximum_matching(&c.graph).len() >= c.keep_size + c.pad_x.len());
    }

    #[test]
    fn deterministic_per_seed() {
        let inst = certified();
        let a = gen_lambda(&inst, LambdaOptions::plus(), 3).unwrap();
        let b = gen_lambda(&inst, LambdaOptions::plus(), 3).unwrap();
        assert_eq!(a.graph, b.graph);
        assert_eq!(a.special, b.special);
    }

    #[test]
    fn plus_overlay_is_recovered_by_greedy() {
        let inst = certified();
        let c = gen_lambda(&inst, LambdaOptions::plus(), 11).unwrap();
        let p = c.overlay.as_ref().unwrap();
        assert_eq!(p.len(), 729);
        assert!(c.matchings.iter().all(|id| id.set != 0));
        assert!(is_maximal(&c.graph, p));
        let got = greedy(&mut open_stream(&c.graph)).unwrap();
        assert_eq!(got.edges(), p.edges());
    }

    #[test]
    fn keep_size_checked() {
        let inst = certified();
        let opts = LambdaOptions { keep_size: Some(10_000), ..Default::default() };
        assert!(matches!(gen_lambda(&inst, opts, 0), Err(LambdaError::KeepTooLarge { .. })));
    }
}
