//! The worst-case instance for the augmenting-path pass.
//!
//! Four blocks of `N` vertices: `A_in`, `A_out` on side A and `B_in`, `B_out`
//! on side B, laid out contiguously (`A_in = 0..N`, `A_out = N..2N`, same for
//! B). The edges are
//!
//! * `M`: `a_in^i b_in^i` for every `i`, streamed first in index order;
//! * `E_L`: `a_in^i b_out^j` for `i ≥ j`, by decreasing `i` then increasing `j`;
//! * `E_R`: `a_out^i b_in^j` for `i ≥ j`, in the same order.
//!
//! Greedy recovers exactly `M` in the first pass, while `μ = 2N` through the
//! diagonal edges of `E_L` and `E_R`. Indices here are 0-based.

use crate::algo::SecondPass;
use crate::graph::{BipartiteGraph, Edge, Matching};
use crate::stream::EdgeSource;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Block {
    AIn,
    AOut,
    BIn,
    BOut,
}

/// The instance for a given `N`. Edges are generated on demand; `Θ(N²)` of
/// them are never held in memory unless [`HardInstance::graph`] is called.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HardInstance {
    n: u32,
}

impl HardInstance {
    /// Panics if `n == 0` or `2n` overflows `u32`.
    pub fn new(n: u32) -> Self {
        assert!(n >= 1, "N must be at least 1");
        assert!(n <= u32::MAX / 2, "N too large");
        HardInstance { n }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `μ = 2N`.
    pub fn mu(&self) -> u64 {
        2 * self.n as u64
    }

    pub fn a_in(&self, i: u32) -> u32 {
        i
    }

    pub fn a_out(&self, i: u32) -> u32 {
        self.n + i
    }

    pub fn b_in(&self, i: u32) -> u32 {
        i
    }

    pub fn b_out(&self, i: u32) -> u32 {
        self.n + i
    }

    pub fn block_a(&self, a: u32) -> Block {
        if a < self.n {
            Block::AIn
        } else {
            Block::AOut
        }
    }

    pub fn block_b(&self, b: u32) -> Block {
        if b < self.n {
            Block::BIn
        } else {
            Block::BOut
        }
    }

    /// The planted maximal matching `M` between `A_in` and `B_in`.
    pub fn planted(&self) -> Matching {
        (0..self.n).map(|i| Edge::new(i, i)).collect()
    }

    /// The perfect matching `{a_in^i b_out^i} ∪ {a_out^i b_in^i}`.
    pub fn diagonal(&self) -> Matching {
        let n = self.n;
        (0..n)
            .map(|i| Edge::new(i, n + i))
            .chain((0..n).map(|i| Edge::new(n + i, i)))
            .collect()
    }

    /// Materializes the edge list. Quadratic in `N`.
    pub fn graph(&self) -> BipartiteGraph {
        BipartiteGraph::new(self.n_a(), self.n_b(), self.edges().collect())
            .expect("generated edges are simple and in range")
    }
}

impl EdgeSource for HardInstance {
    type Edges<'s> = HardEdges;

    fn n_a(&self) -> u32 {
        2 * self.n
    }

    fn n_b(&self) -> u32 {
        2 * self.n
    }

    fn edge_count(&self) -> u64 {
        let n = self.n as u64;
        n + n * (n + 1)
    }

    fn edges(&self) -> HardEdges {
        HardEdges { n: self.n, phase: Phase::Planted, i: 0, j: 0 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Phase {
    Planted,
    Left,
    Right,
    Done,
}

/// Stream-order iterator over a [`HardInstance`].
#[derive(Debug, Clone)]
pub struct HardEdges {
    n: u32,
    phase: Phase,
    // Planted: i counts up. Left/Right: i counts down from n-1, j up to i.
    i: u32,
    j: u32,
}

impl Iterator for HardEdges {
    type Item = Edge;

    #[inline]
    fn next(&mut self) -> Option<Edge> {
        let n = self.n;
        match self.phase {
            Phase::Planted => {
                let e = Edge::new(self.i, self.i);
                self.i += 1;
                if self.i == n {
                    self.phase = Phase::Left;
                    self.i = n - 1;
                    self.j = 0;
                }
                Some(e)
            }
            Phase::Left | Phase::Right => {
                let e = if self.phase == Phase::Left {
                    Edge::new(self.i, n + self.j)
                } else {
                    Edge::new(n + self.i, self.j)
                };
                if self.j < self.i {
                    self.j += 1;
                } else if self.i > 0 {
                    self.i -= 1;
                    self.j = 0;
                } else if self.phase == Phase::Left {
                    self.phase = Phase::Right;
                    self.i = n - 1;
                    self.j = 0;
                } else {
                    self.phase = Phase::Done;
                }
                Some(e)
            }
            Phase::Done => None,
        }
    }

    // Nested loops instead of per-edge phase dispatch; passes over the
    // quadratic part are dominated by this.
    fn fold<B, F>(self, init: B, mut f: F) -> B
    where
        F: FnMut(B, Edge) -> B,
    {
        let n = self.n;
        let mut acc = init;
        let (mut phase, mut start_i, mut start_j) = (self.phase, self.i, self.j);
        loop {
            match phase {
                Phase::Planted => {
                    for i in start_i..n {
                        acc = f(acc, Edge::new(i, i));
                    }
                    phase = Phase::Left;
                }
                Phase::Left | Phase::Right => {
                    let left = phase == Phase::Left;
                    for i in (0..=start_i).rev() {
                        let j0 = if i == start_i { start_j } else { 0 };
                        if left {
                            for j in j0..=i {
                                acc = f(acc, Edge::new(i, n + j));
                            }
                        } else {
                            for j in j0..=i {
                                acc = f(acc, Edge::new(n + i, j));
                            }
                        }
                    }
                    phase = if left { Phase::Right } else { Phase::Done };
                }
                Phase::Done => return acc,
            }
            start_i = n - 1;
            start_j = 0;
        }
    }
}

impl std::iter::FusedIterator for HardEdges {}

/// Index statistics of a second pass on a [`HardInstance`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexExtremes {
    /// Smallest `i` with `a_in^i` covered by `S_L`.
    pub i_min: Option<u32>,
    /// Largest `i` with `b_in^i` covered by `S_R`.
    pub i_max: Option<u32>,
    /// `|M''|`: sampled indices in `[i_min, i_max]`.
    pub augmentable: usize,
}

pub fn check_index_extremes(inst: &HardInstance, run: &SecondPass) -> IndexExtremes {
    let n = inst.n();
    let i_min = run.left.edges().iter().map(|e| e.a).filter(|&a| a < n).min();
    let i_max = run.right.edges().iter().map(|e| e.b).filter(|&b| b < n).max();
    let augmentable = match (i_min, i_max) {
        (Some(lo), Some(hi)) => run.sampled.edges().iter().filter(|e| (lo..=hi).contains(&e.a)).count(),
        _ => 0,
    };
    IndexExtremes { i_min, i_max, augmentable }
}

/// The covered sampled indices form an up-set on the left (if `i` is covered
/// and `j > i` is sampled then `j` is covered) and a down-set on the right.
pub fn wings_are_monotone(inst: &HardInstance, run: &SecondPass) -> bool {
    let n = inst.n() as usize;
    let mut left_cov = vec![false; n];
    for e in run.left.edges() {
        left_cov[e.a as usize] = true;
    }
    let mut right_cov = vec![false; n];
    for e in run.right.edges() {
        right_cov[e.b as usize] = true;
    }
    let mut sampled: Vec<usize> = run.sampled.edges().iter().map(|e| e.a as usize).collect();
    sampled.sort_unstable();
    let up_set = sampled.windows(2).all(|w| !left_cov[w[0]] || left_cov[w[1]]);
    let down_set = sampled.windows(2).all(|w| !right_cov[w[1]] || right_cov[w[0]]);
    up_set && down_set
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algo::{greedy, MetaParams};
    use crate::oracle::maximum_matching;
    use crate::stream::open_stream;
    use crate::{is_maximal, validate_matching};

    #[test]
    fn smallest_case() {
        let inst = HardInstance::new(1);
        let g = inst.graph();
        assert_eq!(g.n_a(), 2);
        assert_eq!(g.n_b(), 2);
        // a_in b_in, a_in b_out, a_out b_in
        assert_eq!(g.edges(), &[Edge::new(0, 0), Edge::new(0, 1), Edge::new(1, 0)]);
        assert_eq!(maximum_matching(&g).len(), 2);
    }

    #[test]
    fn edge_count_and_order() {
        for n in [1u32, 2, 3, 7, 20] {
            let inst = HardInstance::new(n);
            let edges: Vec<Edge> = inst.edges().collect();
            assert_eq!(edges.len() as u64, inst.edge_count());
            assert_eq!(&edges[..n as usize], inst.planted().edges());
            // E_L by definition, then ordered by (i desc, j asc).
            let mut expect_l = Vec::new();
            for i in (0..n).rev() {
                for j in 0..=i {
                    expect_l.push(Edge::new(i, n + j));
                }
            }
            let l_end = n as usize + expect_l.len();
            assert_eq!(&edges[n as usize..l_end], &expect_l[..]);
            let mut expect_r = Vec::new();
            for i in (0..n).rev() {
                for j in 0..=i {
                    expect_r.push(Edge::new(n + i, j));
                }
            }
            assert_eq!(&edges[l_end..], &expect_r[..]);
        }
    }

    #[test]
    fn planted_is_maximal_and_mu_is_2n() {
        let inst = HardInstance::new(100);
        let g = inst.graph();
        assert_eq!(g.edge_count(), 100 + 2 * 5050);
        assert!(is_maximal(&g, &inst.planted()));
        assert!(validate_matching(&g, &inst.planted()).is_valid());
        assert!(validate_matching(&g, &inst.diagonal()).is_valid());
        assert_eq!(inst.diagonal().len(), 200);
        assert_eq!(maximum_matching(&g).len(), 200);
    }

    #[test]
    fn greedy_recovers_planted() {
        let inst = HardInstance::new(7);
        let m = greedy(&mut open_stream(&inst)).unwrap();
        assert_eq!(m, inst.planted());
    }

    #[test]
    fn monotone_wings_small() {
        let inst = HardInstance::new(300);
        for seed in 0..5 {
            let params = MetaParams::new(0.5, 3, seed).unwrap();
            let mut s = open_stream(&inst);
            let m = greedy(&mut s).unwrap();
            let run = crate::algo::find_augmenting_paths(&mut s, &m, &params).unwrap();
            assert!(wings_are_monotone(&inst, &run));
        }
    }
}
