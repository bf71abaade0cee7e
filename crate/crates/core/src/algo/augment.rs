//! Second pass: subsample the first-pass matching, grow degree-bounded
//! semi-matchings on both sides of the sample, and extract a largest set of
//! vertex-disjoint 3-augmenting paths.

use thiserror::Error;

use super::greedy_d::SemiMatcher;
use super::params::{subsample, MetaParams};
use crate::graph::{Edge, Matching, SemiMatching, Side, Violation};
use crate::oracle::hopcroft_karp;
use crate::stream::{EdgeSource, EdgeStream, StreamError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AugmentError {
    #[error("input is not a matching: {0}")]
    NotAMatching(Violation),
    #[error("matching edge {0} is out of range for the stream")]
    OutOfRange(Edge),
    #[error("input matching is not maximal: streamed edge {0} has both endpoints free")]
    NotMaximal(Edge),
    #[error(transparent)]
    Stream(#[from] StreamError),
}

/// A 3-augmenting path `b' – a – b – a'` around a sampled matched edge `ab`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AugmentingPath {
    /// `ab'`, from the left semi-matching.
    pub left_wing: Edge,
    /// `ab`, from the sampled matching.
    pub middle: Edge,
    /// `a'b`, from the right semi-matching.
    pub right_wing: Edge,
}

impl AugmentingPath {
    pub fn free_b(&self) -> u32 {
        self.left_wing.b
    }

    pub fn free_a(&self) -> u32 {
        self.right_wing.a
    }
}

/// All candidate paths plus a largest vertex-disjoint subset of them.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PathSet {
    candidates: Vec<AugmentingPath>,
    selected: Vec<usize>,
}

impl PathSet {
    pub fn candidates(&self) -> &[AugmentingPath] {
        &self.candidates
    }

    /// Indices into [`PathSet::candidates`], ascending.
    pub fn selected_indices(&self) -> &[usize] {
        &self.selected
    }

    pub fn selected(&self) -> impl Iterator<Item = &AugmentingPath> + '_ {
        self.selected.iter().map(|&i| &self.candidates[i])
    }

    pub fn len_selected(&self) -> usize {
        self.selected.len()
    }

    /// Builds the candidate set and picks a maximum vertex-disjoint subset.
    ///
    /// Each sampled edge has at most one wing per side, and the free
    /// endpoints `b'`, `a'` never coincide with sampled endpoints, so two
    /// candidates conflict exactly when they share `b'` or `a'`. A largest
    /// disjoint subset is therefore a maximum matching in the graph with one
    /// edge `b' – a'` per candidate.
    pub fn assemble(
        sampled: &Matching,
        left: &SemiMatching,
        right: &SemiMatching,
        n_a: u32,
        n_b: u32,
    ) -> PathSet {
        debug_assert_eq!(left.one_side(), Side::A);
        debug_assert_eq!(right.one_side(), Side::B);
        let left_partner = left.partners(n_a);
        let right_partner = right.partners(n_b);
        let candidates: Vec<AugmentingPath> = sampled
            .edges()
            .iter()
            .filter_map(|&mid| {
                let b_free = left_partner[mid.a as usize]?;
                let a_free = right_partner[mid.b as usize]?;
                Some(AugmentingPath {
                    left_wing: Edge::new(mid.a, b_free),
                    middle: mid,
                    right_wing: Edge::new(a_free, mid.b),
                })
            })
            .collect();
        let conflicts: Vec<(u32, u32)> = candidates.iter().map(|c| (c.free_b(), c.free_a())).collect();
        let mut selected = hopcroft_karp(n_b, n_a, &conflicts);
        selected.sort_unstable();
        PathSet { candidates, selected }
    }
}

/// Everything the second pass computed.
#[derive(Debug, Clone)]
pub struct SecondPass {
    /// `M'`, the sampled part of the first-pass matching.
    pub sampled: Matching,
    /// `S_L`: degree 1 on `A(M')`, at most `d` on the free B-vertices.
    pub left: SemiMatching,
    /// `S_R`: degree 1 on `B(M')`, at most `d` on the free A-vertices.
    pub right: SemiMatching,
    pub paths: PathSet,
}

/// Runs one pass over `stream` looking for augmenting paths of `m`.
///
/// Both semi-matchings are grown in the same physical pass: every arriving
/// edge is tested against `G[A(M') ∪ B̄(M)]` and `G[Ā(M) ∪ B(M')]`. The pass
/// also checks that `m` is maximal; if a streamed edge has both endpoints
/// free the run is rejected.
pub fn find_augmenting_paths<S: EdgeSource + ?Sized>(
    stream: &mut EdgeStream<'_, S>,
    m: &Matching,
    params: &MetaParams,
) -> Result<SecondPass, AugmentError> {
    let (n_a, n_b) = (stream.n_a(), stream.n_b());
    if let Some(&e) = m.edges().iter().find(|e| e.a >= n_a || e.b >= n_b) {
        return Err(AugmentError::OutOfRange(e));
    }
    m.check().map_err(AugmentError::NotAMatching)?;

    let sampled = subsample(m, params.p(), params.seed()).expect("MetaParams holds a valid p");

    // One class per vertex: covered by M but not sampled, sampled into M', or
    // free. G_L' is (sampled, free), G_R' is (free, sampled), and an edge
    // between two free vertices means M was not maximal.
    const COVERED: u8 = 0;
    const SAMPLED: u8 = 1;
    const FREE: u8 = 2;
    let mut class_a = vec![FREE; n_a as usize];
    let mut class_b = vec![FREE; n_b as usize];
    for e in m.edges() {
        class_a[e.a as usize] = COVERED;
        class_b[e.b as usize] = COVERED;
    }
    for e in sampled.edges() {
        class_a[e.a as usize] = SAMPLED;
        class_b[e.b as usize] = SAMPLED;
    }

    let mut left = SemiMatcher::new(n_a, n_b, Side::A, params.d());
    let mut right = SemiMatcher::new(n_a, n_b, Side::B, params.d());
    let mut not_maximal = None;

    let pass = stream.begin_pass()?;
    let space = pass.space();
    pass.for_each(|e| match (class_a[e.a as usize], class_b[e.b as usize]) {
        (SAMPLED, FREE) => {
            left.offer(e, space);
        }
        (FREE, SAMPLED) => {
            right.offer(e, space);
        }
        (FREE, FREE) if not_maximal.is_none() => not_maximal = Some(e),
        _ => {}
    });
    if let Some(e) = not_maximal {
        return Err(AugmentError::NotMaximal(e));
    }

    let left = left.finish();
    let right = right.finish();
    let paths = PathSet::assemble(&sampled, &left, &right, n_a, n_b);
    stream.space().store(paths.len_selected() as u64);
    Ok(SecondPass { sampled, left, right, paths })
}
