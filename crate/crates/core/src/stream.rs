//! Sequential, pass-counted access to a graph's edges.
//!
//! Streaming algorithms in this crate take an [`EdgeStream`], never the graph
//! itself. Each traversal is started explicitly with
//! [`EdgeStream::begin_pass`]; a finished [`Pass`] stays finished. Stored
//! edges are recorded in a [`SpaceAccountant`] owned by the stream.

use std::cell::Cell;

use thiserror::Error;

use crate::graph::{BipartiteGraph, Edge};

/// Anything that can replay an ordered edge list over fixed vertex sets.
///
/// Implemented by [`BipartiteGraph`] and by the implicit generators in
/// [`crate::instances`], whose edge lists are too long to materialize.
pub trait EdgeSource {
    type Edges<'s>: Iterator<Item = Edge>
    where
        Self: 's;

    fn n_a(&self) -> u32;
    fn n_b(&self) -> u32;
    fn edge_count(&self) -> u64;
    /// Edges in stream order. Every call replays the same sequence.
    fn edges(&self) -> Self::Edges<'_>;
}

impl EdgeSource for BipartiteGraph {
    type Edges<'s> = std::iter::Copied<std::slice::Iter<'s, Edge>>;

    fn n_a(&self) -> u32 {
        BipartiteGraph::n_a(self)
    }

    fn n_b(&self) -> u32 {
        BipartiteGraph::n_b(self)
    }

    fn edge_count(&self) -> u64 {
        BipartiteGraph::edge_count(self) as u64
    }

    fn edges(&self) -> Self::Edges<'_> {
        BipartiteGraph::edges(self).iter().copied()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum StreamError {
    #[error("pass budget of {limit} exhausted")]
    PassBudgetExhausted { limit: u32 },
}

/// Counts edges an algorithm keeps in memory.
///
/// Uses interior mutability so that it can be borrowed while a [`Pass`] is
/// being iterated.
#[derive(Debug, Default)]
pub struct SpaceAccountant {
    current: Cell<u64>,
    peak: Cell<u64>,
}

impl SpaceAccountant {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn store(&self, n: u64) {
        let c = self.current.get() + n;
        self.current.set(c);
        if c > self.peak.get() {
            self.peak.set(c);
        }
    }

    pub fn release(&self, n: u64) {
        let c = self.current.get();
        assert!(n <= c, "releasing {n} edges but only {c} are stored");
        self.current.set(c - n);
    }

    pub fn current(&self) -> u64 {
        self.current.get()
    }

    pub fn peak(&self) -> u64 {
        self.peak.get()
    }
}

/// Peak number of simultaneously stored edges.
pub fn report_space(acct: &SpaceAccountant) -> u64 {
    acct.peak()
}

/// A replayable stream over an [`EdgeSource`].
#[derive(Debug)]
pub struct EdgeStream<'g, S: EdgeSource + ?Sized = BipartiteGraph> {
    source: &'g S,
    passes_used: u32,
    pass_limit: Option<u32>,
    space: SpaceAccountant,
}

/// Opens a stream positioned before its first pass.
pub fn open_stream<S: EdgeSource + ?Sized>(source: &S) -> EdgeStream<'_, S> {
    EdgeStream::open(source)
}

impl<'g, S: EdgeSource + ?Sized> EdgeStream<'g, S> {
    pub fn open(source: &'g S) -> Self {
        EdgeStream { source, passes_used: 0, pass_limit: None, space: SpaceAccountant::new() }
    }

    /// Refuse to start more than `limit` passes.
    pub fn with_pass_limit(mut self, limit: u32) -> Self {
        self.pass_limit = Some(limit);
        self
    }

    pub fn n_a(&self) -> u32 {
        self.source.n_a()
    }

    pub fn n_b(&self) -> u32 {
        self.source.n_b()
    }

    pub fn passes_used(&self) -> u32 {
        self.passes_used
    }

    pub fn space(&self) -> &SpaceAccountant {
        &self.space
    }

    /// Starts a new traversal from the first edge. Counts as one pass whether
    /// or not it is read to the end.
    pub fn begin_pass(&mut self) -> Result<Pass<'_, S>, StreamError> {
        if let Some(limit) = self.pass_limit {
            if self.passes_used >= limit {
                return Err(StreamError::PassBudgetExhausted { limit });
            }
        }
        self.passes_used += 1;
        let this: &Self = self;
        Ok(Pass { edges: this.source.edges(), position: 0, done: false, space: &this.space })
    }
}

/// One traversal of the stream. Fused: once exhausted it yields nothing.
pub struct Pass<'s, S: EdgeSource + ?Sized + 's> {
    edges: S::Edges<'s>,
    position: u64,
    done: bool,
    space: &'s SpaceAccountant,
}

impl<'s, S: EdgeSource + ?Sized> Pass<'s, S> {
    /// Number of edges yielded so far.
    pub fn position(&self) -> u64 {
        self.position
    }

    pub fn is_finished(&self) -> bool {
        self.done
    }

    /// The stream's accountant, usable while the pass is being iterated.
    pub fn space(&self) -> &'s SpaceAccountant {
        self.space
    }

    /// Restricts this pass to the edges of the induced subgraph `G[keep]`.
    pub fn filtered<'k>(self, keep: &'k KeepSet) -> FilteredPass<'s, 'k, S> {
        FilteredPass { pass: self, keep }
    }
}

impl<'s, S: EdgeSource + ?Sized> Iterator for Pass<'s, S> {
    type Item = Edge;

    #[inline]
    fn next(&mut self) -> Option<Edge> {
        if self.done {
            return None;
        }
        match self.edges.next() {
            Some(e) => {
                self.position += 1;
                Some(e)
            }
            None => {
                self.done = true;
                None
            }
        }
    }

    fn fold<B, F>(self, init: B, f: F) -> B
    where
        F: FnMut(B, Edge) -> B,
    {
        if self.done {
            return init;
        }
        self.edges.fold(init, f)
    }
}

impl<'s, S: EdgeSource + ?Sized> std::iter::FusedIterator for Pass<'s, S> {}

/// A vertex subset `(A', B')` selecting the induced subgraph `G[A' ∪ B']`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeepSet {
    a: Vec<bool>,
    b: Vec<bool>,
}

impl KeepSet {
    pub fn all(n_a: u32, n_b: u32) -> Self {
        KeepSet { a: vec![true; n_a as usize], b: vec![true; n_b as usize] }
    }

    pub fn none(n_a: u32, n_b: u32) -> Self {
        KeepSet { a: vec![false; n_a as usize], b: vec![false; n_b as usize] }
    }

    pub fn from_masks(a: Vec<bool>, b: Vec<bool>) -> Self {
        KeepSet { a, b }
    }

    pub fn from_sets(
        n_a: u32,
        n_b: u32,
        a: impl IntoIterator<Item = u32>,
        b: impl IntoIterator<Item = u32>,
    ) -> Self {
        let mut k = KeepSet::none(n_a, n_b);
        for v in a {
            k.a[v as usize] = true;
        }
        for v in b {
            k.b[v as usize] = true;
        }
        k
    }

    #[inline]
    pub fn keeps(&self, e: Edge) -> bool {
        self.a[e.a as usize] && self.b[e.b as usize]
    }

    pub fn keeps_a(&self, a: u32) -> bool {
        self.a[a as usize]
    }

    pub fn keeps_b(&self, b: u32) -> bool {
        self.b[b as usize]
    }
}

/// A pass seen through a [`KeepSet`]. Consumes the underlying pass.
pub struct FilteredPass<'s, 'k, S: EdgeSource + ?Sized + 's> {
    pass: Pass<'s, S>,
    keep: &'k KeepSet,
}

impl<'s, 'k, S: EdgeSource + ?Sized> FilteredPass<'s, 'k, S> {
    pub fn space(&self) -> &'s SpaceAccountant {
        self.pass.space
    }
}

impl<'s, 'k, S: EdgeSource + ?Sized> Iterator for FilteredPass<'s, 'k, S> {
    type Item = Edge;

    #[inline]
    fn next(&mut self) -> Option<Edge> {
        let keep = self.keep;
        self.pass.find(|&e| keep.keeps(e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path() -> BipartiteGraph {
        let edges = vec![Edge::new(0, 0), Edge::new(0, 1), Edge::new(1, 1), Edge::new(2, 1)];
        BipartiteGraph::new(3, 2, edges).unwrap()
    }

    #[test]
    fn pass_yields_source_order_and_counts() {
        let g = path();
        let mut s = open_stream(&g);
        assert_eq!(s.passes_used(), 0);
        let got: Vec<_> = s.begin_pass().unwrap().collect();
        assert_eq!(got, g.edges());
        assert_eq!(s.passes_used(), 1);
        let again: Vec<_> = s.begin_pass().unwrap().collect();
        assert_eq!(again, got);
        assert_eq!(s.passes_used(), 2);
    }

    #[test]
    fn empty_graph_ends_immediately() {
        let g = BipartiteGraph::empty(3, 3);
        let mut s = open_stream(&g);
        let mut p = s.begin_pass().unwrap();
        assert_eq!(p.next(), None);
        assert!(p.is_finished());
        assert_eq!(p.next(), None);
    }

    #[test]
    fn finished_pass_does_not_rewind() {
        let g = path();
        let mut s = open_stream(&g);
        let mut p = s.begin_pass().unwrap();
        assert_eq!(p.by_ref().count(), 4);
        assert_eq!(p.next(), None);
        assert_eq!(p.position(), 4);
    }

    #[test]
    fn pass_budget_enforced() {
        let g = path();
        let mut s = open_stream(&g).with_pass_limit(1);
        let _ = s.begin_pass().unwrap();
        assert_eq!(
            s.begin_pass().err(),
            Some(StreamError::PassBudgetExhausted { limit: 1 })
        );
        assert_eq!(s.passes_used(), 1);
    }

    #[test]
    fn filtered_identity_and_empty() {
        let g = path();
        let mut s = open_stream(&g);
        let all = KeepSet::all(3, 2);
        let got: Vec<_> = s.begin_pass().unwrap().filtered(&all).collect();
        assert_eq!(got, g.edges());
        let none = KeepSet::none(3, 2);
        assert_eq!(s.begin_pass().unwrap().filtered(&none).count(), 0);
    }

    #[test]
    fn filtered_is_induced_subgraph() {
        let g = path();
        let mut s = open_stream(&g);
        let keep = KeepSet::from_sets(3, 2, [0, 2], [1]);
        let got: Vec<_> = s.begin_pass().unwrap().filtered(&keep).collect();
        assert_eq!(got, vec![Edge::new(0, 1), Edge::new(2, 1)]);
    }

    #[test]
    fn accountant_tracks_peak() {
        let acct = SpaceAccountant::new();
        assert_eq!(report_space(&acct), 0);
        acct.store(3);
        acct.release(2);
        acct.store(1);
        assert_eq!(acct.current(), 2);
        assert_eq!(report_space(&acct), 3);
    }
}
