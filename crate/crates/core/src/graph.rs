//! Bipartite graphs, matchings and semi-matchings.
//!
//! Vertices are identified by `(side, index)`. The two sides never share an
//! index space: `a = 3` and `b = 3` are different vertices.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

/// One of the two vertex classes of a bipartite graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::A => f.write_str("A"),
            Side::B => f.write_str("B"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub side: Side,
    pub index: u32,
}

impl Vertex {
    pub fn a(index: u32) -> Self {
        Vertex { side: Side::A, index }
    }

    pub fn b(index: u32) -> Self {
        Vertex { side: Side::B, index }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            Side::A => write!(f, "a{}", self.index),
            Side::B => write!(f, "b{}", self.index),
        }
    }
}

/// An edge `ab` with `a` on side A and `b` on side B.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub a: u32,
    pub b: u32,
}

impl Edge {
    #[inline]
    pub const fn new(a: u32, b: u32) -> Self {
        Edge { a, b }
    }

    /// The endpoint lying on `side`.
    #[inline]
    pub fn endpoint(self, side: Side) -> u32 {
        match side {
            Side::A => self.a,
            Side::B => self.b,
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a{}b{}", self.a, self.b)
    }
}

impl From<(u32, u32)> for Edge {
    fn from((a, b): (u32, u32)) -> Self {
        Edge { a, b }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {index} ({edge}) has an endpoint out of range for a {n_a}+{n_b} graph")]
    OutOfRange { index: usize, edge: Edge, n_a: u32, n_b: u32 },
    #[error("edge {edge} appears twice (positions {first} and {second})")]
    Duplicate { edge: Edge, first: usize, second: usize },
}

/// An immutable simple bipartite graph. The order of `edges` is the stream
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    n_a: u32,
    n_b: u32,
    edges: Vec<Edge>,
}

impl BipartiteGraph {
    /// Builds a graph, rejecting out-of-range endpoints and duplicate edges.
    pub fn new(n_a: u32, n_b: u32, edges: Vec<Edge>) -> Result<Self, GraphError> {
        let mut seen = std::collections::HashMap::with_capacity(edges.len());
        for (index, &edge) in edges.iter().enumerate() {
            if edge.a >= n_a || edge.b >= n_b {
                return Err(GraphError::OutOfRange { index, edge, n_a, n_b });
            }
            if let Some(first) = seen.insert(edge, index) {
                return Err(GraphError::Duplicate { edge, first, second: index });
            }
        }
        Ok(BipartiteGraph { n_a, n_b, edges })
    }

    pub fn empty(n_a: u32, n_b: u32) -> Self {
        BipartiteGraph { n_a, n_b, edges: Vec::new() }
    }

    pub fn n_a(&self) -> u32 {
        self.n_a
    }

    pub fn n_b(&self) -> u32 {
        self.n_b
    }

    pub fn n_vertices(&self) -> u64 {
        self.n_a as u64 + self.n_b as u64
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains(&self, edge: Edge) -> bool {
        self.edges.contains(&edge)
    }

    /// Same vertex sets, edges listed in `order` (a permutation of positions).
    pub fn reordered(&self, order: &[usize]) -> Self {
        assert_eq!(order.len(), self.edges.len(), "order must be a permutation");
        let edges = order.iter().map(|&i| self.edges[i]).collect();
        BipartiteGraph { n_a: self.n_a, n_b: self.n_b, edges }
    }
}

/// A set of pairwise vertex-disjoint edges, kept in insertion order.
///
/// Construction does not check disjointness; use [`validate_matching`] or
/// [`Matching::check`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<Edge>,
}

impl Matching {
    pub fn new() -> Self {
        Matching::default()
    }

    pub fn from_edges(edges: Vec<Edge>) -> Self {
        Matching { edges }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn into_edges(self) -> Vec<Edge> {
        self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn push(&mut self, edge: Edge) {
        self.edges.push(edge);
    }

    pub fn contains(&self, edge: Edge) -> bool {
        self.edges.contains(&edge)
    }

    /// Edge set, order forgotten.
    pub fn edge_set(&self) -> HashSet<Edge> {
        self.edges.iter().copied().collect()
    }

    /// Sorted copy, for order-insensitive comparison.
    pub fn sorted(&self) -> Vec<Edge> {
        let mut e = self.edges.clone();
        e.sort_unstable();
        e
    }

    /// Checks vertex-disjointness only (no host graph).
    pub fn check(&self) -> Result<(), Violation> {
        disjointness(&self.edges)
    }

    /// `mate[a]` for every A-vertex below `n_a`, if matched.
    pub fn mates_a(&self, n_a: u32) -> Vec<Option<u32>> {
        let mut mate = vec![None; n_a as usize];
        for e in &self.edges {
            mate[e.a as usize] = Some(e.b);
        }
        mate
    }

    pub fn mates_b(&self, n_b: u32) -> Vec<Option<u32>> {
        let mut mate = vec![None; n_b as usize];
        for e in &self.edges {
            mate[e.b as usize] = Some(e.a);
        }
        mate
    }

    /// Vertices of `side` covered by the matching.
    pub fn covered(&self, side: Side) -> impl Iterator<Item = u32> + '_ {
        self.edges.iter().map(move |e| e.endpoint(side))
    }
}

impl FromIterator<Edge> for Matching {
    fn from_iter<T: IntoIterator<Item = Edge>>(iter: T) -> Self {
        Matching { edges: iter.into_iter().collect() }
    }
}

/// First reason an edge set fails to be a (semi-)matching of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("edge {0} is not an edge of the graph")]
    NotInGraph(Edge),
    #[error("edge {edge} listed twice")]
    Repeated { edge: Edge },
    #[error("{vertex} has degree {degree}, cap is {cap} (edges {first} and {second})")]
    DegreeCap { vertex: Vertex, degree: u32, cap: u32, first: Edge, second: Edge },
}

fn disjointness(edges: &[Edge]) -> Result<(), Violation> {
    degree_caps(edges, 1, 1)
}

fn degree_caps(edges: &[Edge], cap_a: u32, cap_b: u32) -> Result<(), Violation> {
    use std::collections::HashMap;
    let mut seen = HashSet::with_capacity(edges.len());
    let mut deg_a: HashMap<u32, (u32, Edge)> = HashMap::new();
    let mut deg_b: HashMap<u32, (u32, Edge)> = HashMap::new();
    for &e in edges {
        if !seen.insert(e) {
            return Err(Violation::Repeated { edge: e });
        }
        let entry = deg_a.entry(e.a).or_insert((0, e));
        entry.0 += 1;
        if entry.0 > cap_a {
            return Err(Violation::DegreeCap {
                vertex: Vertex::a(e.a),
                degree: entry.0,
                cap: cap_a,
                first: entry.1,
                second: e,
            });
        }
        let entry = deg_b.entry(e.b).or_insert((0, e));
        entry.0 += 1;
        if entry.0 > cap_b {
            return Err(Violation::DegreeCap {
                vertex: Vertex::b(e.b),
                degree: entry.0,
                cap: cap_b,
                first: entry.1,
                second: e,
            });
        }
    }
    Ok(())
}

/// Outcome of [`validate_matching`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Validation {
    pub violation: Option<Violation>,
}

impl Validation {
    pub fn is_valid(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks that `m` is a subset of `g`'s edges and vertex-disjoint. Reports the
/// first violation in `m`'s edge order.
pub fn validate_matching(g: &BipartiteGraph, m: &Matching) -> Validation {
    let host: HashSet<Edge> = g.edges.iter().copied().collect();
    if let Some(&e) = m.edges.iter().find(|e| !host.contains(e)) {
        return Validation { violation: Some(Violation::NotInGraph(e)) };
    }
    Validation { violation: disjointness(&m.edges).err() }
}

/// True iff no edge of `g` has both endpoints unmatched by `m`.
pub fn is_maximal(g: &BipartiteGraph, m: &Matching) -> bool {
    let mut used_a = vec![false; g.n_a as usize];
    let mut used_b = vec![false; g.n_b as usize];
    for e in &m.edges {
        used_a[e.a as usize] = true;
        used_b[e.b as usize] = true;
    }
    g.edges.iter().all(|e| used_a[e.a as usize] || used_b[e.b as usize])
}

/// An edge set with degree at most 1 on `one_side` and at most `d` on the
/// other side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiMatching {
    edges: Vec<Edge>,
    one_side: Side,
    d: u32,
}

impl SemiMatching {
    pub fn new(one_side: Side, d: u32) -> Self {
        SemiMatching { edges: Vec::new(), one_side, d }
    }

    pub fn from_edges(one_side: Side, d: u32, edges: Vec<Edge>) -> Self {
        SemiMatching { edges, one_side, d }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn one_side(&self) -> Side {
        self.one_side
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub(crate) fn push(&mut self, edge: Edge) {
        self.edges.push(edge);
    }

    /// Verifies both degree caps.
    pub fn check(&self) -> Result<(), Violation> {
        match self.one_side {
            Side::A => degree_caps(&self.edges, 1, self.d),
            Side::B => degree_caps(&self.edges, self.d, 1),
        }
    }

    /// The partner of a degree-1 vertex, if it has one.
    pub fn partners(&self, n_one_side: u32) -> Vec<Option<u32>> {
        let mut out = vec![None; n_one_side as usize];
        let other = self.one_side.other();
        for e in &self.edges {
            out[e.endpoint(self.one_side) as usize] = Some(e.endpoint(other));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(a: u32, b: u32) -> Edge {
        Edge::new(a, b)
    }

    fn four_cycle() -> BipartiteGraph {
        BipartiteGraph::new(2, 2, vec![e(0, 0), e(0, 1), e(1, 0), e(1, 1)]).unwrap()
    }

    #[test]
    fn empty_matching_on_empty_graph() {
        let g = BipartiteGraph::empty(0, 0);
        assert!(validate_matching(&g, &Matching::new()).is_valid());
    }

    #[test]
    fn shared_b_endpoint_is_reported() {
        let g = BipartiteGraph::new(2, 1, vec![e(0, 0), e(1, 0)]).unwrap();
        let m = Matching::from_edges(vec![e(0, 0), e(1, 0)]);
        let v = validate_matching(&g, &m);
        assert!(!v.is_valid());
        match v.violation.unwrap() {
            Violation::DegreeCap { vertex, .. } => assert_eq!(vertex, Vertex::b(0)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn perfect_matching_on_four_cycle() {
        let m = Matching::from_edges(vec![e(0, 0), e(1, 1)]);
        assert!(validate_matching(&four_cycle(), &m).is_valid());
    }

    #[test]
    fn foreign_edge_is_rejected() {
        let g = BipartiteGraph::new(2, 2, vec![e(0, 0)]).unwrap();
        let m = Matching::from_edges(vec![e(1, 1)]);
        assert_eq!(validate_matching(&g, &m).violation, Some(Violation::NotInGraph(e(1, 1))));
    }

    #[test]
    fn maximality_on_four_cycle() {
        let g = four_cycle();
        assert!(!is_maximal(&g, &Matching::from_edges(vec![e(0, 0)])));
        // a0b1 blocks a0b0 and a1b1 but a1b0 stays addable.
        assert!(!is_maximal(&g, &Matching::from_edges(vec![e(0, 1)])));
        assert!(is_maximal(&g, &Matching::from_edges(vec![e(0, 1), e(1, 0)])));
    }

    #[test]
    fn duplicates_and_range_rejected() {
        assert!(matches!(
            BipartiteGraph::new(1, 1, vec![e(0, 0), e(0, 0)]),
            Err(GraphError::Duplicate { first: 0, second: 1, .. })
        ));
        assert!(matches!(
            BipartiteGraph::new(1, 1, vec![e(0, 1)]),
            Err(GraphError::OutOfRange { index: 0, .. })
        ));
    }

    #[test]
    fn semi_matching_caps() {
        let s = SemiMatching::from_edges(Side::A, 2, vec![e(0, 0), e(1, 0)]);
        assert!(s.check().is_ok());
        let s = SemiMatching::from_edges(Side::A, 2, vec![e(0, 0), e(1, 0), e(2, 0)]);
        assert!(s.check().is_err());
        let s = SemiMatching::from_edges(Side::A, 2, vec![e(0, 0), e(0, 1)]);
        assert!(s.check().is_err());
        let s = SemiMatching::from_edges(Side::B, 2, vec![e(0, 0), e(0, 1)]);
        assert!(s.check().is_ok());
    }
}
