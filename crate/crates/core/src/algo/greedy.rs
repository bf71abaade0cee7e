use crate::graph::{Edge, Matching};
use crate::stream::{EdgeSource, EdgeStream, SpaceAccountant, StreamError};

const FREE: u32 = u32::MAX;

/// Online state of the greedy matching: an edge is kept iff both endpoints
/// are still free when it arrives.
#[derive(Debug, Clone)]
pub struct GreedyMatcher {
    mate_a: Vec<u32>,
    mate_b: Vec<u32>,
    edges: Vec<Edge>,
}

impl GreedyMatcher {
    pub fn new(n_a: u32, n_b: u32) -> Self {
        GreedyMatcher {
            mate_a: vec![FREE; n_a as usize],
            mate_b: vec![FREE; n_b as usize],
            edges: Vec::new(),
        }
    }

    /// Offers one edge; returns whether it was taken.
    #[inline]
    pub fn offer(&mut self, e: Edge, space: &SpaceAccountant) -> bool {
        if self.mate_a[e.a as usize] != FREE || self.mate_b[e.b as usize] != FREE {
            return false;
        }
        self.mate_a[e.a as usize] = e.b;
        self.mate_b[e.b as usize] = e.a;
        self.edges.push(e);
        space.store(1);
        true
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn finish(self) -> Matching {
        Matching::from_edges(self.edges)
    }
}

/// One pass of greedy matching. The result is maximal in the streamed graph.
pub fn greedy<S: EdgeSource + ?Sized>(stream: &mut EdgeStream<'_, S>) -> Result<Matching, StreamError> {
    let mut state = GreedyMatcher::new(stream.n_a(), stream.n_b());
    let pass = stream.begin_pass()?;
    let space = pass.space();
    pass.for_each(|e| {
        state.offer(e, space);
    });
    Ok(state.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_maximal, BipartiteGraph};
    use crate::stream::open_stream;

    #[test]
    fn middle_edge_first_gives_half() {
        // b0 - a0 - b1 - a1, the middle edge a0b1 arrives first.
        let g = BipartiteGraph::new(2, 2, vec![Edge::new(0, 1), Edge::new(0, 0), Edge::new(1, 1)]).unwrap();
        let mut s = open_stream(&g);
        let m = greedy(&mut s).unwrap();
        assert_eq!(m.edges(), &[Edge::new(0, 1)]);
        assert!(is_maximal(&g, &m));
        assert_eq!(crate::oracle::maximum_matching(&g).len(), 2);
    }

    #[test]
    fn four_cycle_bad_edge_first() {
        let g = BipartiteGraph::new(2, 2, vec![Edge::new(0, 1), Edge::new(0, 0), Edge::new(1, 1), Edge::new(1, 0)])
            .unwrap();
        let m = greedy(&mut open_stream(&g)).unwrap();
        assert_eq!(m.edges(), &[Edge::new(0, 1), Edge::new(1, 0)]);
    }

    #[test]
    fn accounts_stored_edges() {
        let g = BipartiteGraph::new(3, 3, vec![Edge::new(0, 0), Edge::new(1, 0), Edge::new(1, 1)]).unwrap();
        let mut s = open_stream(&g);
        let m = greedy(&mut s).unwrap();
        assert_eq!(m.len(), 2);
        assert_eq!(s.space().peak(), 2);
        assert_eq!(s.passes_used(), 1);
    }
}
