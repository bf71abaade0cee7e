use crate::graph::{Edge, SemiMatching, Side};
use crate::stream::{EdgeSource, EdgeStream, KeepSet, SpaceAccountant, StreamError};

/// Online state of `Greedy_d`: edge `uv` (u on the degree-1 side) is kept iff
/// `deg(u) = 0` and `deg(v) < d`.
#[derive(Debug, Clone)]
pub struct SemiMatcher {
    one_side: Side,
    d: u32,
    taken: Vec<bool>,
    load: Vec<u32>,
    out: SemiMatching,
}

impl SemiMatcher {
    pub fn new(n_a: u32, n_b: u32, one_side: Side, d: u32) -> Self {
        assert!(d >= 1, "degree bound must be at least 1");
        let (n_one, n_many) = match one_side {
            Side::A => (n_a, n_b),
            Side::B => (n_b, n_a),
        };
        SemiMatcher {
            one_side,
            d,
            taken: vec![false; n_one as usize],
            load: vec![0; n_many as usize],
            out: SemiMatching::new(one_side, d),
        }
    }

    #[inline]
    pub fn offer(&mut self, e: Edge, space: &SpaceAccountant) -> bool {
        let (u, v) = match self.one_side {
            Side::A => (e.a as usize, e.b as usize),
            Side::B => (e.b as usize, e.a as usize),
        };
        if self.taken[u] || self.load[v] >= self.d {
            return false;
        }
        self.taken[u] = true;
        self.load[v] += 1;
        self.out.push(e);
        space.store(1);
        true
    }

    /// Whether `e` could still be added without breaking a cap.
    pub fn admits(&self, e: Edge) -> bool {
        let (u, v) = match self.one_side {
            Side::A => (e.a as usize, e.b as usize),
            Side::B => (e.b as usize, e.a as usize),
        };
        !self.taken[u] && self.load[v] < self.d
    }

    pub fn len(&self) -> usize {
        self.out.len()
    }

    pub fn is_empty(&self) -> bool {
        self.out.is_empty()
    }

    pub fn finish(self) -> SemiMatching {
        self.out
    }
}

/// One pass of `Greedy_d` over the whole stream.
pub fn greedy_d<S: EdgeSource + ?Sized>(
    stream: &mut EdgeStream<'_, S>,
    one_side: Side,
    d: u32,
) -> Result<SemiMatching, StreamError> {
    let mut state = SemiMatcher::new(stream.n_a(), stream.n_b(), one_side, d);
    let pass = stream.begin_pass()?;
    let space = pass.space();
    pass.for_each(|e| {
        state.offer(e, space);
    });
    Ok(state.finish())
}

/// One pass of `Greedy_d` over the substream of `G[keep]`.
pub fn greedy_d_filtered<S: EdgeSource + ?Sized>(
    stream: &mut EdgeStream<'_, S>,
    keep: &KeepSet,
    one_side: Side,
    d: u32,
) -> Result<SemiMatching, StreamError> {
    let mut state = SemiMatcher::new(stream.n_a(), stream.n_b(), one_side, d);
    let view = stream.begin_pass()?.filtered(keep);
    let space = view.space();
    view.for_each(|e| {
        state.offer(e, space);
    });
    Ok(state.finish())
}
