use std::fmt;

use thiserror::Error;

use super::certify::{certify_rs, CertificateReport};
use super::colour::{colour_of_sum, layer_sum, Colour};
use super::family::build_family;
use super::params::ColouringParams;
use crate::graph::{BipartiteGraph, Edge, GraphError, Matching};

/// Largest `N` per side materialized by default.
pub const DEFAULT_VERTEX_CAP: u64 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RsError {
    #[error("N = (m²)^m = {n} vertices per side exceeds the cap of {cap}")]
    TooLarge { n: String, cap: u64 },
    #[error("index set {set:?} is not a {k}-subset of 0..{m}")]
    BadIndexSet { set: Vec<u32>, m: u32, k: u32 },
    #[error("the index family is empty")]
    EmptyFamily,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Names one matching of an [`RsInstance`]: `M_I` or its mirror `M_I'`, for
/// the `set`-th index set of the family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatchingId {
    pub set: usize,
    pub mirrored: bool,
}

impl fmt::Display for MatchingId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mirrored {
            write!(f, "M'[{}]", self.set)
        } else {
            write!(f, "M[{}]", self.set)
        }
    }
}

fn vertex_count(params: &ColouringParams, cap: u64) -> Result<u32, RsError> {
    match params.n_vertices() {
        Some(n) if n <= cap && n <= u32::MAX as u64 => Ok(n as u32),
        Some(n) => Err(RsError::TooLarge { n: n.to_string(), cap }),
        None => Err(RsError::TooLarge { n: format!("({})^{}", params.radix(), params.m()), cap }),
    }
}

fn check_set(params: &ColouringParams, set: &[u32]) -> Result<(), RsError> {
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != params.k() as usize || sorted.iter().any(|&i| i >= params.m()) {
        return Err(RsError::BadIndexSet { set: set.to_vec(), m: params.m(), k: params.k() });
    }
    Ok(())
}

/// `M_I` and its mirror `M_I'`.
///
/// `M_I` joins every blue `X`-vector `b` whose `I`-coordinates are all at
/// least the shift to the `Y`-vector `b − shift·1_I`, which is red: subtracting
/// `shift·k = m/3 + k` from a blue layer sum lands in the red strip of the same
/// period. `M_I'` is the same rule from `Y` to `X`, so its edges are those of
/// `M_I` with the sides swapped.
pub fn build_matching_pair(params: &ColouringParams, set: &[u32]) -> Result<(Matching, Matching), RsError> {
    build_pair_capped(params, set, DEFAULT_VERTEX_CAP)
}

fn build_pair_capped(params: &ColouringParams, set: &[u32], cap: u64) -> Result<(Matching, Matching), RsError> {
    check_set(params, set)?;
    let n = vertex_count(params, cap)?;
    let radix = params.radix();
    let shift = params.shift() as u64;
    let offset: u64 = set.iter().map(|&i| shift * radix.pow(i)).sum();
    let mut forward = Vec::new();
    for v in 0..n as u64 {
        if colour_of_sum(params, layer_sum(params, v, set)) != Colour::Blue {
            continue;
        }
        let eligible = set.iter().all(|&i| (v / radix.pow(i)) % radix >= shift);
        if eligible {
            forward.push(Edge::new(v as u32, (v - offset) as u32));
        }
    }
    let mirrored = forward.iter().map(|e| Edge::new(e.b, e.a)).collect();
    Ok((Matching::from_edges(forward), Matching::from_edges(mirrored)))
}

/// A materialized construction: the index family and one matching pair per
/// index set, plus the certificate once computed.
#[derive(Debug, Clone)]
pub struct RsInstance {
    params: ColouringParams,
    n: u32,
    family: Vec<Vec<u32>>,
    pairs: Vec<(Matching, Matching)>,
    certificate: Option<CertificateReport>,
}

impl RsInstance {
    /// Builds the family greedily at the default intersection threshold, then
    /// every matching pair.
    pub fn build(params: ColouringParams) -> Result<Self, RsError> {
        Self::build_capped(params, DEFAULT_VERTEX_CAP)
    }

    pub fn build_capped(params: ColouringParams, vertex_cap: u64) -> Result<Self, RsError> {
        let family = build_family(params.m(), params.k(), params.intersection_threshold());
        Self::with_family(params, family, vertex_cap)
    }

    pub fn with_family(params: ColouringParams, family: Vec<Vec<u32>>, vertex_cap: u64) -> Result<Self, RsError> {
        if family.is_empty() {
            return Err(RsError::EmptyFamily);
        }
        let n = vertex_count(&params, vertex_cap)?;
        let pairs = family
            .iter()
            .map(|set| build_pair_capped(&params, set, vertex_cap))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(RsInstance { params, n, family, pairs, certificate: None })
    }

    /// Reassembles an instance from stored parts (e.g. a manifest). The
    /// matchings are taken as given; only [`RsInstance::certify`] vouches for
    /// them.
    pub fn from_parts(
        params: ColouringParams,
        n: u32,
        family: Vec<Vec<u32>>,
        pairs: Vec<(Matching, Matching)>,
    ) -> Result<Self, RsError> {
        if family.is_empty() {
            return Err(RsError::EmptyFamily);
        }
        for set in &family {
            check_set(&params, set)?;
        }
        assert_eq!(family.len(), pairs.len(), "one matching pair per index set");
        Ok(RsInstance { params, n, family, pairs, certificate: None })
    }

    pub fn params(&self) -> &ColouringParams {
        &self.params
    }

    /// Vertices per side.
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn family(&self) -> &[Vec<u32>] {
        &self.family
    }

    pub fn pairs(&self) -> &[(Matching, Matching)] {
        &self.pairs
    }

    pub fn matching(&self, id: MatchingId) -> &Matching {
        let (m, mm) = &self.pairs[id.set];
        if id.mirrored {
            mm
        } else {
            m
        }
    }

    /// Every matching in order `M[0], M'[0], M[1], M'[1], …`.
    pub fn matchings(&self) -> impl Iterator<Item = (MatchingId, &Matching)> + '_ {
        self.pairs.iter().enumerate().flat_map(|(set, (m, mm))| {
            [(MatchingId { set, mirrored: false }, m), (MatchingId { set, mirrored: true }, mm)]
        })
    }

    /// The union of all matchings, edges grouped by matching in
    /// [`RsInstance::matchings`] order. Fails if two matchings share an edge.
    pub fn union_graph(&self) -> Result<BipartiteGraph, RsError> {
        let edges = self.matchings().flat_map(|(_, m)| m.edges().iter().copied()).collect();
        Ok(BipartiteGraph::new(self.n, self.n, edges)?)
    }

    /// Runs (or reruns) certification and stores the result.
    pub fn certify(&mut self) -> &CertificateReport {
        self.certificate = Some(certify_rs(self));
        self.certificate.as_ref().unwrap()
    }

    pub fn certificate(&self) -> Option<&CertificateReport> {
        self.certificate.as_ref()
    }

    pub fn is_certified(&self) -> bool {
        self.certificate.as_ref().is_some_and(|c| c.passed())
    }
}
