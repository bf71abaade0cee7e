use std::collections::HashMap;

use super::colour::{colour_of_sum, layer_sum, Colour};
use super::instance::{MatchingId, RsInstance};
use crate::graph::{Edge, Matching, Violation};

/// An edge of the union graph with both endpoints in `V(matching)` that does
/// not belong to `matching`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InducedViolation {
    pub matching: MatchingId,
    pub offending: Edge,
    /// The matching `offending` came from.
    pub owner: MatchingId,
}

/// An edge of `edge_owner` whose endpoints carry the colours of
/// `witness`'s vertex classes under `witness`'s index set: blue `X` and red
/// `Y` for `M_J`, red `X` and blue `Y` for `M_J'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossViolation {
    pub edge_owner: MatchingId,
    pub witness: MatchingId,
    pub edge: Edge,
}

/// How much of each side `M_I ∪ M_I'` covers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairCoverage {
    pub set: usize,
    /// `|M_I| + |M_I'|`
    pub size: usize,
    /// `size / N`
    pub fraction: f64,
    /// `1 − 2δ`, often negative at small `m`.
    pub target: f64,
}

impl PairCoverage {
    pub fn meets_target(&self) -> bool {
        self.fraction >= self.target
    }
}

/// Outcome of [`certify_rs`]. Each list holds every violation found.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct CertificateReport {
    pub matchings_checked: usize,
    /// Edges appearing in two matchings, with both owners.
    pub shared_edges: Vec<(Edge, MatchingId, MatchingId)>,
    pub invalid_matchings: Vec<(MatchingId, Violation)>,
    /// Index sets whose `M_I ∪ M_I'` is not vertex-disjoint.
    pub invalid_unions: Vec<(usize, Violation)>,
    /// Index sets with `|M_I'| ≠ |M_I|`.
    pub size_mismatches: Vec<usize>,
    pub induced: Vec<InducedViolation>,
    pub cross: Vec<CrossViolation>,
    pub coverage: Vec<PairCoverage>,
}

impl CertificateReport {
    /// True when every structural check came back clean. Coverage is a
    /// measurement and never fails the certificate.
    pub fn passed(&self) -> bool {
        self.shared_edges.is_empty()
            && self.invalid_matchings.is_empty()
            && self.invalid_unions.is_empty()
            && self.size_mismatches.is_empty()
            && self.induced.is_empty()
            && self.cross.is_empty()
    }

    pub fn edge_disjoint(&self) -> bool {
        self.shared_edges.is_empty()
    }

    pub fn all_induced(&self) -> bool {
        self.induced.is_empty()
    }

    pub fn min_coverage(&self) -> Option<f64> {
        self.coverage.iter().map(|c| c.fraction).min_by(f64::total_cmp)
    }
}

/// Checks every structural claim about `inst` by brute force.
pub fn certify_rs(inst: &RsInstance) -> CertificateReport {
    let n = inst.n() as usize;
    let all: Vec<(MatchingId, &Matching)> = inst.matchings().collect();
    let mut report = CertificateReport { matchings_checked: all.len(), ..Default::default() };

    let mut owner: HashMap<Edge, MatchingId> = HashMap::new();
    for &(id, m) in &all {
        for &e in m.edges() {
            if let Some(&first) = owner.get(&e) {
                report.shared_edges.push((e, first, id));
            } else {
                owner.insert(e, id);
            }
        }
        if let Err(v) = m.check() {
            report.invalid_matchings.push((id, v));
        }
    }

    for (set, (m, mm)) in inst.pairs().iter().enumerate() {
        if m.len() != mm.len() {
            report.size_mismatches.push(set);
        }
        let union: Matching = m.edges().iter().chain(mm.edges()).copied().collect();
        if let Err(v) = union.check() {
            report.invalid_unions.push((set, v));
        }
        let size = m.len() + mm.len();
        report.coverage.push(PairCoverage {
            set,
            size,
            fraction: size as f64 / n as f64,
            target: inst.params().near_perfect_target(),
        });
    }

    // G[V(M)] must contain exactly M. Shared edges are reported above, so an
    // edge counts against M only when it is not one of M's own.
    let mut in_a = vec![false; n];
    let mut in_b = vec![false; n];
    for &(id, m) in &all {
        for e in m.edges() {
            in_a[e.a as usize] = true;
            in_b[e.b as usize] = true;
        }
        let own = m.edge_set();
        for &(other, om) in &all {
            if other == id {
                continue;
            }
            for &e in om.edges() {
                if in_a[e.a as usize] && in_b[e.b as usize] && !own.contains(&e) {
                    report.induced.push(InducedViolation { matching: id, offending: e, owner: other });
                }
            }
        }
        for e in m.edges() {
            in_a[e.a as usize] = false;
            in_b[e.b as usize] = false;
        }
    }

    // Colour-level version of the same claim: under the witness's index set,
    // no other matching may run between the witness's two colour classes.
    let params = inst.params();
    for &(witness, _) in &all {
        let set = &inst.family()[witness.set];
        let (want_x, want_y) = if witness.mirrored {
            (Colour::Red, Colour::Blue)
        } else {
            (Colour::Blue, Colour::Red)
        };
        for &(edge_owner, om) in &all {
            if edge_owner == witness {
                continue;
            }
            for &e in om.edges() {
                let cx = colour_of_sum(params, layer_sum(params, e.a as u64, set));
                let cy = colour_of_sum(params, layer_sum(params, e.b as u64, set));
                if cx == want_x && cy == want_y {
                    report.cross.push(CrossViolation { edge_owner, witness, edge: e });
                }
            }
        }
    }

    report
}
