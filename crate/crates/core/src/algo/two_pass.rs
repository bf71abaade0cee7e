use std::collections::HashSet;

use super::augment::{find_augmenting_paths, AugmentError, PathSet, SecondPass};
use super::greedy::greedy;
use super::params::MetaParams;
use crate::graph::{BipartiteGraph, Edge, Matching};
use crate::oracle;
use crate::stream::{EdgeSource, EdgeStream};

/// Measurements of one two-pass run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub p: f64,
    pub d: u32,
    pub seed: u64,
    /// `|M|`
    pub first_pass_size: usize,
    /// `|M'|`
    pub sampled_size: usize,
    /// `(|S_L|, |S_R|)`
    pub wing_sizes: (usize, usize),
    /// `|P|`
    pub candidates: usize,
    /// `|Q|`
    pub augmentations: usize,
    pub final_size: usize,
    /// `μ(G)`, when known.
    pub mu: Option<u64>,
    /// `|M|/μ − 1/2`, when `μ` is known and positive.
    pub epsilon: Option<f64>,
    pub peak_space: u64,
    pub passes: u32,
}

impl RunReport {
    /// `final_size / μ`.
    pub fn ratio(&self) -> Option<f64> {
        self.mu.filter(|&mu| mu > 0).map(|mu| self.final_size as f64 / mu as f64)
    }

    /// The lower bound `(|S_L| + |S_R| − |M'|)/d` that `|Q|` must meet.
    pub fn path_lower_bound(&self) -> f64 {
        let (l, r) = self.wing_sizes;
        (l as f64 + r as f64 - self.sampled_size as f64) / self.d as f64
    }
}

/// How a run obtains `μ(G)` for its report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MuSource {
    /// Run the exact oracle over the source's edges.
    Oracle,
    /// Use a value certified elsewhere (e.g. by construction).
    Known(u64),
    /// Leave `μ` and `ε` unreported.
    Skip,
}

/// Full detail of a two-pass run.
#[derive(Debug, Clone)]
pub struct TwoPassRun {
    pub first_pass: Matching,
    pub second_pass: SecondPass,
    pub output: Matching,
    pub report: RunReport,
}

/// Flips every selected path: drops its middle edge, adds both wings.
pub fn augment(m: &Matching, paths: &PathSet) -> Matching {
    let middles: HashSet<Edge> = paths.selected().map(|p| p.middle).collect();
    let mut out: Matching = m.edges().iter().copied().filter(|e| !middles.contains(e)).collect();
    for p in paths.selected() {
        out.push(p.left_wing);
        out.push(p.right_wing);
    }
    out
}

/// Greedy in pass one, augmenting-path search in pass two.
pub fn run_two_pass<S: EdgeSource + ?Sized>(
    source: &S,
    params: &MetaParams,
    mu: MuSource,
) -> Result<TwoPassRun, AugmentError> {
    let mut stream = EdgeStream::open(source).with_pass_limit(2);
    let first_pass = greedy(&mut stream)?;
    let second_pass = find_augmenting_paths(&mut stream, &first_pass, params)?;
    let output = augment(&first_pass, &second_pass.paths);

    let mu = match mu {
        MuSource::Oracle => Some(oracle::matching_number(source) as u64),
        MuSource::Known(v) => Some(v),
        MuSource::Skip => None,
    };
    let epsilon = mu.filter(|&v| v > 0).map(|v| first_pass.len() as f64 / v as f64 - 0.5);
    let report = RunReport {
        p: params.p(),
        d: params.d(),
        seed: params.seed(),
        first_pass_size: first_pass.len(),
        sampled_size: second_pass.sampled.len(),
        wing_sizes: (second_pass.left.len(), second_pass.right.len()),
        candidates: second_pass.paths.candidates().len(),
        augmentations: second_pass.paths.len_selected(),
        final_size: output.len(),
        mu,
        epsilon,
        peak_space: stream.space().peak(),
        passes: stream.passes_used(),
    };
    debug_assert_eq!(report.final_size, report.first_pass_size + report.augmentations);
    Ok(TwoPassRun { first_pass, second_pass, output, report })
}

/// Two-pass run on a materialized graph, with `μ` from the exact oracle.
pub fn two_pass(g: &BipartiteGraph, params: &MetaParams) -> Result<(Matching, RunReport), AugmentError> {
    let run = run_two_pass(g, params, MuSource::Oracle)?;
    Ok((run.output, run.report))
}
