//! Text sidecar describing how a graph file splits into an RS instance.
//!
//! ```text
//! # rs manifest
//! params 3 1
//! n 729
//! set 0 0
//! matching 0 M 0 162
//! matching 0 M' 162 162
//! verdict edge-disjoint pass 0
//! ```
//!
//! `matching` lines give the set index, which half of the pair, and the
//! offset and length of its edges in the graph file. `verdict` lines carry a
//! check name, its outcome and how many violations were found.

use std::io::{self, BufRead, Write};

use thiserror::Error;

use super::certify::CertificateReport;
use super::instance::{MatchingId, RsError, RsInstance};
use super::params::{ColouringParams, ParamsError};
use crate::graph::{BipartiteGraph, Matching};

#[derive(Debug, Error)]
pub enum ManifestError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("manifest has no `{0}` line")]
    Missing(&'static str),
    #[error("matching {id} spans edges {offset}..{end} but the graph has {edges}")]
    Span { id: MatchingId, offset: usize, end: usize, edges: usize },
    #[error("graph has {found} vertices per side, manifest says {expected}")]
    VertexCount { expected: u32, found: u32 },
    #[error(transparent)]
    Params(#[from] ParamsError),
    #[error(transparent)]
    Rs(#[from] RsError),
    #[error(transparent)]
    Io(#[from] io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ManifestMatching {
    pub id: MatchingId,
    pub offset: usize,
    pub len: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Manifest {
    pub params: ColouringParams,
    pub n: u32,
    pub family: Vec<Vec<u32>>,
    pub matchings: Vec<ManifestMatching>,
    /// `(check, passed, violations)`; empty when never certified.
    pub verdicts: Vec<(String, bool, usize)>,
}

fn verdicts(c: &CertificateReport) -> Vec<(String, bool, usize)> {
    [
        ("edge-disjoint", c.shared_edges.len()),
        ("valid-matchings", c.invalid_matchings.len()),
        ("valid-unions", c.invalid_unions.len()),
        ("equal-sizes", c.size_mismatches.len()),
        ("induced", c.induced.len()),
        ("cross", c.cross.len()),
    ]
    .into_iter()
    .map(|(name, count)| (name.to_string(), count == 0, count))
    .collect()
}

impl Manifest {
    /// Describes `inst` laid out as by [`RsInstance::union_graph`].
    pub fn of(inst: &RsInstance) -> Manifest {
        let mut offset = 0;
        let matchings = inst
            .matchings()
            .map(|(id, m)| {
                let mm = ManifestMatching { id, offset, len: m.len() };
                offset += m.len();
                mm
            })
            .collect();
        Manifest {
            params: *inst.params(),
            n: inst.n(),
            family: inst.family().to_vec(),
            matchings,
            verdicts: inst.certificate().map(verdicts).unwrap_or_default(),
        }
    }

    pub fn passed(&self) -> Option<bool> {
        (!self.verdicts.is_empty()).then(|| self.verdicts.iter().all(|v| v.1))
    }

    /// Cuts `graph` back into matchings. The result is uncertified.
    pub fn instance(&self, graph: &BipartiteGraph) -> Result<RsInstance, ManifestError> {
        if graph.n_a() != self.n || graph.n_b() != self.n {
            return Err(ManifestError::VertexCount { expected: self.n, found: graph.n_a().max(graph.n_b()) });
        }
        let edges = graph.edges();
        let mut pairs = vec![(Matching::new(), Matching::new()); self.family.len()];
        for mm in &self.matchings {
            let end = mm.offset + mm.len;
            if end > edges.len() || mm.id.set >= self.family.len() {
                return Err(ManifestError::Span { id: mm.id, offset: mm.offset, end, edges: edges.len() });
            }
            let m = Matching::from_edges(edges[mm.offset..end].to_vec());
            let slot = &mut pairs[mm.id.set];
            if mm.id.mirrored {
                slot.1 = m;
            } else {
                slot.0 = m;
            }
        }
        Ok(RsInstance::from_parts(self.params, self.n, self.family.clone(), pairs)?)
    }
}

pub fn write_manifest<W: Write>(mut w: W, man: &Manifest) -> io::Result<()> {
    writeln!(w, "# rs manifest")?;
    writeln!(w, "params {} {}", man.params.m(), man.params.k())?;
    writeln!(w, "n {}", man.n)?;
    for (i, set) in man.family.iter().enumerate() {
        let s: Vec<String> = set.iter().map(u32::to_string).collect();
        writeln!(w, "set {} {}", i, s.join(","))?;
    }
    for m in &man.matchings {
        let half = if m.id.mirrored { "M'" } else { "M" };
        writeln!(w, "matching {} {} {} {}", m.id.set, half, m.offset, m.len)?;
    }
    for (name, ok, count) in &man.verdicts {
        writeln!(w, "verdict {} {} {}", name, if *ok { "pass" } else { "fail" }, count)?;
    }
    Ok(())
}

pub fn read_manifest<R: BufRead>(r: R) -> Result<Manifest, ManifestError> {
    let mut params = None;
    let mut n = None;
    let mut family: Vec<Vec<u32>> = Vec::new();
    let mut matchings = Vec::new();
    let mut verdicts = Vec::new();

    for (i, line) in r.lines().enumerate() {
        let line = line?;
        let lineno = i + 1;
        let bad = |msg: &str| ManifestError::Syntax { line: lineno, msg: msg.to_string() };
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let f: Vec<&str> = t.split_whitespace().collect();
        let num = |s: &str| s.parse::<usize>().map_err(|_| bad(&format!("expected a number, got `{s}`")));
        match (f[0], f.len()) {
            ("params", 3) => {
                params = Some(ColouringParams::new(num(f[1])? as u32, num(f[2])? as u32)?);
            }
            ("n", 2) => n = Some(num(f[1])? as u32),
            ("set", 3) => {
                if num(f[1])? != family.len() {
                    return Err(bad("set indices must be consecutive from 0"));
                }
                let set = f[2].split(',').map(|s| num(s).map(|v| v as u32)).collect::<Result<_, _>>()?;
                family.push(set);
            }
            ("matching", 5) => {
                let mirrored = match f[2] {
                    "M" => false,
                    "M'" => true,
                    other => return Err(bad(&format!("expected M or M', got `{other}`"))),
                };
                matchings.push(ManifestMatching {
                    id: MatchingId { set: num(f[1])?, mirrored },
                    offset: num(f[3])?,
                    len: num(f[4])?,
                });
            }
            ("verdict", 4) => {
                let ok = match f[2] {
                    "pass" => true,
                    "fail" => false,
                    other => return Err(bad(&format!("expected pass or fail, got `{other}`"))),
                };
                verdicts.push((f[1].to_string(), ok, num(f[3])?));
            }
            _ => return Err(bad(&format!("unrecognized line `{t}`"))),
        }
    }
    Ok(Manifest {
        params: params.ok_or(ManifestError::Missing("params"))?,
        n: n.ok_or(ManifestError::Missing("n"))?,
        family,
        matchings,
        verdicts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_rebuild() {
        let mut inst = RsInstance::build(ColouringParams::new(3, 1).unwrap()).unwrap();
        inst.certify();
        let man = Manifest::of(&inst);
        assert_eq!(man.passed(), Some(true));
        let mut buf = Vec::new();
        write_manifest(&mut buf, &man).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.contains("matching 0 M' 162 162"));
        let back = read_manifest(text.as_bytes()).unwrap();
        assert_eq!(back, man);

        let g = inst.union_graph().unwrap();
        let mut rebuilt = back.instance(&g).unwrap();
        assert_eq!(rebuilt.pairs(), inst.pairs());
        assert!(rebuilt.certify().passed());
    }

    #[test]
    fn syntax_errors_name_the_line() {
        let err = read_manifest("params 3 1\nn x\n".as_bytes()).unwrap_err();
        assert!(matches!(err, ManifestError::Syntax { line: 2, .. }));
        assert!(matches!(read_manifest("n 3\n".as_bytes()), Err(ManifestError::Missing("params"))));
    }
}
