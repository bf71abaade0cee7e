//! Two-pass semi-streaming maximum bipartite matching.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`], [`io`], [`oracle`]: bipartite graphs, the text format and an
//!   exact maximum-matching oracle.
//! * [`stream`]: pass-counted edge streams and stored-edge accounting.
//! * [`algo`]: greedy matching, `Greedy_d` semi-matchings, the augmenting-path
//!   second pass, the two-pass driver and the predicted approximation factor.
//! * [`instances`]: the worst-case instance for the second pass and random
//!   planted instances.
//! * [`rs`]: Ruzsa-Szemerédi graphs with near-perfect matchings, their
//!   certification, and the communication-game input distributions built on
//!   them.

pub mod algo;
pub mod graph;
pub mod instances;
pub mod io;
pub mod oracle;
pub mod rs;
pub mod stream;

pub use algo::{
    find_augmenting_paths, greedy, greedy_d, predicted_factor, subsample, two_pass, MetaParams, PathSet,
    RunReport,
};
pub use graph::{is_maximal, validate_matching, BipartiteGraph, Edge, Matching, SemiMatching, Side, Vertex};
pub use oracle::maximum_matching;
pub use stream::{open_stream, report_space, EdgeSource, EdgeStream, KeepSet, SpaceAccountant};
