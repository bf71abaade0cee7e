//! Ruzsa-Szemerédi graphs whose induced matchings come in vertex-disjoint
//! pairs `M_I`, `M_I'` forming near-perfect matchings.
//!
//! Both vertex classes are `[m²]^m`: vectors of `m` coordinates, each in
//! `0..m²`, stored as base-`m²` integers (coordinate 0 least significant).
//! `X` is side A and `Y` is side B. A set `I` of `k` coordinates colours every
//! vector by the sum of its `I`-coordinates, and `M_I` pairs blue `X`-vectors
//! with the red `Y`-vectors obtained by subtracting the shift on `I`;
//! `M_I'` does the same from `Y` to `X`.

mod certify;
mod colour;
mod family;
mod instance;
mod lambda;
mod manifest;
mod params;

pub use certify::{certify_rs, CertificateReport, CrossViolation, InducedViolation, PairCoverage};
pub use colour::{colour_of_sum, colour_vertex, decode_vector, encode_vector, layer_sum, Colour};
pub use family::{build_family, k_subsets};
pub use instance::{build_matching_pair, MatchingId, RsError, RsInstance, DEFAULT_VERTEX_CAP};
pub use lambda::{gen_lambda, CommInstance, LambdaError, LambdaOptions};
pub use manifest::{read_manifest, write_manifest, Manifest, ManifestError, ManifestMatching};
pub use params::{ColouringParams, ParamsError};
