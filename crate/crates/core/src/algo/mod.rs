//! The streaming matching algorithms.

mod augment;
mod factor;
mod greedy;
mod greedy_d;
mod params;
mod two_pass;

pub use augment::{find_augmenting_paths, AugmentError, AugmentingPath, PathSet, SecondPass};
pub use factor::{optimal_p, predicted_factor, predicted_gain, FACTOR_BREAK};
pub use greedy::{greedy, GreedyMatcher};
pub use greedy_d::{greedy_d, greedy_d_filtered, SemiMatcher};
pub use params::{subsample, MetaParams, ParamError};
pub use two_pass::{augment, run_two_pass, two_pass, MuSource, RunReport, TwoPassRun};
