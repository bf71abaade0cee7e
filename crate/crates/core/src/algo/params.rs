use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::Matching;

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum ParamError {
    #[error("sampling probability must lie in (0, 1], got {0}")]
    Probability(f64),
    #[error("degree bound must be a positive integer, got {0}")]
    DegreeBound(u32),
}

pub(crate) fn check_p(p: f64) -> Result<(), ParamError> {
    if p > 0.0 && p <= 1.0 {
        Ok(())
    } else {
        Err(ParamError::Probability(p))
    }
}

pub(crate) fn check_d(d: u32) -> Result<(), ParamError> {
    if d >= 1 {
        Ok(())
    } else {
        Err(ParamError::DegreeBound(d))
    }
}

/// Sampling probability `p`, degree bound `d` and the PRNG seed of one run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetaParams {
    p: f64,
    d: u32,
    seed: u64,
}

impl MetaParams {
    pub fn new(p: f64, d: u32, seed: u64) -> Result<Self, ParamError> {
        check_p(p)?;
        check_d(d)?;
        Ok(MetaParams { p, d, seed })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn with_seed(self, seed: u64) -> Self {
        MetaParams { seed, ..self }
    }
}

/// Keeps each edge of `m` independently with probability `p`, in edge order,
/// driven by a ChaCha8 generator seeded with `seed`.
pub fn subsample(m: &Matching, p: f64, seed: u64) -> Result<Matching, ParamError> {
    check_p(p)?;
    if p == 1.0 {
        return Ok(m.clone());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(m.edges().iter().copied().filter(|_| rng.gen_bool(p)).collect())
}
