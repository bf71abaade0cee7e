use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamsError {
    #[error("(m={m}, k={k}) is not a valid colouring lattice point: {reason}; nearest valid: {}", fmt_pairs(.nearest))]
    OffLattice { m: u32, k: u32, reason: &'static str, nearest: Vec<(u32, u32)> },
}

fn fmt_pairs(v: &[(u32, u32)]) -> String {
    v.iter().map(|(m, k)| format!("(m={m}, k={k})")).collect::<Vec<_>>().join(", ")
}

/// Dimension `m` and white-strip width `k = δm/6`.
///
/// The strips `R`, `W`, `B`, `W'` have widths `m/3`, `k`, `m/3`, `k`, so the
/// period is `w = 2m/3 + 2k = (2+δ)m/3`. The shift `2/δ + 1 = m/(3k) + 1` must
/// be an integer, which confines `(m, k)` to `3 | m` and `k | m/3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ColouringParams {
    m: u32,
    k: u32,
}

fn valid(m: u32, k: u32) -> Result<(), &'static str> {
    if m == 0 || !m.is_multiple_of(3) {
        return Err("m must be a positive multiple of 3");
    }
    if k == 0 || k > m {
        return Err("k must lie in 1..=m");
    }
    if !(m / 3).is_multiple_of(k) {
        return Err("2/δ = m/(3k) must be an integer");
    }
    Ok(())
}

impl ColouringParams {
    pub fn new(m: u32, k: u32) -> Result<Self, ParamsError> {
        valid(m, k).map_err(|reason| ParamsError::OffLattice { m, k, reason, nearest: nearest_valid(m, k) })?;
        Ok(ColouringParams { m, k })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// `δ = 6k/m`.
    pub fn delta(&self) -> f64 {
        6.0 * self.k as f64 / self.m as f64
    }

    /// Width of a red or blue strip, `m/3`.
    pub fn strip(&self) -> u32 {
        self.m / 3
    }

    /// Period of the colouring, `w = 2m/3 + 2k`.
    pub fn w(&self) -> u32 {
        2 * self.m / 3 + 2 * self.k
    }

    /// `2/δ + 1`.
    pub fn shift(&self) -> u32 {
        self.m / (3 * self.k) + 1
    }

    /// Coordinates range over `0..m²`.
    pub fn radix(&self) -> u64 {
        self.m as u64 * self.m as u64
    }

    /// `N = m^{2m}`, or `None` if it overflows `u64`.
    pub fn n_vertices(&self) -> Option<u64> {
        self.radix().checked_pow(self.m)
    }

    /// Largest allowed pairwise intersection in the index family,
    /// `⌊(5δ/12)·k⌋ = ⌊5k²/(2m)⌋`.
    pub fn intersection_threshold(&self) -> u32 {
        (5 * self.k * self.k) / (2 * self.m)
    }

    /// `(1 − 2δ)`, the asymptotic near-perfect coverage. Negative at coarse δ.
    pub fn near_perfect_target(&self) -> f64 {
        1.0 - 2.0 * self.delta()
    }
}

impl fmt::Display for ColouringParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m={} k={} δ={:.4} w={} shift={}", self.m, self.k, self.delta(), self.w(), self.shift())
    }
}

fn nearest_valid(m: u32, k: u32) -> Vec<(u32, u32)> {
    let lo = m.saturating_sub(12).max(3);
    let mut cands: Vec<(u64, u32, u32)> = Vec::new();
    for mm in (lo..=m + 12).filter(|x| x % 3 == 0) {
        for kk in 1..=mm / 3 {
            if valid(mm, kk).is_ok() {
                let dist = (mm as i64 - m as i64).unsigned_abs() + (kk as i64 - k as i64).unsigned_abs();
                cands.push((dist, mm, kk));
            }
        }
    }
    cands.sort_unstable();
    cands.into_iter().take(3).map(|(_, m, k)| (m, k)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_lattice_point() {
        let p = ColouringParams::new(3, 1).unwrap();
        assert_eq!(p.delta(), 2.0);
        assert_eq!(p.w(), 4);
        assert_eq!(p.shift(), 2);
        assert_eq!(p.n_vertices(), Some(729));
        assert_eq!(p.intersection_threshold(), 0);
    }

    #[test]
    fn w_matches_formula() {
        for (m, k) in [(3, 1), (6, 1), (6, 2), (12, 2), (12, 4), (30, 5)] {
            let p = ColouringParams::new(m, k).unwrap();
            let w = (2.0 + p.delta()) * m as f64 / 3.0;
            assert!((w - p.w() as f64).abs() < 1e-9);
            assert!((2.0 / p.delta() + 1.0 - p.shift() as f64).abs() < 1e-9);
            // shift * k spans one red/white gap: m/3 + k.
            assert_eq!(p.shift() * p.k(), p.strip() + p.k());
        }
    }

    #[test]
    fn off_lattice_rejected_with_suggestions() {
        for (m, k) in [(4, 1), (6, 4), (9, 2), (0, 1), (3, 0)] {
            match ColouringParams::new(m, k) {
                Err(ParamsError::OffLattice { nearest, .. }) => {
                    assert!(!nearest.is_empty());
                    for (mm, kk) in nearest {
                        assert!(ColouringParams::new(mm, kk).is_ok());
                    }
                }
                Ok(_) => panic!("({m}, {k}) accepted"),
            }
        }
    }

    #[test]
    fn huge_n_reports_overflow() {
        assert_eq!(ColouringParams::new(30, 5).unwrap().n_vertices(), None);
    }
}
