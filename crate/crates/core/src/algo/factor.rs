//! Predicted approximation factor of the two-pass algorithm as a function of
//! the sampling probability `p` and degree bound `d`.

use super::params::{check_d, check_p, ParamError};

/// `√2 − 1`, the breakpoint of the factor curve for `d = 1`.
pub const FACTOR_BREAK: f64 = std::f64::consts::SQRT_2 - 1.0;

/// The guaranteed gain over `1/2`.
///
/// For `p ≤ d(√2 − 1)` the worst first-pass matching is exactly maximal
/// (`ε = 0`) and the gain is `(1/(d+p) − 1/(2d))·p`; beyond the breakpoint the
/// adversary's best `ε` is `(d−p)/(6d+2p)`, which is also the gain.
pub fn predicted_gain(p: f64, d: u32) -> Result<f64, ParamError> {
    check_p(p)?;
    check_d(d)?;
    let d = d as f64;
    Ok(if p <= d * FACTOR_BREAK {
        (1.0 / (d + p) - 1.0 / (2.0 * d)) * p
    } else {
        (d - p) / (6.0 * d + 2.0 * p)
    })
}

/// `1/2 + predicted_gain(p, d)`.
pub fn predicted_factor(p: f64, d: u32) -> Result<f64, ParamError> {
    Ok(0.5 + predicted_gain(p, d)?)
}

/// The maximizing `p` for a given `d`: `min(d(√2 − 1), 1)`.
pub fn optimal_p(d: u32) -> Result<f64, ParamError> {
    check_d(d)?;
    Ok((d as f64 * FACTOR_BREAK).min(1.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    const TWO_MINUS_ROOT2: f64 = 2.0 - std::f64::consts::SQRT_2;

    #[test]
    fn headline_settings() {
        assert!((predicted_factor(FACTOR_BREAK, 1).unwrap() - TWO_MINUS_ROOT2).abs() < 1e-12);
        assert!((predicted_factor(2.0 * FACTOR_BREAK, 2).unwrap() - TWO_MINUS_ROOT2).abs() < 1e-12);
        assert!((predicted_factor(1.0, 3).unwrap() - 7.0 / 12.0).abs() < 1e-12);
        assert!((predicted_factor(1.0, 4).unwrap() - 0.575).abs() < 1e-12);
    }

    #[test]
    fn branches_meet_at_breakpoint() {
        for d in 1..=2u32 {
            let p = d as f64 * FACTOR_BREAK;
            let df = d as f64;
            let first = (1.0 / (df + p) - 1.0 / (2.0 * df)) * p;
            let second = (df - p) / (6.0 * df + 2.0 * p);
            assert!((first - second).abs() < 1e-12, "d={d}: {first} vs {second}");
            // Both equal (3 − 2√2)/2.
            assert!((first - (3.0 - 2.0 * std::f64::consts::SQRT_2) / 2.0).abs() < 1e-12);
        }
    }

    #[test]
    fn domain_checks() {
        assert!(predicted_factor(0.0, 1).is_err());
        assert!(predicted_factor(1.5, 1).is_err());
        assert!(predicted_factor(0.5, 0).is_err());
    }

    #[test]
    fn optimal_p_values() {
        assert!((optimal_p(1).unwrap() - FACTOR_BREAK).abs() < 1e-15);
        assert!((optimal_p(2).unwrap() - 2.0 * FACTOR_BREAK).abs() < 1e-15);
        assert_eq!(optimal_p(3).unwrap(), 1.0);
    }
}
