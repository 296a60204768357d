//! Airy functions Ai, Bi and their first derivatives on the real line.
//!
//! Three independent routes are provided:
//!
//! * [`airy_series`]: the Maclaurin expansion `Ai = c1 f - c2 g`,
//!   `Bi = sqrt(3) (c1 f + c2 g)` with the auxiliary series [`series_f`] and
//!   [`series_g`];
//! * [`airy_bessel`]: modified Bessel functions of order `±1/3`, positive
//!   axis only;
//! * [`airy_asymptotic_pos`], [`airy_asymptotic_neg`] and
//!   [`bi_asymptotic_neg`]: large-argument expansions.
//!
//! [`airy`] dispatches between them at `|xi| = SWITCHOVER`, except for Bi on
//! the positive axis, which hands over at `BI_SWITCHOVER`.
//!
//! The power-type series are summed in double-double arithmetic so the only
//! error left in the series route is the truncation of the stored constants
//! `c1`, `c2` to 15 decimals. That error is itself a solution of the Airy
//! equation, so derivative-based checks see a smooth function.

mod asymptotic;
mod bessel;
mod series;

pub use asymptotic::{
    airy_asymptotic_neg, airy_asymptotic_pos, asymptotic_coefficient, bi_asymptotic_neg,
};
pub use bessel::{airy_bessel, bessel_i};
pub use series::{airy_series, series_coefficients, series_f, series_g, SeriesFamily};

use crate::error::{Error, Result};

/// `|xi|` at which [`airy`] hands over from the power series to the
/// asymptotic expansions.
pub const SWITCHOVER: f64 = 6.0;

/// Smallest `|xi|` accepted by the asymptotic routes. Far enough below the
/// switchover that the overlap band `[SWITCHOVER - 1, SWITCHOVER + 1]`, and
/// difference stencils around its ends, can be checked against the series.
pub const ASYMPTOTIC_MIN: f64 = SWITCHOVER - 1.5;

/// Bi on the positive axis stays on the series up to this point. At
/// `SWITCHOVER` the optimally truncated expansion of Bi still carries a
/// relative error near `exp(-2 zeta) ~ 1e-10`; by 12 it is below rounding.
pub const BI_SWITCHOVER: f64 = 12.0;

/// Branch taken by the hybrid evaluator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Branch {
    Series,
    AsymptoticPos,
    AsymptoticNeg,
}

/// How a value was computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    Series,
    Bessel,
    AsymptoticPos,
    AsymptoticNeg,
    /// Produced by [`airy`]; carries the branch actually used.
    Hybrid(Branch),
}

/// Ai or Bi at one point, with its first derivative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AiryValue {
    pub value: f64,
    pub derivative: f64,
    pub route: Route,
    /// Estimated absolute error of `value`. Always finite and non-negative.
    pub est_error: f64,
}

impl AiryValue {
    fn new(value: f64, derivative: f64, route: Route, est_error: f64) -> AiryValue {
        let est_error = if est_error.is_finite() {
            est_error.abs()
        } else {
            f64::MAX
        };
        AiryValue {
            value,
            derivative,
            route,
            est_error,
        }
    }

    fn rerouted(self, route: Route) -> AiryValue {
        AiryValue { route, ..self }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AsymptoticTruncation {
    /// Stop before the first term larger than its predecessor, or once a
    /// term drops below `abs_tol`.
    OptimalTruncation,
    /// Sum exactly this many terms.
    FixedK(usize),
}

/// Truncation policy shared by every series in this module.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesConfig {
    abs_tol: f64,
    max_terms: usize,
    asym_truncation: AsymptoticTruncation,
}

impl SeriesConfig {
    pub fn new(
        abs_tol: f64,
        max_terms: usize,
        asym_truncation: AsymptoticTruncation,
    ) -> Result<SeriesConfig> {
        if !(abs_tol > 0.0 && abs_tol.is_finite()) {
            return Err(Error::Domain("abs_tol must be positive and finite"));
        }
        if max_terms == 0 {
            return Err(Error::Domain("max_terms must be at least 1"));
        }
        if asym_truncation == AsymptoticTruncation::FixedK(0) {
            return Err(Error::Domain("FixedK needs at least one term"));
        }
        Ok(SeriesConfig {
            abs_tol,
            max_terms,
            asym_truncation,
        })
    }

    pub fn abs_tol(&self) -> f64 {
        self.abs_tol
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }

    pub fn asym_truncation(&self) -> AsymptoticTruncation {
        self.asym_truncation
    }
}

impl Default for SeriesConfig {
    fn default() -> SeriesConfig {
        SeriesConfig {
            abs_tol: 1e-18,
            max_terms: 200,
            asym_truncation: AsymptoticTruncation::OptimalTruncation,
        }
    }
}

/// `c1 = Ai(0)` and `c2 = -Ai'(0)`, as 15-decimal stored values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AiryConstants {
    pub c1: f64,
    pub c2: f64,
}

impl AiryConstants {
    pub const STORED: AiryConstants = AiryConstants {
        c1: 0.355028053887817,
        c2: 0.258819403792807,
    };

    /// Half a unit in the 15th decimal: bound on `|c - c_true|` for either
    /// stored constant.
    pub const UNCERTAINTY: f64 = 5e-16;
}

impl Default for AiryConstants {
    fn default() -> AiryConstants {
        AiryConstants::STORED
    }
}

/// Hybrid evaluator: series for `|xi| < SWITCHOVER`, asymptotic expansions
/// beyond, except that Bi keeps the series up to `BI_SWITCHOVER`.
/// Returns `(Ai, Bi)`; each value records the branch it came from.
pub fn airy(xi: f64, cfg: &SeriesConfig) -> Result<(AiryValue, AiryValue)> {
    if !xi.is_finite() {
        return Err(Error::Domain("airy argument must be finite"));
    }
    if xi >= BI_SWITCHOVER {
        let (ai, bi) = airy_asymptotic_pos(xi, cfg)?;
        let route = Route::Hybrid(Branch::AsymptoticPos);
        Ok((ai.rerouted(route), bi.rerouted(route)))
    } else if xi >= SWITCHOVER {
        let (ai, _) = airy_asymptotic_pos(xi, cfg)?;
        let (_, bi) = airy_series(xi, cfg)?;
        Ok((
            ai.rerouted(Route::Hybrid(Branch::AsymptoticPos)),
            bi.rerouted(Route::Hybrid(Branch::Series)),
        ))
    } else if xi <= -SWITCHOVER {
        let ai = airy_asymptotic_neg(-xi, cfg)?;
        let bi = bi_asymptotic_neg(-xi, cfg)?;
        let route = Route::Hybrid(Branch::AsymptoticNeg);
        Ok((ai.rerouted(route), bi.rerouted(route)))
    } else {
        let (ai, bi) = airy_series(xi, cfg)?;
        let route = Route::Hybrid(Branch::Series);
        Ok((ai.rerouted(route), bi.rerouted(route)))
    }
}

/// Ai alone through the hybrid evaluator.
pub fn ai(xi: f64, cfg: &SeriesConfig) -> Result<AiryValue> {
    if !xi.is_finite() {
        return Err(Error::Domain("airy argument must be finite"));
    }
    if xi >= SWITCHOVER {
        Ok(airy_asymptotic_pos(xi, cfg)?
            .0
            .rerouted(Route::Hybrid(Branch::AsymptoticPos)))
    } else if xi <= -SWITCHOVER {
        Ok(airy_asymptotic_neg(-xi, cfg)?.rerouted(Route::Hybrid(Branch::AsymptoticNeg)))
    } else {
        Ok(airy_series(xi, cfg)?
            .0
            .rerouted(Route::Hybrid(Branch::Series)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_validation() {
        use AsymptoticTruncation::*;
        assert!(SeriesConfig::new(0.0, 10, OptimalTruncation).is_err());
        assert!(SeriesConfig::new(f64::NAN, 10, OptimalTruncation).is_err());
        assert!(SeriesConfig::new(1e-12, 0, OptimalTruncation).is_err());
        assert!(SeriesConfig::new(1e-12, 10, FixedK(0)).is_err());
        assert!(SeriesConfig::new(1e-12, 10, FixedK(3)).is_ok());
    }

    #[test]
    fn stored_constants() {
        assert_eq!(AiryConstants::default().c1, 0.355028053887817);
        assert_eq!(AiryConstants::default().c2, 0.258819403792807);
    }

    #[test]
    fn hybrid_at_origin() {
        let (ai, bi) = airy(0.0, &SeriesConfig::default()).unwrap();
        assert_eq!(ai.value, 0.355028053887817);
        assert_eq!(ai.derivative, -0.258819403792807);
        assert_eq!(ai.route, Route::Hybrid(Branch::Series));
        assert!((bi.value - 0.614_926_627_446_000_7).abs() < 1e-15);
    }

    #[test]
    fn hybrid_branches() {
        let cfg = SeriesConfig::default();
        assert_eq!(
            airy(6.0, &cfg).unwrap().0.route,
            Route::Hybrid(Branch::AsymptoticPos)
        );
        assert_eq!(
            airy(-6.0, &cfg).unwrap().0.route,
            Route::Hybrid(Branch::AsymptoticNeg)
        );
        assert_eq!(
            airy(5.999, &cfg).unwrap().1.route,
            Route::Hybrid(Branch::Series)
        );
        assert_eq!(
            airy(8.0, &cfg).unwrap().1.route,
            Route::Hybrid(Branch::Series)
        );
        assert_eq!(
            airy(12.0, &cfg).unwrap().1.route,
            Route::Hybrid(Branch::AsymptoticPos)
        );
        assert_eq!(
            ai(-7.0, &cfg).unwrap().route,
            Route::Hybrid(Branch::AsymptoticNeg)
        );
    }

    #[test]
    fn rejects_non_finite() {
        let cfg = SeriesConfig::default();
        assert!(matches!(airy(f64::NAN, &cfg), Err(Error::Domain(_))));
        assert!(matches!(airy(f64::INFINITY, &cfg), Err(Error::Domain(_))));
        assert!(matches!(ai(f64::NEG_INFINITY, &cfg), Err(Error::Domain(_))));
    }

    #[test]
    fn est_error_is_finite_and_non_negative() {
        let cfg = SeriesConfig::default();
        for i in -100..=100 {
            let x = i as f64 * 0.2;
            let (a, b) = airy(x, &cfg).unwrap();
            assert!(a.est_error.is_finite() && a.est_error >= 0.0);
            assert!(b.est_error.is_finite() && b.est_error >= 0.0);
        }
    }
}
